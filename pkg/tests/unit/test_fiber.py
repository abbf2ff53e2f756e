"""Unit tests for foliamod.moduli.fiber."""

from foliamod.core.models import RegularRep
from foliamod.io.random_fields import random_regular_rep
from foliamod.moduli.family import darboux_member
from foliamod.moduli.fiber import fiber_search, same_orbit
from foliamod.moduli.mapping import moduli_vector
from foliamod.moduli.regular import all_regular_reps, from_regular, to_regular_representative


class TestSameOrbit:
    def test_other_triple_same_orbit(self, generic_rep: RegularRep) -> None:
        reps = all_regular_reps(from_regular(generic_rep))
        assert all(same_orbit(generic_rep, r) for r in reps[:4])

    def test_scaled(self, generic_rep: RegularRep) -> None:
        scaled = RegularRep.from_coefficients(generic_rep.coefficients * (1 + 2j), pinned=3)
        assert same_orbit(generic_rep, scaled)

    def test_different_fields(self, generic_rep: RegularRep) -> None:
        assert not same_orbit(generic_rep, random_regular_rep(99))


class TestFiberSearch:
    def test_local_uniqueness(self, generic_rep: RegularRep) -> None:
        target = moduli_vector(from_regular(generic_rep))
        report = fiber_search(target, restarts=2, seed=5, start=generic_rep)
        assert report.restarts == 2
        assert report.converged >= 1
        assert len(report.solutions) == 1
        solution = report.solutions[0]
        assert same_orbit(solution.rep, generic_rep)
        assert solution.distance < 1e-8
        assert not report.blow_down

    def test_rows(self, generic_rep: RegularRep) -> None:
        target = moduli_vector(from_regular(generic_rep))
        report = fiber_search(target, restarts=1, seed=1, start=generic_rep)
        rows = report.rows()
        assert len(rows) == len(report.solutions)
        if rows:
            assert {"solution", "distance", "rank", "c0", "c5"} <= set(rows[0])

    def test_darboux_fiber_is_not_a_point(self) -> None:
        member = darboux_member(2, 0.7)
        rep, _ = to_regular_representative(member)
        report = fiber_search(moduli_vector(member), restarts=8, seed=0, start=rep)
        assert len(report.solutions) >= 3
        assert report.blow_down
