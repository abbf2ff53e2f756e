"""Fields with the three invariant lines ``x = 0``, ``y = 0``, ``x + y = 1``."""

from __future__ import annotations

from dataclasses import dataclass

from foliamod.core.errors import InputRejected
from foliamod.core.models import Line
from foliamod.foliation.field import VectorField
from foliamod.numkernel.linalg import eig2
from foliamod.numkernel.poly import Scalar, X, Y

ANCHORS: dict[str, tuple[complex, complex]] = {
    "(0,0)": (0j, 0j),
    "(1,0)": (1 + 0j, 0j),
    "(0,1)": (0j, 1 + 0j),
}

LINES: dict[str, Line] = {
    "y=0": Line(0, 1, 0),
    "x=0": Line(1, 0, 0),
    "x+y=1": Line(1, 1, -1),
}


def three_line_field(a: Scalar, b: Scalar, c: Scalar) -> VectorField:
    """Field with first integral ``x^a·y^b·(x + y − 1)^c``.

    ``v = (x(b(x+y−1) + c·y), −y(a(x+y−1) + c·x))``.
    """
    if a == 0 and b == 0 and c == 0:
        raise InputRejected("three-line exponents are all zero")
    ell = X + Y - 1
    p = X * (ell * b + Y * c)
    q = -(Y * (ell * a + X * c))
    return VectorField(p, q)


@dataclass(frozen=True)
class AnchorEigendata:
    eigenvalues: tuple[complex, complex]

    @property
    def ratios(self) -> tuple[complex, complex]:
        lam, mu = self.eigenvalues
        return lam / mu, mu / lam


@dataclass(frozen=True)
class ThreeLineEigendata:
    """Eigen-data at the anchors plus the closed-form ratios along each line."""

    anchors: dict[str, AnchorEigendata]
    line_ratios: dict[str, tuple[complex, complex, complex]]
    infinity_ratios: dict[str, complex]

    def signature(self) -> tuple[complex, ...]:
        """Flat tuple of every anchor eigenvalue, for injectivity checks."""
        return tuple(e for key in ANCHORS for e in self.anchors[key].eigenvalues)


def three_line_eigendata(a: Scalar, b: Scalar, c: Scalar) -> ThreeLineEigendata:
    """Linear data of the three-line field at ``(0,0)``, ``(1,0)``, ``(0,1)``.

    Anchor eigenvalues are computed from the field's Jacobians; the per-line
    ratios follow from them and the Camacho–Sad relation along each line.
    """
    a, b, c = complex(a), complex(b), complex(c)
    v = three_line_field(a, b, c)
    anchors = {key: AnchorEigendata(eig2(v.jacobian(*point))) for key, point in ANCHORS.items()}
    s = a + b + c
    line_ratios = {
        "y=0": (-a / b, -c / b, s / b),
        "x=0": (-b / a, -c / a, s / a),
        "x+y=1": (-a / c, -b / c, s / c),
    }
    infinity_ratios = {"[1:0]": b / s, "[0:1]": a / s, "[1:-1]": c / s}
    return ThreeLineEigendata(anchors, line_ratios, infinity_ratios)
