"""One function per CLI command; each returns a :class:`~foliamod.io.report.Report`."""

from foliamod.commands.darboux import cmd_darboux_scan, parse_complex_pair, parse_k_grid
from foliamod.commands.fiber import cmd_fiber_search
from foliamod.commands.generate import cmd_random
from foliamod.commands.holonomy import cmd_holonomy
from foliamod.commands.rank import cmd_dimension, cmd_rank
from foliamod.commands.singular import cmd_indices, cmd_singular
from foliamod.commands.verify import cmd_verify

__all__ = [
    "cmd_darboux_scan",
    "cmd_dimension",
    "cmd_fiber_search",
    "cmd_holonomy",
    "cmd_indices",
    "cmd_random",
    "cmd_rank",
    "cmd_singular",
    "cmd_verify",
    "parse_complex_pair",
    "parse_k_grid",
]
