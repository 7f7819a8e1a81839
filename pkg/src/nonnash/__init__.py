"""Nashian and non-Nashian solution concepts for finite normal-form games.

The library computes pure Nash equilibria, Hofstadter (superrational)
equilibria of symmetric games, iterated minimax-dominance elimination and
the profiles surviving it, maximin values, and individually rational
profiles; reads and writes a canonical text format; and runs deterministic
randomized sweeps that cross-check the solvers against each other.
"""

from .catalog import chicken, coordination, elimination_ladder, prisoners_dilemma
from .errors import (
    BadRange,
    DeadStrategy,
    DuplicateCell,
    DuplicateLabel,
    EmptySurvivorSet,
    FormatError,
    GameError,
    GnfSyntaxError,
    IndexOutOfRange,
    InvalidGame,
    InvalidLabel,
    MissingCell,
    NotSymmetric,
    PayoffOutOfRange,
    SizeGuardExceeded,
    UnknownFormat,
    VersionUnsupported,
)
from .game_core import (
    MAX_ENTRIES,
    Game,
    Profile,
    Survivors,
    diagonal_profiles,
    format_profile,
    full_sets,
    is_symmetric,
    new_game,
    payoff,
    profiles,
    restrict,
)
from .game_io import (
    AnalysisReport,
    GameDocument,
    build_report,
    parse_game,
    render_report,
    render_sweep_report,
    serialize_game,
)
from .rng import SplitMix64, derive_seed
from .solvers import (
    EliminationTrace,
    MaximinVector,
    eliminate_round,
    hofstadter_equilibria,
    individually_rational_profiles,
    is_minimax_dominated,
    iterate_elimination,
    maximin_values,
    minimax_rationalizable_profiles,
    pure_nash,
)
from .verify import (
    ALL_PROPERTIES,
    RegionTag,
    SweepConfig,
    SweepReport,
    Verdict,
    check_hofstadter_individually_rational,
    check_hofstadter_rationalizable,
    check_ir_survives_round1,
    check_order_independence,
    classify_regions,
    gen_random_game,
    gen_random_symmetric_game,
    strict_inclusion_witnesses,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_PROPERTIES",
    "AnalysisReport",
    "BadRange",
    "DeadStrategy",
    "DuplicateCell",
    "DuplicateLabel",
    "EliminationTrace",
    "EmptySurvivorSet",
    "FormatError",
    "Game",
    "GameDocument",
    "GameError",
    "GnfSyntaxError",
    "IndexOutOfRange",
    "InvalidGame",
    "InvalidLabel",
    "MAX_ENTRIES",
    "MaximinVector",
    "MissingCell",
    "NotSymmetric",
    "PayoffOutOfRange",
    "Profile",
    "RegionTag",
    "SizeGuardExceeded",
    "SplitMix64",
    "Survivors",
    "SweepConfig",
    "SweepReport",
    "UnknownFormat",
    "Verdict",
    "VersionUnsupported",
    "build_report",
    "check_hofstadter_individually_rational",
    "check_hofstadter_rationalizable",
    "check_ir_survives_round1",
    "check_order_independence",
    "chicken",
    "classify_regions",
    "coordination",
    "derive_seed",
    "diagonal_profiles",
    "elimination_ladder",
    "eliminate_round",
    "format_profile",
    "full_sets",
    "gen_random_game",
    "gen_random_symmetric_game",
    "hofstadter_equilibria",
    "individually_rational_profiles",
    "is_minimax_dominated",
    "is_symmetric",
    "iterate_elimination",
    "maximin_values",
    "minimax_rationalizable_profiles",
    "new_game",
    "parse_game",
    "payoff",
    "prisoners_dilemma",
    "profiles",
    "pure_nash",
    "render_report",
    "render_sweep_report",
    "restrict",
    "serialize_game",
    "strict_inclusion_witnesses",
    "sweep",
]
