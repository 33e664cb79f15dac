"""Filling pairs on closed orientable surfaces, represented as permutations."""

from .perm import CycleParseError, Permutation, format_cycles, parse_cycles
from .filling import (
    AlternationViolation,
    EdgeInfo,
    EquationViolation,
    FillingError,
    FillingPermutation,
    SizeNotMultipleOf4,
    SurfaceInfo,
    ZType,
    big_q,
    edge_info,
    edge_number,
    is_valid,
    opposite,
    tau,
    validate,
)
from .twist import (
    GroupTooLarge,
    TwistGroup,
    are_equivalent,
    canonical_form,
    generators,
    twist_group,
)
from .surgery import (
    ArrangementImpossible,
    AssemblyMap,
    AttachmentSite,
    CaseGap,
    ChordsCross,
    DecoratedDisassemblyMap,
    Decomposition,
    DisassemblyMap,
    NoConjugacyFound,
    NotAVertexAnchor,
    RoundTripReport,
    SurgeryError,
    arrange_piece_cycles,
    assemble,
    assembly_map,
    attachment_site,
    check_decomposition,
    decorated_disassembly_map,
    disassemble,
    disassembly_map,
    extract,
    find_decompositions,
    round_trip_check,
    verify_separating,
)
from .census import (
    BoundExceeded,
    CensusRecord,
    census_records,
    count_orbits,
    enumerate_filling,
    read_census,
    upper_bound,
    write_census,
)

__version__ = "0.1.0"
