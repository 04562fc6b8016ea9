"""gemcensus: censuses of 4-colored graphs representing compact
3-manifolds with non-spherical boundary."""

from gemcensus._kernel import BACKEND as KERNEL_BACKEND
from gemcensus.catalog import (
    CatalogRecord,
    read_catalog,
    record_from_code,
    record_from_graph,
    write_catalog,
)
from gemcensus.census import (
    CensusFilter,
    CyclePartition,
    SurfaceGraph,
    SurfaceGraphSet,
    build_surface_set,
    census_codes,
    enumerate_census,
    generate_two_colored,
)
from gemcensus.code import CodeError, GemCode, canonical_code, decode, encode_labeled
from gemcensus.core import (
    COLORS,
    AbelianGroup,
    BoundaryProfile,
    ColoredGraph,
    Residue,
    SurfaceType,
    boundary_profile,
    complement,
    first_homology,
    g_vector,
    is_bipartite,
    is_contracted,
    residues,
    surface_type,
)
from gemcensus.moves import (
    Dipole,
    Rho3Classification,
    RhoPair,
    cancel_dipole,
    classify_rho3_switch,
    find_dipoles,
    find_rho_pairs,
    insert_two_dipole,
    is_good_rho2,
    is_good_rho3,
    is_proper,
    is_rigid,
    join_with_one_dipole,
    pair_at,
    rho3_index,
    switch,
)

__version__ = "0.1.0"
