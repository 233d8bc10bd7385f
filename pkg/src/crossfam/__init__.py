"""crossfam: crossing and intersecting families in complete geometric graphs.

Exact-integer constructions of pattern families (paths, stars, cliques) whose
members pairwise cross or intersect, verification of such families, and
exhaustive small-case search over point configurations.
"""

from .geom import (
    CCW,
    CW,
    COLLINEAR,
    GeomError,
    Line,
    Point,
    PointSet,
    Segment,
    Subgraph,
    avoids,
    convex_hull,
    has_rank_condition,
    is_general_position,
    orientation,
    rank_sequence,
    segments_cross,
    side_counts,
    subgraphs_cross,
    subgraphs_intersect,
)
from .partitions import (
    SearchError,
    ceder_six_sectors,
    corner_bound,
    four_corner_partition,
    halving_line,
    megiddo_line,
    monotone_subsequence,
    parallel_partition_six,
)
from .construct import (
    Family,
    bipartite_p3_crossing_bound,
    intersecting_p3_bound,
    k13_crossing_family,
    k1t_crossing_family,
    k1t_intersecting_bound,
    k1t_intersecting_family,
    k3_intersecting_family,
    k4_crossing_family,
    kt_crossing_bound,
    kt_crossing_family,
    p3_crossing_bound,
    p3_crossing_family,
    p3_crossing_family_bipartite,
    p3_intersecting_family,
    p3_intersecting_family_bipartite,
)
from .verify import VerifyResult, verify_family
from .solve import (
    ConvexResult,
    SolveResult,
    enumerate_copies,
    family_sizes_consistent,
    max_convex_subset,
    max_crossing_family,
    max_intersecting_family,
)
from .otdb import (
    ORDER_TYPE_DB_ENV,
    OrderTypeDb,
    OrderTypeError,
    OrderTypeRecord,
    find_db,
    open_db,
)
from .scan import ScanReport, scan_order_types
from .gen import generate
from .render import render_svg
from .serialize import (
    FormatError,
    dump_json,
    family_from_dict,
    family_to_dict,
    load_json,
    pointset_from_dict,
    pointset_to_dict,
)

__version__ = "0.1.0"
