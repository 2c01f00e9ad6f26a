"""2D narrow-phase collision detection and distance queries for convex polygons.

The distance query runs a GJK loop whose subdistance step classifies the
origin against the working simplex with a 3-bit barycentric region code;
the binary collision query adds two cheap early exits. A separating-axis
baseline, a brute-force distance oracle, a deterministic dataset
generator, and a benchmark CLI round out the package.
"""

from .baseline import (
    ClosestFeature,
    OracleReport,
    cso_contains_origin,
    oracle_distance,
    point_segment_distance,
    sat_intersects,
)
from .bench import Algorithm, BenchRecord, records_to_csv, run_benchmark
from .datasets import (
    DatasetError,
    DatasetHeader,
    DatasetSpec,
    PairCase,
    PolygonGenerationFailed,
    Regime,
    RegimeConstructionFailed,
    convex_hull,
    derive_case_seed,
    generate_dataset,
    make_pair,
    random_convex_polygon,
    read_dataset,
    verify_regime,
    write_dataset,
)
from .geometry import (
    ConvexPolygon,
    FewerThanThreeVertices,
    NonFiniteCoordinate,
    NotCounterClockwise,
    NotStrictlyConvex,
    PolygonError,
    Transform2,
    Vec2,
    apply_transform,
    contains_point,
    cross,
    dot,
    polygon_from_jsonable,
    polygon_to_jsonable,
    validate_polygon,
)
from .gjk import (
    CollisionExit,
    CollisionResult,
    DistanceResult,
    QueryOptions,
    Termination,
    distance,
    intersects,
    touching_or_overlapping,
    witness_points,
)
from .subdistance import (
    DegenerateTriangle,
    Simplex,
    SubdistanceResult,
    compute_barycode,
    cone_region,
    point_in_triangle,
    s1d,
    s2d,
    subdistance,
)
from .support import (
    SimplexVertex,
    SupportResult,
    cso_support,
    initial_direction,
    support_brute,
    support_hill_climb,
)

__version__ = "0.1.0"
