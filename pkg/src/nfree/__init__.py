"""Minimal N-free barycentric extensions of finite posets."""

from .errors import (
    BoundExceeded,
    CycleError,
    DuplicateElement,
    InvalidLabel,
    InvalidScript,
    MinimalityViolation,
    NotACoverEdge,
    ParseError,
    PosetError,
    UnknownElement,
)
from .formats import PosetDocument, emit_dot, load_poset, parse_poset, serialize_poset
from .npattern import (
    NForm,
    NWitness,
    a_set,
    find_ns,
    is_cac,
    is_n_free,
    is_series_parallel,
    n_diag,
    nd_diag,
)
from .oracle import (
    EnumerationSpec,
    confluence_fuzz,
    enumerate_posets,
    minimality_oracle,
)
from .poset import (
    Dummy,
    Edge,
    Original,
    Poset,
    VertexId,
    dual,
    equals,
    from_relation,
    maximal_antichains,
    maximal_chains,
)
from .subdivision import (
    Lexicographic,
    RunTrace,
    Scripted,
    SeededRandom,
    full_subdivision,
    grillet_closure,
    nd_closure,
    s_n,
    sequential_closure,
    subdivide,
)

__version__ = "0.1.0"
