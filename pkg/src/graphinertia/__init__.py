"""Exact adjacency inertia, congruent vertex transformations and the
classification of graphs with two positive eigenvalues and nullity one."""

from .errors import InternalError, InvalidArgument, NumericFailure, UnsupportedOrder
from .graph import (BkSpec, CanonicalDecomposition, Graph, canonical_decomposition, complete,
                    complete_multipartite, components, cycle, disjoint_union, empty, gn,
                    induced_subgraph, is_connected, k_joining, lex_product, min_degree, path,
                    pendant_vertices, realize_bk, star)
from .iso import contains_induced, isomorphic
from .spectra import Inertia, SpectrumF, eigenvalues_float, inertia_exact, inertia_float, multipartite_inertia
from .transforms import (TransformCertificate, TransformKind, add_type1, add_type2, add_type3,
                         delete_congruent, find_type1, find_type2, find_type3)

__version__ = "0.1.0"
