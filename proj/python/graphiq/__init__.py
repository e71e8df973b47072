"""Graph-based facial expression classification on a simulated quantum circuit."""

from graphiq._core import (
    AdjacencyVector,
    AmplitudeVector,
    CircuitFragment,
    ContractError,
    DegenerateInputError,
    EncodingError,
    ParseError,
    PointCloud,
    PostSelectionError,
    WeightedGraph,
    adjacency_vector,
    classify_single_face,
    complete_graph,
    delaunay_graph,
    edge_index,
    encode,
    exact_class_probability,
    extract_mouth,
    frobenius_distance,
    load_landmarks,
    run_experiment,
    sample_vertex_indices,
    save_landmarks,
    select_vertices,
    synthesize_face,
    synthesize_state_prep,
)

__all__ = [
    "AdjacencyVector",
    "AmplitudeVector",
    "CircuitFragment",
    "ContractError",
    "DegenerateInputError",
    "EncodingError",
    "ParseError",
    "PointCloud",
    "PostSelectionError",
    "WeightedGraph",
    "adjacency_vector",
    "classify_single_face",
    "complete_graph",
    "delaunay_graph",
    "edge_index",
    "encode",
    "exact_class_probability",
    "extract_mouth",
    "frobenius_distance",
    "load_landmarks",
    "run_experiment",
    "sample_vertex_indices",
    "save_landmarks",
    "select_vertices",
    "synthesize_face",
    "synthesize_state_prep",
]

__version__ = "0.1.0"
