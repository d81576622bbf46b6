"""Graph Laplacian lambda2 multiplicity, sign-graph, tightness and Heawood-bound toolkit."""

from spectight._core import (  # noqa: F401
    Graph,
    Eigenspace,
    cartesian_product,
    check_courant,
    check_lemma1,
    complete_graph,
    critical_points,
    cycle_graph,
    export_off,
    c20_nontight_wave,
    c20_tight_wave,
    hamming_graph,
    heawood_number,
    is_connected,
    is_tight_function,
    is_tight_space,
    k7_torus_rotation,
    lambda2_eigenspace,
    natural_rotation,
    path_graph,
    run_suite,
    spectrum,
    strong_sign_graphs,
    suite_names,
    trace_embedding,
    triangular_torus_graph,
    triangular_torus_rotation,
    verify_bound,
    weak_sign_graphs,
)

__all__ = [
    "Graph",
    "Eigenspace",
    "cartesian_product",
    "check_courant",
    "check_lemma1",
    "complete_graph",
    "critical_points",
    "cycle_graph",
    "export_off",
    "c20_nontight_wave",
    "c20_tight_wave",
    "hamming_graph",
    "heawood_number",
    "is_connected",
    "is_tight_function",
    "is_tight_space",
    "k7_torus_rotation",
    "lambda2_eigenspace",
    "natural_rotation",
    "path_graph",
    "run_suite",
    "spectrum",
    "strong_sign_graphs",
    "suite_names",
    "trace_embedding",
    "triangular_torus_graph",
    "triangular_torus_rotation",
    "verify_bound",
    "weak_sign_graphs",
]

__version__ = "0.1.0"
