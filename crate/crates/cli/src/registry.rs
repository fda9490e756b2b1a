//! Which library operation each subcommand runs.

pub const REGISTRY: &[(&str, &str)] = &[
    ("linalg rank", "rank"),
    ("linalg kernel", "kernel_basis"),
    ("linalg minor", "minor"),
    ("linalg poly-det", "poly_det"),
    ("grassmann plucker", "plucker"),
    ("grassmann is-generic", "is_generic"),
    ("grassmann matroid-bases", "matroid_bases"),
    ("grassmann intersect", "intersect_coord_hyperplane"),
    ("grassmann project", "project_away"),
    ("grassmann gm-config", "gm_configuration"),
    ("hypersimplex vertices", "hypersimplex_vertices"),
    ("hypersimplex facet", "facet"),
    ("hypersimplex is-matroid-polytope", "is_matroid_polytope"),
    ("hypersimplex matroid-polytope", "matroid_polytope_of"),
    ("hypersimplex volume", "normalized_volume"),
    ("hypersimplex validate-decomposition", "is_matroid_decomposition"),
    ("hypersimplex restrict", "restrict_to_facet"),
    ("trees vertex-relation", "vertex_relation"),
    ("trees to-decomposition", "tree_to_decomposition"),
    ("trees from-decomposition", "decomposition_to_tree"),
    ("trees enumerate", "enumerate_trees"),
    ("trees stable", "is_stable_tree"),
    ("trees dimension", "stratum_dimension"),
    ("trees forget", "forget_point"),
    ("secondary char-function", "char_function"),
    ("secondary triangulations", "enumerate_triangulations"),
    ("secondary vertices", "secondary_vertices"),
    ("secondary prism", "prism_standard_triangulation"),
    ("secondary prism-perm", "prism_triangulation_of_permutation"),
    ("secondary permutohedron", "permutohedron_vertices"),
    ("config general-position", "is_general_position"),
    ("config cross-ratio", "cross_ratio"),
    ("config associate", "associate"),
    ("config is-circuit", "is_circuit"),
    ("config normal-form6", "six_point_normal_form"),
    ("config psi", "psi"),
    ("config conic-test", "lies_on_conic"),
    ("veronese gauss", "log_gauss"),
    ("veronese pluckerpolys", "plucker_polys"),
    ("veronese marked-point", "marked_point"),
    ("veronese steiner", "steiner_matrix"),
    ("veronese sweep-matrix", "sweep_matrix"),
    ("veronese sweep-test", "on_sweep"),
    ("veronese tangent-rank", "tangent_system_rank"),
    ("veronese tetra", "tetrahedral_ratio"),
    ("schubert conjugate", "conjugate"),
    ("schubert heights", "heights"),
    ("schubert schur-dim", "schur_dim"),
    ("schubert kostka", "kostka"),
    ("schubert lr", "littlewood_richardson"),
    ("schubert pushforward", "direct_sum_pushforward"),
    ("schubert weight-of-subset", "weight_of_subset"),
    ("schubert component-class", "component_class"),
    ("schubert veronese-class", "veronese_class"),
    ("schubert klyachko-class", "klyachko_contour_class"),
    ("schubert lie-class", "lie_complex_class"),
    ("schubert crosscheck", "crosscheck"),
    ("selftest", "acceptance::run_all"),
];

pub fn operation(path: &str) -> Option<&'static str> {
    REGISTRY.iter().find(|(p, _)| *p == path).map(|(_, op)| *op)
}
