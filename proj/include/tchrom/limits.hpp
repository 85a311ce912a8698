#pragma once

namespace tchrom {

/// Enumeration guardrails. Defaults are safe for desk-scale runs; the
/// TCHROM_MAX_N environment variable raises or lowers every vertex cap
/// at once.
struct Limits {
    int max_labeling_vertices = 8;     // enumerate_labelings
    int max_total_label_vertices = 7;  // total_labeling_cqsf, normalized_total_star
    int max_coloring_vertices = 8;     // csf / cqsf brute force
    int max_orientation_edges = 22;    // enumerate_acyclic_orientations
    int max_tree_vertices = 8;         // enumerate_trees
};

/// Process-wide limits, seeded from TCHROM_MAX_N at startup. Not
/// synchronized: call set_limits before starting worker threads.
const Limits& limits();
void set_limits(const Limits& l);

}  // namespace tchrom
