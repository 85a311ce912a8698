#pragma once

#include "tchrom/graph.hpp"
#include "tchrom/qsymfunc.hpp"

namespace tchrom {

// Brute-force definitions. Every function here enumerates proper colorings
// onto {1..l} for each l <= n and groups them by associated composition.

/// Chromatic symmetric function in the m-basis. Cross-checks that the
/// coloring counts agree across rearrangements; throws ConsistencyError
/// otherwise.
SymExpansion csf(const Graph& g);

/// M-basis expansion weighted by q^(labeled ascents).
QSymExpansion cqsf_labeled(const Graph& g, const Labeling& l);

/// M-basis expansion weighted by q^(oriented ascents).
QSymExpansion cqsf_oriented(const Graph& g, const Orientation& o);

/// Sum of cqsf_labeled over all n! labelings.
QSymExpansion total_labeling_cqsf(const Graph& g);

/// Sum of cqsf_oriented over all acyclic orientations.
QSymExpansion total_orientation_cqsf(const Graph& g);

// Stars. Vertex 0 is the root of Graph::star(n).

/// Root gets label r, leaves get the remaining labels in vertex order.
Labeling star_representative_labeling(int n, int r);

/// c^r_alpha(q): the star's M-coefficient at alpha when the root has label r.
QPolynomial star_cqsf_coeff_closed(const Composition& alpha, int r, int n);

/// m-coefficient of the star's CSF: (number of 1s) * multinomial(lambda
/// without its last part).
Int star_csf_coeff_closed(const Partition& lambda);

/// Closed form of the star's total orientation function:
/// sum_lambda star_csf_coeff_closed(lambda) (1+q)^(n-1) m_lambda.
SymExpansion total_orientation_star_closed(int n);

/// Total labeling function of the star divided by (n-1)!. Brute force;
/// throws ConsistencyError if the division is not exact.
QSymExpansion normalized_total_star(int n);

/// Same quantity as a sum over root labels r of cqsf_labeled with the
/// representative labeling.
QSymExpansion normalized_total_star_by_root(int n);

/// Closed form of the normalized total star coefficient at alpha.
QPolynomial tst_coeff_closed(const Composition& alpha, int n);

/// [q^k] of the normalized total star coefficient, via the barrier count
/// formula. Requires 0 <= k <= (n-1)/2.
Int tst_coeff_first_step(const Composition& alpha, int n, int k);

/// Part of c^r_alpha(q) coming from colorings with the root colored i
/// (1-based). Zero unless alpha_i = 1. Brute force.
QPolynomial star_root_color_slice(const Composition& alpha, int i, int r);

/// Sum over root labels r of star_root_color_slice.
QPolynomial tst_root_color_slice(const Composition& alpha, int i);

// Identity checks.

/// csf(G) = csf(G\e) - csf((G near-contracted at e) minus its leaf edge)
///        + csf(G near-contracted at e).
bool verify_csf_near_contraction(const Graph& g, Edge e);

/// Deletion/near-contraction recurrence for the total orientation
/// function. Throws PreconditionViolation unless e is internal and not on
/// a cycle.
bool verify_tcqsf_o_near_contraction(const Graph& g, Edge e);

/// Total orientation function of a tree equals (1+q)^|E| times its CSF.
/// Throws PreconditionViolation on non-trees.
bool verify_tree_formula(const Graph& g);

/// Whether the total orientation function of g is symmetric. An
/// exploration hook; no hypothesis on g is checked.
bool check_symmetry_conjecture(const Graph& g);

}  // namespace tchrom
