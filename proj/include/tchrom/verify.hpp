#pragma once

#include <vector>

#include "tchrom/corpus.hpp"
#include "tchrom/qpoly.hpp"
#include "tchrom/report.hpp"

namespace tchrom {

/// One instance; on mismatch records the lowest differing power of q.
void check_poly(VerificationReport& r, Params params, const QPolynomial& expected, const QPolynomial& actual);

// Exhaustive sweeps behind the `verify` command. Each returns one report
// per family of checked statements.

std::vector<VerificationReport> sweep_binomial_identity(int max_n);
std::vector<VerificationReport> sweep_config_model(int max_n);
/// Every labeled tree on up to max_n vertices.
std::vector<VerificationReport> sweep_tree_formula(int max_n);
/// Near-contraction identities on connected graphs up to max_n vertices.
std::vector<VerificationReport> sweep_near_contraction(int max_n);
/// Product formulas for G disjoint-union H, |G| + |H| <= max_n.
std::vector<VerificationReport> sweep_disjoint_union(int max_n);
/// Star closed forms against brute force, n <= max_n.
std::vector<VerificationReport> sweep_star_closed_forms(int max_n);

/// Palindromicity, reversal and top-coefficient statements for both total
/// functions, plus both near-contraction identities, on every graph given.
std::vector<VerificationReport> structural_checks(const std::vector<NamedGraph>& corpus);
std::vector<VerificationReport> disjoint_union_checks(const std::vector<NamedGraph>& components, int max_total);

}  // namespace tchrom
