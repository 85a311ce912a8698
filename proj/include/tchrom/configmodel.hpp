#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tchrom/combinat.hpp"
#include "tchrom/report.hpp"

namespace tchrom {

/// A row of `length` boxes with some of them marked; marks are the
/// strictly increasing 1-based positions of the marked boxes.
class Configuration {
public:
    Configuration() = default;
    /// Throws std::invalid_argument unless 1 <= marks[0] < ... <= length.
    Configuration(int length, std::vector<int> marks);

    int length() const noexcept { return length_; }
    const std::vector<int>& marks() const noexcept { return marks_; }
    int mark_count() const noexcept { return static_cast<int>(marks_.size()); }
    int mark(std::size_t j) const { return marks_.at(j - 1); }  // 1-based

    /// "(2,4)/6": marked positions, then the row length.
    std::string to_string() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;

private:
    int length_ = 0;
    std::vector<int> marks_;
};

/// All C(n,s) configurations, marks in lexicographic order.
void for_each_configuration(int n, int s, const std::function<void(const Configuration&)>& fn);
std::vector<Configuration> enumerate_configurations(int n, int s);

/// Barrier at s+k+1-2j is unmarked, with s-j marks left of it and j right.
bool satisfies_j_condition(const Configuration& g, int s, int k, int j);

struct BCount {
    Int brute = 0;
    Int closed = 0;
};
/// Configurations satisfying the j-condition, counted both ways; throws
/// ConsistencyError (quoting both numbers) if they differ.
BCount count_B(int n, int s, int k, int j);
Int count_B_closed(int n, int s, int k, int j);

/// Configurations satisfying at least l of the conditions j = 0..s.
Int count_K(int n, int s, int k, int l);

/// Number of marks j with position != b0 + 2j - 1.
int nat(const Configuration& g, int b0);

/// s-mark configurations of length n with exactly i marks not at home.
Int count_T(int n, int s, int i, int b0);

/// 1 for i = 0, otherwise C(n,i) - C(n,i-1).
Int closed_T(int n, int i);

/// Checks (number of satisfied conditions) = s+1-nat with b0 = k-s+1 for
/// every configuration. On failure, stores the first offender.
bool conditions_vs_nat(int n, int s, int k, Configuration* counterexample = nullptr);

/// Maps T(n,s,i,b0) onto T(n,s,i,b0+1) by reflecting the trailing block
/// of marks that have too little room on their right.
Configuration b0_shift_bijection(const Configuration& g, int s, int b0);

/// Maps T(2i,i,i,1) onto T(2i-1,i-1,i-1,1). Throws ConsistencyError if
/// the first box is unmarked.
Configuration special_bijection(const Configuration& g, int i);

/// g (length 2s, s marks) followed by h.
Configuration concat(const Configuration& g, const Configuration& h);

/// Configurations in T(2l,l,l-1,1) whose last mark is at l+i+1. Throws
/// ConsistencyError unless this equals count_T(l+i,i,i,1).
Int count_by_last_mark(int l, int i);

/// One report per recursion family, exhaustive up to n_max.
std::vector<VerificationReport> verify_recursions(int n_max);

/// The barrier-count identity for one (n,s,k): arithmetic form, the
/// B/K double count, and K_{s+1-l} = C(n,l).
bool verify_binomial_identity(int n, int s, int k);

/// verify_binomial_identity for all n <= n_max, s <= k <= (n-1)/2, plus
/// independence of the right-hand side from k.
VerificationReport verify_binomial_identity_sweep(int n_max);

}  // namespace tchrom
