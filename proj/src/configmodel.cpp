#include "tchrom/configmodel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "tchrom/error.hpp"

namespace tchrom {

Configuration::Configuration(int length, std::vector<int> marks) : length_(length), marks_(std::move(marks)) {
    if (length_ < 0) throw std::invalid_argument("configuration length must be non-negative");
    for (std::size_t j = 0; j < marks_.size(); ++j) {
        if (marks_[j] < 1 || marks_[j] > length_ || (j > 0 && marks_[j] <= marks_[j - 1]))
            throw std::invalid_argument("configuration marks must be strictly increasing in 1.." +
                                        std::to_string(length_));
    }
}

std::string Configuration::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < marks_.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(marks_[j]);
    }
    return s + ")/" + std::to_string(length_);
}

void for_each_configuration(int n, int s, const std::function<void(const Configuration&)>& fn) {
    if (s < 0 || s > n) return;
    std::vector<int> m(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) m[static_cast<std::size_t>(j)] = j + 1;
    while (true) {
        fn(Configuration(n, m));
        int j = s - 1;
        while (j >= 0 && m[static_cast<std::size_t>(j)] == n - s + j + 1) --j;
        if (j < 0) return;
        ++m[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < s; ++t) m[static_cast<std::size_t>(t)] = m[static_cast<std::size_t>(t - 1)] + 1;
    }
}

std::vector<Configuration> enumerate_configurations(int n, int s) {
    std::vector<Configuration> out;
    for_each_configuration(n, s, [&](const Configuration& g) { out.push_back(g); });
    return out;
}

namespace {

void require_model(int n, int s, int k) {
    if (s < 0 || s > k || k > (n - 1) / 2)
        throw std::invalid_argument("need 0 <= s <= k <= (n-1)/2, got n=" + std::to_string(n) +
                                    " s=" + std::to_string(s) + " k=" + std::to_string(k));
}

void require_home_range(int n, int s, int b0) {
    if (b0 < 1 || b0 + 2 * s - 1 > n)
        throw std::invalid_argument("b0=" + std::to_string(b0) + " outside [1, " + std::to_string(n - 2 * s + 1) +
                                    "] for n=" + std::to_string(n) + " s=" + std::to_string(s));
}

bool j_condition(const std::vector<int>& marks, int s, int k, int j) {
    const int p = s + k + 1 - 2 * j;
    int left = 0;
    for (int x : marks) {
        if (x == p) return false;
        if (x < p) ++left;
    }
    return left == s - j;
}

int satisfied_conditions(const std::vector<int>& marks, int s, int k) {
    int c = 0;
    for (int j = 0; j <= s; ++j) c += j_condition(marks, s, k, j) ? 1 : 0;
    return c;
}

// B_j (brute) for j = 0..s and, at index t, the number of configurations
// satisfying exactly t conditions.
struct ConditionProfile {
    std::vector<Int> b;
    std::vector<Int> exactly;
};

ConditionProfile condition_profile(int n, int s, int k) {
    ConditionProfile p{std::vector<Int>(static_cast<std::size_t>(s) + 1, 0),
                       std::vector<Int>(static_cast<std::size_t>(s) + 2, 0)};
    for_each_configuration(n, s, [&](const Configuration& g) {
        int c = 0;
        for (int j = 0; j <= s; ++j) {
            if (j_condition(g.marks(), s, k, j)) {
                ++p.b[static_cast<std::size_t>(j)];
                ++c;
            }
        }
        ++p.exactly[static_cast<std::size_t>(c)];
    });
    return p;
}

Int at_least(const ConditionProfile& p, int l) {
    Int total = 0;
    for (std::size_t t = static_cast<std::size_t>(std::max(l, 0)); t < p.exactly.size(); ++t) total += p.exactly[t];
    return total;
}

// Histogram of nat over all s-mark configurations, indexed by nat.
std::vector<Int> nat_histogram(int n, int s, int b0) {
    std::vector<Int> h(static_cast<std::size_t>(s) + 1, 0);
    for_each_configuration(n, s, [&](const Configuration& g) { ++h[static_cast<std::size_t>(nat(g, b0))]; });
    return h;
}

}  // namespace

bool satisfies_j_condition(const Configuration& g, int s, int k, int j) {
    require_model(g.length(), s, k);
    if (g.mark_count() != s) throw std::invalid_argument("configuration does not have s marks");
    if (j < 0 || j > s) throw std::invalid_argument("j outside [0, s]");
    return j_condition(g.marks(), s, k, j);
}

Int count_B_closed(int n, int s, int k, int j) {
    require_model(n, s, k);
    if (j < 0 || j > s) throw std::invalid_argument("j outside [0, s]");
    return checked_mul(binomial(s + k - 2 * j, s - j), binomial(n - 1 - s - k + 2 * j, j));
}

BCount count_B(int n, int s, int k, int j) {
    BCount out;
    out.closed = count_B_closed(n, s, k, j);
    for_each_configuration(n, s, [&](const Configuration& g) { out.brute += j_condition(g.marks(), s, k, j) ? 1 : 0; });
    if (out.brute != out.closed)
        throw ConsistencyError("B count mismatch at n=" + std::to_string(n) + " s=" + std::to_string(s) +
                               " k=" + std::to_string(k) + " j=" + std::to_string(j) + ": brute " +
                               std::to_string(out.brute) + ", closed " + std::to_string(out.closed));
    return out;
}

Int count_K(int n, int s, int k, int l) {
    require_model(n, s, k);
    if (l < 1 || l > s + 1) throw std::invalid_argument("l outside [1, s+1]");
    Int total = 0;
    for_each_configuration(n, s, [&](const Configuration& g) { total += satisfied_conditions(g.marks(), s, k) >= l; });
    return total;
}

int nat(const Configuration& g, int b0) {
    require_home_range(g.length(), g.mark_count(), b0);
    int count = 0;
    for (int j = 1; j <= g.mark_count(); ++j) count += g.mark(static_cast<std::size_t>(j)) != b0 + 2 * j - 1;
    return count;
}

Int count_T(int n, int s, int i, int b0) {
    require_home_range(n, s, b0);
    if (i < 0 || i > s) throw std::invalid_argument("i outside [0, s]");
    return nat_histogram(n, s, b0)[static_cast<std::size_t>(i)];
}

Int closed_T(int n, int i) {
    if (i < 0 || i > n / 2) throw std::invalid_argument("i outside [0, n/2]");
    return i == 0 ? 1 : binomial(n, i) - binomial(n, i - 1);
}

bool conditions_vs_nat(int n, int s, int k, Configuration* counterexample) {
    require_model(n, s, k);
    const int b0 = k - s + 1;
    bool ok = true;
    for_each_configuration(n, s, [&](const Configuration& g) {
        if (!ok) return;
        if (satisfied_conditions(g.marks(), s, k) != s + 1 - nat(g, b0)) {
            ok = false;
            if (counterexample) *counterexample = g;
        }
    });
    return ok;
}

Configuration b0_shift_bijection(const Configuration& g, int s, int b0) {
    const int n = g.length();
    if (g.mark_count() != s) throw std::invalid_argument("configuration does not have s marks");
    if (b0 < 1 || b0 + 2 * s - 1 > n - 1)
        throw PreconditionViolation("b0 shift needs b0 + 2s <= n, got n=" + std::to_string(n) +
                                    " s=" + std::to_string(s) + " b0=" + std::to_string(b0));
    // j0: rightmost mark with more than 2(s-j) boxes after it.
    int j0 = 0;
    for (int j = s; j >= 1; --j) {
        if (n - g.mark(static_cast<std::size_t>(j)) > 2 * (s - j)) {
            j0 = j;
            break;
        }
    }
    const int m = s - j0;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j) {
        const int x = g.mark(static_cast<std::size_t>(j));
        out.push_back(j > j0 ? 1 + (n - x) : x + 2 * m + 1);
    }
    std::sort(out.begin(), out.end());
    return Configuration(n, std::move(out));
}

Configuration special_bijection(const Configuration& g, int i) {
    if (i < 1 || g.length() != 2 * i || g.mark_count() != i)
        throw std::invalid_argument("special_bijection needs i >= 1 marks in a row of 2i boxes");
    if (g.mark(1) != 1)
        throw ConsistencyError("special_bijection: first box of " + g.to_string() + " is unmarked");
    // Smallest prefix of j marks fitting exactly in the first 2j boxes.
    int j = 1;
    while (j < i && g.mark(static_cast<std::size_t>(j + 1)) <= 2 * j) ++j;
    std::vector<int> moved;
    for (int t = 1; t <= i; ++t) {
        const int x = g.mark(static_cast<std::size_t>(t));
        moved.push_back(t <= j ? x : 2 * i - (x - 2 * j) + 1);
    }
    std::sort(moved.begin(), moved.end());
    std::vector<int> out;
    for (std::size_t t = 1; t < moved.size(); ++t) out.push_back(moved[t] - 1);
    return Configuration(2 * i - 1, std::move(out));
}

Configuration concat(const Configuration& g, const Configuration& h) {
    if (g.length() != 2 * g.mark_count())
        throw std::invalid_argument("concat: left configuration must have length 2s with s marks");
    std::vector<int> marks(g.marks());
    for (int x : h.marks()) marks.push_back(x + g.length());
    return Configuration(g.length() + h.length(), std::move(marks));
}

Int count_by_last_mark(int l, int i) {
    if (i < 0 || i >= l) throw std::invalid_argument("count_by_last_mark needs 0 <= i < l");
    Int count = 0;
    for_each_configuration(2 * l, l, [&](const Configuration& g) {
        if (nat(g, 1) == l - 1 && g.marks().back() == l + i + 1) ++count;
    });
    const Int expected = count_T(l + i, i, i, 1);
    if (count != expected)
        throw ConsistencyError("last-mark count mismatch at l=" + std::to_string(l) + " i=" + std::to_string(i) +
                               ": counted " + std::to_string(count) + ", T gives " + std::to_string(expected));
    return count;
}

std::vector<VerificationReport> verify_recursions(int n_max) {
    if (n_max > 16) throw CapExceeded("verify_recursions: n_max above 16");
    std::map<std::tuple<int, int, int>, std::vector<Int>> cache;
    auto T = [&](int n, int s, int i, int b0 = 1) -> Int {
        auto key = std::make_tuple(n, s, b0);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, nat_histogram(n, s, b0)).first;
        return it->second.at(static_cast<std::size_t>(i));
    };

    VerificationReport rec{"recursion"}, red{"s-reduction"}, diag{"s-reduction-diagonal"},
        even{"even-length-diagonal"}, special{"special-case"}, zero{"zero-marks"}, shift{"b0-independence"};
    for (int n = 1; n <= n_max; ++n) {
        for (int s = 1; s <= (n - 1) / 2; ++s)
            for (int i = 1; i <= s; ++i)
                rec.check({{"n", n}, {"s", s}, {"i", i}}, T(n - 1, s, i) + T(n - 1, s - 1, i - 1), T(n, s, i));
        for (int s = 0; s < n / 2; ++s) {
            for (int i = 0; i < s; ++i) red.check({{"n", n}, {"s", s}, {"i", i}}, T(n, s + 1, i), T(n, s, i));
            diag.check({{"n", n}, {"s", s}}, T(n, s + 1, s), T(n, s, s));
        }
        if (n % 2 == 0) {
            const int l = n / 2;
            even.check({{"l", l}}, T(n, l - 1, l - 1), T(n, l, l - 1));
            special.check({{"i", l}}, T(n - 1, l - 1, l - 1), T(n, l, l));
        }
        zero.check({{"n", n}}, 1, T(n, 0, 0));
        for (int s = 0; s <= n / 2; ++s)
            for (int b0 = 2; b0 <= n - 2 * s + 1; ++b0)
                for (int i = 0; i <= s; ++i)
                    shift.check({{"n", n}, {"s", s}, {"i", i}, {"b0", b0}}, T(n, s, i, 1), T(n, s, i, b0));
    }
    return {rec, red, diag, even, special, zero, shift};
}

bool verify_binomial_identity(int n, int s, int k) {
    require_model(n, s, k);
    Int lhs = 0;
    for (int j = 0; j <= s; ++j) lhs = checked_add(lhs, count_B_closed(n, s, k, j));
    Int rhs = 0;
    for (int l = 0; l <= s; ++l) rhs = checked_add(rhs, binomial(n, l));
    if (lhs != rhs) return false;

    const auto p = condition_profile(n, s, k);
    Int b_total = 0, k_total = 0;
    for (int j = 0; j <= s; ++j) {
        if (p.b[static_cast<std::size_t>(j)] != count_B_closed(n, s, k, j)) return false;
        b_total += p.b[static_cast<std::size_t>(j)];
    }
    for (int l = 1; l <= s + 1; ++l) k_total += at_least(p, l);
    if (b_total != k_total) return false;
    for (int l = 0; l <= s; ++l)
        if (at_least(p, s + 1 - l) != binomial(n, l)) return false;
    return true;
}

VerificationReport verify_binomial_identity_sweep(int n_max) {
    VerificationReport report{"binomial-identity"};
    for (int n = 1; n <= n_max; ++n) {
        for (int s = 0; s <= (n - 1) / 2; ++s) {
            Int first_rhs = -1;
            for (int k = s; k <= (n - 1) / 2; ++k) {
                report.check({{"n", n}, {"s", s}, {"k", k}}, 1, verify_binomial_identity(n, s, k) ? 1 : 0);
                // Right-hand side recomputed from the K-counts for this k.
                const auto p = condition_profile(n, s, k);
                Int rhs = 0;
                for (int l = 1; l <= s + 1; ++l) rhs += at_least(p, l);
                if (first_rhs < 0) first_rhs = rhs;
                report.check({{"n", n}, {"s", s}, {"k", k}, {"k_independent", 1}}, first_rhs, rhs);
            }
        }
    }
    return report;
}

}  // namespace tchrom
