#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "tchrom/configmodel.hpp"
#include "tchrom/error.hpp"

using namespace tchrom;

namespace {

// Direct transcriptions of the definitions over oracle::subsets.
bool j_condition(const std::vector<int>& marks, int s, int k, int j) {
    const int p = s + k + 1 - 2 * j;
    int left = 0, right = 0;
    for (int m : marks) {
        if (m == p) return false;
        (m < p ? left : right) += 1;
    }
    return left == s - j && right == j;
}

int not_at_home(const std::vector<int>& marks, int b0) {
    int c = 0;
    for (std::size_t j = 0; j < marks.size(); ++j)
        if (marks[j] != b0 + 2 * static_cast<int>(j) + 1) ++c;
    return c;
}

Int catalan(int i) { return oracle::binom(2 * i, i) / (i + 1); }

}  // namespace

TEST_CASE("configuration validation and printing") {
    CHECK(Configuration(6, {2, 4}).to_string() == "(2,4)/6");
    CHECK(Configuration(1, {}).mark_count() == 0);
    CHECK_THROWS_AS(Configuration(6, {4, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration(6, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration(6, {2, 7}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration(6, {2, 2}), std::invalid_argument);
    CHECK(Configuration(6, {2, 4}).mark(2) == 4);
}

TEST_CASE("enumeration matches subsets in lexicographic order") {
    for (int n = 0; n <= 10; ++n)
        for (int s = 0; s <= n; ++s) {
            auto cs = enumerate_configurations(n, s);
            auto ref = oracle::subsets(n, s);
            REQUIRE(cs.size() == ref.size());
            for (std::size_t i = 0; i < cs.size(); ++i) CHECK(cs[i].marks() == ref[i]);
        }
}

TEST_CASE("j-condition examples") {
    CHECK(satisfies_j_condition(Configuration(6, {1, 2}), 2, 2, 0));
    CHECK(satisfies_j_condition(Configuration(6, {2, 4}), 2, 2, 1));
    CHECK_FALSE(satisfies_j_condition(Configuration(6, {3, 5}), 2, 2, 0));
    for (int n = 1; n <= 11; ++n)
        for (int k = 0; k <= (n - 1) / 2; ++k)
            for (int s = 0; s <= k; ++s)
                for (const auto& m : oracle::subsets(n, s))
                    for (int j = 0; j <= s; ++j)
                        CHECK(satisfies_j_condition(Configuration(n, m), s, k, j) == j_condition(m, s, k, j));
}

TEST_CASE("B and K counts") {
    CHECK(count_B(6, 2, 2, 0).brute == 6);
    CHECK(count_B(6, 2, 2, 1).brute == 6);
    CHECK(count_B(6, 2, 2, 2).brute == 10);
    CHECK(count_B_closed(6, 2, 2, 2) == 10);
    CHECK(count_K(6, 2, 2, 3) == 1);
    CHECK(count_K(6, 2, 2, 2) == 6);
    CHECK(count_K(6, 2, 2, 1) == 15);
}

TEST_CASE("nat and T") {
    CHECK(nat(Configuration(6, {2, 4}), 1) == 0);
    CHECK(nat(Configuration(6, {1, 2}), 1) == 2);
    CHECK(nat(Configuration(6, {3, 5}), 2) == 0);
    CHECK(count_T(6, 2, 2, 1) == 9);
    CHECK(count_T(6, 2, 0, 1) == 1);
    CHECK(count_T(6, 2, 1, 1) == 5);
    CHECK(closed_T(6, 2) == 9);
    CHECK(closed_T(14, 7) == 429);
    for (int n = 0; n <= 9; ++n) CHECK(closed_T(n, 0) == 1);
}

TEST_CASE("count_T against a direct count") {
    for (int n = 1; n <= 12; ++n)
        for (int s = 0; 2 * s <= n; ++s)
            for (int b0 = 1; b0 + 2 * s - 1 <= n; ++b0)
                for (int i = 0; i <= s; ++i) {
                    Int direct = 0;
                    for (const auto& m : oracle::subsets(n, s))
                        if (not_at_home(m, b0) == i) ++direct;
                    CHECK(count_T(n, s, i, b0) == direct);
                    CHECK(direct == closed_T(n, i));
                }
}

TEST_CASE("Catalan numbers") {
    for (int i = 0; i <= 7; ++i) CHECK(count_T(2 * i, i, i, 1) == catalan(i));
}

TEST_CASE("conditions versus nat") {
    CHECK(conditions_vs_nat(6, 2, 2));
    CHECK(conditions_vs_nat(9, 3, 4));
    CHECK(conditions_vs_nat(8, 2, 3));
}

TEST_CASE("b0 shift bijection") {
    CHECK(b0_shift_bijection(Configuration(6, {2, 4}), 2, 1) == Configuration(6, {3, 5}));
    CHECK_THROWS_AS(b0_shift_bijection(Configuration(4, {2, 4}), 2, 1), PreconditionViolation);
    for (int n = 1; n <= 10; ++n)
        for (int s = 0; 2 * s <= n - 1; ++s)
            for (int b0 = 1; b0 + 2 * s <= n; ++b0) {
                std::set<Configuration> image;
                for (const auto& g : enumerate_configurations(n, s)) {
                    auto h = b0_shift_bijection(g, s, b0);
                    CHECK(h.length() == n);
                    CHECK(nat(h, b0 + 1) == nat(g, b0));
                    image.insert(h);
                }
                CHECK(image.size() == static_cast<std::size_t>(oracle::binom(n, s)));
            }
}

TEST_CASE("special bijection") {
    CHECK(special_bijection(Configuration(2, {1}), 1) == Configuration(1, {}));
    CHECK_THROWS_AS(special_bijection(Configuration(4, {2, 3}), 2), ConsistencyError);
    for (int i = 1; i <= 6; ++i) {
        std::set<Configuration> image;
        for (const auto& g : enumerate_configurations(2 * i, i)) {
            if (nat(g, 1) != i) continue;
            auto h = special_bijection(g, i);
            CHECK(h.length() == 2 * i - 1);
            CHECK(h.mark_count() == i - 1);
            CHECK(nat(h, 1) == i - 1);
            image.insert(h);
        }
        CHECK(static_cast<Int>(image.size()) == count_T(2 * i - 1, i - 1, i - 1, 1));
    }
}

TEST_CASE("concatenation") {
    const Configuration g(4, {1, 4});
    const Configuration b(7, {2, 3});
    REQUIRE(nat(g, 1) == 1);
    REQUIRE(nat(b, 1) == 1);
    const auto gb = concat(g, b);
    CHECK(gb.length() == 11);
    CHECK(gb.mark_count() == 4);
    CHECK(nat(gb, 1) == 2);
    CHECK(concat(Configuration(4, {2, 4}), Configuration(5, {2, 4})) == Configuration(9, {2, 4, 6, 8}));
    CHECK_THROWS(concat(Configuration(5, {2, 4}), b));
}

TEST_CASE("count by last mark") {
    CHECK(count_by_last_mark(2, 1) == 2);
    CHECK(count_by_last_mark(2, 0) == 1);
    for (int l = 1; l <= 6; ++l)
        for (int i = 0; i < l; ++i) CHECK(count_by_last_mark(l, i) == count_T(l + i, i, i, 1));
}

TEST_CASE("recursions and the binomial identity") {
    for (const auto& r : verify_recursions(10)) {
        INFO(r.family);
        CHECK(r.instances > 0);
        CHECK(r.passed());
    }
    CHECK(verify_binomial_identity(6, 2, 2));
    CHECK(verify_binomial_identity(7, 1, 3));
    Int lhs = 0;
    for (int j = 0; j <= 2; ++j) lhs += count_B_closed(6, 2, 2, j);
    CHECK(lhs == 22);
    const auto sweep = verify_binomial_identity_sweep(12);
    CHECK(sweep.passed());
    CHECK(sweep.instances > 0);
}
