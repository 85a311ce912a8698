#include <doctest.h>

#include "oracle.hpp"
#include "tchrom/qsymfunc.hpp"

using namespace tchrom;

TEST_CASE("quasi-shuffle of two singletons") {
    auto r = quasi_shuffle(Composition{1}, Composition{1});
    CHECK(r.size() == 2);
    CHECK(r[Composition{1, 1}] == 2);
    CHECK(r[Composition{2}] == 1);
    CHECK(quasi_shuffle(Composition{}, Composition{2, 1}) == std::map<Composition, Int>{{Composition{2, 1}, 1}});
}

TEST_CASE("quasi-shuffle matches multiplication in a finite alphabet") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a + b <= 6; ++b)
            for (const auto& alpha : enumerate_compositions(a))
                for (const auto& beta : enumerate_compositions(b)) {
                    const int vars = static_cast<int>(alpha.length() + beta.length());
                    auto lhs = oracle::multiply(oracle::monomial_qsym(alpha, vars), oracle::monomial_qsym(beta, vars));
                    auto rhs = oracle::linear_combination(quasi_shuffle(alpha, beta), vars);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("expansions reject keys of the wrong weight and drop zeros") {
    QSymExpansion f(3);
    CHECK_THROWS_AS(f.add(Composition{1, 1}, QPolynomial{1}), std::invalid_argument);
    f.add(Composition{1, 2}, QPolynomial{1});
    f.add(Composition{1, 2}, QPolynomial{-1});
    CHECK(f.is_zero());
    CHECK_THROWS(QSymExpansion(2) + QSymExpansion(3));
}

TEST_CASE("symmetric and quasisymmetric round trip") {
    SymExpansion m(3);
    m.add(Partition{2, 1}, QPolynomial{1, 1});
    m.add(Partition{1, 1, 1}, QPolynomial{4});
    auto q = to_quasisymmetric(m);
    CHECK(q.terms().size() == 3);
    CHECK(is_symmetric(q));
    CHECK(to_symmetric(q) == m);
    q.add(Composition{1, 2}, QPolynomial{1});
    CHECK_FALSE(is_symmetric(q));
    CHECK_THROWS_AS(to_symmetric(q), std::invalid_argument);
}

TEST_CASE("product of symmetric functions stays symmetric") {
    SymExpansion p1(1);
    p1.add(Partition{1}, QPolynomial{1});
    auto sq = sym_product(p1, p1);
    CHECK(sq.coefficient(Partition{1, 1}) == QPolynomial{2});
    CHECK(sq.coefficient(Partition{2}) == QPolynomial{1});
    CHECK(sym_product(sym_unit(), sq) == sq);
    CHECK(quasi_shuffle_product(qsym_unit(), to_quasisymmetric(sq)) == to_quasisymmetric(sq));
}

TEST_CASE("star chromatic function as a power-sum combination") {
    for (int n = 1; n <= 5; ++n) CHECK(verify_star_powersum(n));
}
