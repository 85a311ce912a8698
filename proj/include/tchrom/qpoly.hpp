#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tchrom/combinat.hpp"

namespace tchrom {

/// Dense polynomial in q with integer coefficients, ascending exponent.
/// The highest stored coefficient is always nonzero; the zero polynomial
/// has no coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Int> coeffs);
    QPolynomial(std::initializer_list<Int> coeffs);

    static QPolynomial constant(Int c);
    static QPolynomial monomial(Int c, int exponent);
    /// (1+q)^m
    static QPolynomial one_plus_q_pow(int m);

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// [q^k]p, 0 beyond the degree.
    Int coefficient(int k) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const QPolynomial& o);
    QPolynomial& operator*=(Int c);

    /// Adds c*q^k in place.
    void add_term(int k, Int c);

    /// Divides every coefficient by d; throws ConsistencyError unless exact.
    QPolynomial divide_exact(Int d) const;

    /// "6q^4 + 36q^3 + 36q^2 + 36q + 6", highest degree first; "0" for zero.
    std::string to_string() const;

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    friend QPolynomial operator*(QPolynomial a, Int c) { return a *= c; }
    friend QPolynomial operator*(Int c, QPolynomial a) { return a *= c; }
    friend QPolynomial operator-(QPolynomial a) { return a *= -1; }
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

/// [j]_q = 1 + q + ... + q^(j-1); zero for j = 0.
QPolynomial q_analog(int j);

/// True iff [q^k]p = [q^(d-k)]p for 0 <= k <= d. Requires d >= deg(p).
bool is_palindromic(const QPolynomial& p, int d);

/// Sum of coefficients.
Int evaluate_at_one(const QPolynomial& p);

}  // namespace tchrom
