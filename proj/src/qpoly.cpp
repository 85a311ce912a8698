#include "tchrom/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "tchrom/error.hpp"

namespace tchrom {

QPolynomial::QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPolynomial::QPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

QPolynomial QPolynomial::constant(Int c) { return QPolynomial(std::vector<Int>{c}); }

QPolynomial QPolynomial::monomial(Int c, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    std::vector<Int> v(static_cast<std::size_t>(exponent) + 1, 0);
    v.back() = c;
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::one_plus_q_pow(int m) {
    if (m < 0) throw std::invalid_argument("negative power of (1+q)");
    std::vector<Int> v(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) v[static_cast<std::size_t>(k)] = binomial(m, k);
    return QPolynomial(std::move(v));
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int QPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = checked_add(r[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    }
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator*=(Int c) {
    for (auto& x : coeffs_) x = checked_mul(x, c);
    normalize();
    return *this;
}

void QPolynomial::add_term(int k, Int c) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto idx = static_cast<std::size_t>(k);
    if (idx >= coeffs_.size()) coeffs_.resize(idx + 1, 0);
    coeffs_[idx] = checked_add(coeffs_[idx], c);
    normalize();
}

QPolynomial QPolynomial::divide_exact(Int d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    std::vector<Int> r(coeffs_);
    for (auto& x : r) {
        if (x % d != 0) throw ConsistencyError("non-exact polynomial division by " + std::to_string(d));
        x /= d;
    }
    return QPolynomial(std::move(r));
}

std::string QPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        Int c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Int mag = c < 0 ? -c : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mag != 1 || k == 0) s += std::to_string(mag);
        if (k >= 1) s += "q";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

QPolynomial q_analog(int j) {
    if (j < 0) throw std::invalid_argument("q_analog: negative argument");
    return QPolynomial(std::vector<Int>(static_cast<std::size_t>(j), 1));
}

bool is_palindromic(const QPolynomial& p, int d) {
    if (d < p.degree()) throw std::invalid_argument("is_palindromic: window smaller than degree");
    for (int k = 0; k <= d; ++k)
        if (p.coefficient(k) != p.coefficient(d - k)) return false;
    return true;
}

Int evaluate_at_one(const QPolynomial& p) {
    Int s = 0;
    for (Int c : p.coeffs()) s = checked_add(s, c);
    return s;
}

}  // namespace tchrom
