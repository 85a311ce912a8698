#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "tchrom/combinat.hpp"
#include "tchrom/qpoly.hpp"

namespace tchrom {

/// A homogeneous expansion sum_k c_k(q) B_k in a monomial basis, indexed
/// by compositions (M-basis, quasisymmetric) or partitions (m-basis,
/// symmetric). Zero coefficients are never stored, and every key has
/// weight equal to the degree.
template <class Key>
class Expansion {
public:
    using Terms = std::map<Key, QPolynomial>;

    Expansion() = default;
    explicit Expansion(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient at key; zero if absent.
    QPolynomial coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? QPolynomial{} : it->second;
    }

    void add(const Key& key, const QPolynomial& c) {
        if (key.weight() != degree_)
            throw std::invalid_argument("term " + key.to_string() + " has weight != degree " +
                                        std::to_string(degree_));
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Expansion& operator+=(const Expansion& o) {
        require_same_degree(o);
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Expansion& operator-=(const Expansion& o) {
        require_same_degree(o);
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }

    Expansion scaled(const QPolynomial& f) const {
        Expansion r(degree_);
        for (const auto& [k, c] : terms_) r.add(k, c * f);
        return r;
    }

    /// Termwise q = 1 specialization.
    std::map<Key, Int> at_q_one() const {
        std::map<Key, Int> r;
        for (const auto& [k, c] : terms_) r[k] = evaluate_at_one(c);
        return r;
    }

    friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
    friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }
    friend bool operator==(const Expansion&, const Expansion&) = default;

private:
    void require_same_degree(const Expansion& o) const {
        if (o.degree_ != degree_)
            throw std::invalid_argument("degree mismatch: " + std::to_string(degree_) + " vs " +
                                        std::to_string(o.degree_));
    }

    int degree_ = 0;
    Terms terms_;
};

using QSymExpansion = Expansion<Composition>;
using SymExpansion = Expansion<Partition>;

/// Multiplicities of M_gamma in M_alpha * M_beta (overlapping shuffles).
std::map<Composition, Int> quasi_shuffle(const Composition& alpha, const Composition& beta);

QSymExpansion quasi_shuffle_product(const QSymExpansion& f, const QSymExpansion& g);

/// Coefficients agree on all compositions with the same sorted parts.
bool is_symmetric(const QSymExpansion& f);

/// m-expansion of a symmetric f; throws std::invalid_argument otherwise.
SymExpansion to_symmetric(const QSymExpansion& f);

/// m_lambda = sum over distinct rearrangements alpha of M_alpha.
QSymExpansion to_quasisymmetric(const SymExpansion& f);

SymExpansion sym_product(const SymExpansion& f, const SymExpansion& g);

/// The constant 1 as a degree-0 expansion.
QSymExpansion qsym_unit();
SymExpansion sym_unit();

/// Checks st_{n+1} = sum_r (-1)^r C(n,r) p_{(r+1,1^{n-r})} by expanding
/// both sides as polynomials in n+1 commuting variables.
bool verify_star_powersum(int n);

}  // namespace tchrom
