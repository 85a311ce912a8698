#include "tchrom/qsymfunc.hpp"

#include <vector>

#include "tchrom/graph.hpp"

namespace tchrom {

namespace {

void quasi_shuffle_rec(std::span<const int> a, std::span<const int> b, std::vector<int>& prefix,
                       std::map<Composition, Int>& out) {
    if (a.empty() || b.empty()) {
        std::vector<int> parts(prefix);
        parts.insert(parts.end(), a.begin(), a.end());
        parts.insert(parts.end(), b.begin(), b.end());
        Int& slot = out[Composition(std::move(parts))];
        slot = checked_add(slot, 1);
        return;
    }
    prefix.push_back(a.front());
    quasi_shuffle_rec(a.subspan(1), b, prefix, out);
    prefix.back() = b.front();
    quasi_shuffle_rec(a, b.subspan(1), prefix, out);
    prefix.back() = a.front() + b.front();
    quasi_shuffle_rec(a.subspan(1), b.subspan(1), prefix, out);
    prefix.pop_back();
}

}  // namespace

std::map<Composition, Int> quasi_shuffle(const Composition& alpha, const Composition& beta) {
    std::map<Composition, Int> out;
    std::vector<int> prefix;
    quasi_shuffle_rec(alpha.parts(), beta.parts(), prefix, out);
    return out;
}

QSymExpansion quasi_shuffle_product(const QSymExpansion& f, const QSymExpansion& g) {
    QSymExpansion r(f.degree() + g.degree());
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            QPolynomial c = ca * cb;
            for (const auto& [gamma, mult] : quasi_shuffle(a, b)) r.add(gamma, c * mult);
        }
    }
    return r;
}

bool is_symmetric(const QSymExpansion& f) {
    for (const auto& lambda : enumerate_partitions(f.degree())) {
        auto arrangements = rearrangements(lambda);
        QPolynomial first = f.coefficient(arrangements.front());
        for (std::size_t i = 1; i < arrangements.size(); ++i)
            if (f.coefficient(arrangements[i]) != first) return false;
    }
    return true;
}

SymExpansion to_symmetric(const QSymExpansion& f) {
    if (!is_symmetric(f)) throw std::invalid_argument("to_symmetric: expansion is not symmetric");
    SymExpansion r(f.degree());
    for (const auto& lambda : enumerate_partitions(f.degree()))
        r.add(lambda, f.coefficient(lambda.as_composition()));
    return r;
}

QSymExpansion to_quasisymmetric(const SymExpansion& f) {
    QSymExpansion r(f.degree());
    for (const auto& [lambda, c] : f.terms())
        for (const auto& alpha : rearrangements(lambda)) r.add(alpha, c);
    return r;
}

SymExpansion sym_product(const SymExpansion& f, const SymExpansion& g) {
    return to_symmetric(quasi_shuffle_product(to_quasisymmetric(f), to_quasisymmetric(g)));
}

QSymExpansion qsym_unit() {
    QSymExpansion r(0);
    r.add(Composition{}, QPolynomial::constant(1));
    return r;
}

SymExpansion sym_unit() {
    SymExpansion r(0);
    r.add(Partition{}, QPolynomial::constant(1));
    return r;
}

namespace {

// Polynomial in a finite alphabet x_1..x_N: exponent vector -> coefficient.
using AlphabetPoly = std::map<std::vector<int>, Int>;

AlphabetPoly alphabet_multiply(const AlphabetPoly& a, const AlphabetPoly& b) {
    AlphabetPoly r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Int& slot = r[e];
            slot = checked_add(slot, checked_mul(ca, cb));
        }
    }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

AlphabetPoly power_sum(int k, int vars) {
    AlphabetPoly r;
    for (int i = 0; i < vars; ++i) {
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        e[static_cast<std::size_t>(i)] = k;
        r[e] = 1;
    }
    return r;
}

void colorings_in_alphabet(const Graph& g, int vars, std::size_t v, std::vector<int>& color,
                           AlphabetPoly& out) {
    if (v == color.size()) {
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        for (int c : color) ++e[static_cast<std::size_t>(c)];
        Int& slot = out[e];
        slot = checked_add(slot, 1);
        return;
    }
    for (int c = 0; c < vars; ++c) {
        bool ok = true;
        for (int w : g.neighbors(static_cast<int>(v)))
            if (static_cast<std::size_t>(w) < v && color[static_cast<std::size_t>(w)] == c) ok = false;
        if (!ok) continue;
        color[v] = c;
        colorings_in_alphabet(g, vars, v + 1, color, out);
    }
}

}  // namespace

bool verify_star_powersum(int n) {
    if (n < 1) throw std::invalid_argument("verify_star_powersum: n must be >= 1");
    const int vars = n + 1;
    Graph star = Graph::star(n + 1);

    AlphabetPoly lhs;
    std::vector<int> color(static_cast<std::size_t>(n + 1), 0);
    colorings_in_alphabet(star, vars, 0, color, lhs);

    AlphabetPoly rhs;
    for (int r = 0; r <= n; ++r) {
        AlphabetPoly term = power_sum(r + 1, vars);
        for (int i = 0; i < n - r; ++i) term = alphabet_multiply(term, power_sum(1, vars));
        Int sign = (r % 2 == 0) ? 1 : -1;
        Int c = sign * binomial(n, r);
        for (const auto& [e, v] : term) {
            Int& slot = rhs[e];
            slot = checked_add(slot, checked_mul(c, v));
        }
    }
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    return lhs == rhs;
}

}  // namespace tchrom
