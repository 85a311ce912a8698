#include "tchrom/chromatic.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <vector>

#include "tchrom/error.hpp"
#include "tchrom/limits.hpp"

namespace tchrom {

namespace {

using Mask = std::uint64_t;

// One proper coloring reduced to what the ascent statistics need: its
// composition and the set of edges (by index) whose colors increase from
// edges()[i].u to edges()[i].v.
struct ColoringRow {
    std::size_t composition;
    Mask up;
    int root_color;
};

struct ColoringTable {
    std::vector<Composition> compositions;
    std::vector<ColoringRow> rows;
    int edge_count = 0;
};

ColoringTable tabulate_colorings(const Graph& g) {
    if (g.edge_count() > 64) throw CapExceeded("graphs with more than 64 edges are not supported");
    ColoringTable t;
    t.edge_count = g.edge_count();
    std::map<Composition, std::size_t> ids;
    for (int ell = 1; ell <= g.vertex_count(); ++ell) {
        for_each_proper_coloring(g, ell, [&](const Coloring& k) {
            auto [it, fresh] = ids.try_emplace(coloring_composition(k), t.compositions.size());
            if (fresh) t.compositions.push_back(it->first);
            Mask up = 0;
            for (std::size_t i = 0; i < g.edges().size(); ++i) {
                const auto& e = g.edges()[i];
                if (k.color[static_cast<std::size_t>(e.u)] < k.color[static_cast<std::size_t>(e.v)])
                    up |= Mask{1} << i;
            }
            t.rows.push_back({it->second, up, k.color.empty() ? 0 : k.color[0]});
        });
    }
    return t;
}

Mask full_mask(int edges) { return edges == 64 ? ~Mask{0} : (Mask{1} << edges) - 1; }

// Edges pointing from edges()[i].u to edges()[i].v under a direction
// assignment. An edge is an ascent iff its direction agrees with its
// color increase.
Mask forward_mask(const Orientation& o) {
    Mask m = 0;
    for (std::size_t i = 0; i < o.size(); ++i)
        if (o.forward(i)) m |= Mask{1} << i;
    return m;
}

// Sum over direction masks (with multiplicities) of the ascent-weighted
// coloring generating function.
QSymExpansion weighted_sum(const Graph& g, const ColoringTable& t, const std::map<Mask, Int>& directions) {
    const Mask all = full_mask(t.edge_count);
    std::vector<std::vector<Int>> hist(t.compositions.size(), std::vector<Int>(static_cast<std::size_t>(t.edge_count) + 1, 0));
    for (const auto& row : t.rows) {
        auto& h = hist[row.composition];
        for (const auto& [dir, mult] : directions) {
            auto asc = static_cast<std::size_t>(std::popcount(~(row.up ^ dir) & all));
            h[asc] = checked_add(h[asc], mult);
        }
    }
    QSymExpansion out(g.vertex_count());
    if (g.vertex_count() == 0) {
        Int total = 0;
        for (const auto& [dir, mult] : directions) total = checked_add(total, mult);
        out.add(Composition{}, QPolynomial::constant(total));
        return out;
    }
    for (std::size_t c = 0; c < t.compositions.size(); ++c) out.add(t.compositions[c], QPolynomial(hist[c]));
    return out;
}

QSymExpansion single_direction(const Graph& g, Mask dir) {
    return weighted_sum(g, tabulate_colorings(g), {{dir, 1}});
}

}  // namespace

SymExpansion csf(const Graph& g) {
    const int n = g.vertex_count();
    SymExpansion out(n);
    if (n == 0) {
        out.add(Partition{}, QPolynomial::constant(1));
        return out;
    }
    std::map<Composition, Int> counts;
    for (int ell = 1; ell <= n; ++ell)
        for_each_proper_coloring(g, ell, [&](const Coloring& k) { ++counts[coloring_composition(k)]; });

    for (const auto& lambda : enumerate_partitions(n)) {
        auto arrangements = rearrangements(lambda);
        auto value = [&](const Composition& a) {
            auto it = counts.find(a);
            return it == counts.end() ? Int{0} : it->second;
        };
        const Int c = value(arrangements.front());
        for (const auto& a : arrangements)
            if (value(a) != c)
                throw ConsistencyError("csf: coloring counts differ between " + arrangements.front().to_string() +
                                       " and " + a.to_string());
        out.add(lambda, QPolynomial::constant(c));
    }
    return out;
}

QSymExpansion cqsf_labeled(const Graph& g, const Labeling& l) {
    if (l.size() != g.vertex_count()) throw std::invalid_argument("cqsf_labeled: labeling size mismatch");
    return single_direction(g, forward_mask(Orientation::induced_by(g, l)));
}

QSymExpansion cqsf_oriented(const Graph& g, const Orientation& o) {
    if (o.size() != g.edges().size()) throw std::invalid_argument("cqsf_oriented: orientation size mismatch");
    return single_direction(g, forward_mask(o));
}

QSymExpansion total_labeling_cqsf(const Graph& g) {
    const int n = g.vertex_count();
    if (n > limits().max_total_label_vertices)
        throw CapExceeded("total labeling: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(limits().max_total_label_vertices));
    // Only the induced orientation of a labeling matters, so collapse the
    // n! labelings into orientation classes first.
    std::map<Mask, Int> classes;
    for_each_labeling(n, [&](const Labeling& l) { ++classes[forward_mask(Orientation::induced_by(g, l))]; });
    return weighted_sum(g, tabulate_colorings(g), classes);
}

QSymExpansion total_orientation_cqsf(const Graph& g) {
    std::map<Mask, Int> acyclic;
    for_each_acyclic_orientation(g, [&](const Orientation& o) { acyclic[forward_mask(o)] = 1; });
    return weighted_sum(g, tabulate_colorings(g), acyclic);
}

Labeling star_representative_labeling(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("root label out of range");
    std::vector<int> labels{r};
    for (int x = 1; x <= n; ++x)
        if (x != r) labels.push_back(x);
    return Labeling(std::move(labels));
}

QPolynomial star_cqsf_coeff_closed(const Composition& alpha, int r, int n) {
    if (alpha.weight() != n) throw std::invalid_argument("star_cqsf_coeff_closed: |alpha| != n");
    if (r < 1 || r > n) throw std::invalid_argument("star_cqsf_coeff_closed: root label out of range");
    const int above = n - r;  // leaves with a larger label than the root
    const int below = r - 1;
    QPolynomial out;
    for (std::size_t i = 1; i <= alpha.length(); ++i) {
        if (alpha.part(i) != 1) continue;
        const Split sp = split_at(alpha, i);
        const Int prefactor = checked_mul(multinomial(sp.right), multinomial(sp.left));
        const int lm = std::min(above, sp.left_size);
        const int rm = std::min(below, sp.right_size);
        const int base = std::abs(above - sp.left_size);
        QPolynomial inner;
        for (int j = 0; j <= std::min(lm, rm); ++j)
            inner.add_term(2 * j + base, checked_mul(binomial(above, lm - j), binomial(below, rm - j)));
        out += inner * prefactor;
    }
    return out;
}

Int star_csf_coeff_closed(const Partition& lambda) {
    const auto st = partition_stats(lambda);
    return checked_mul(st.ones, multinomial(st.tilde));
}

SymExpansion total_orientation_star_closed(int n) {
    if (n < 1) throw std::invalid_argument("total_orientation_star_closed: n must be >= 1");
    SymExpansion out(n);
    const QPolynomial factor = QPolynomial::one_plus_q_pow(n - 1);
    for (const auto& lambda : enumerate_partitions(n)) out.add(lambda, factor * star_csf_coeff_closed(lambda));
    return out;
}

QSymExpansion normalized_total_star(int n) {
    if (n < 1) throw std::invalid_argument("normalized_total_star: n must be >= 1");
    QSymExpansion total = total_labeling_cqsf(Graph::star(n));
    QSymExpansion out(n);
    const Int d = factorial(n - 1);
    for (const auto& [alpha, c] : total.terms()) out.add(alpha, c.divide_exact(d));
    return out;
}

QSymExpansion normalized_total_star_by_root(int n) {
    if (n < 1) throw std::invalid_argument("normalized_total_star_by_root: n must be >= 1");
    const Graph star = Graph::star(n);
    QSymExpansion out(n);
    for (int r = 1; r <= n; ++r) out += cqsf_labeled(star, star_representative_labeling(n, r));
    return out;
}

QPolynomial tst_coeff_closed(const Composition& alpha, int n) {
    if (alpha.weight() != n) throw std::invalid_argument("tst_coeff_closed: |alpha| != n");
    QPolynomial out;
    for (std::size_t i = 1; i <= alpha.length(); ++i) {
        if (alpha.part(i) != 1) continue;
        const Split sp = split_at(alpha, i);
        const Int prefactor = checked_mul(multinomial(sp.right), multinomial(sp.left));
        const int s = std::min(sp.left_size, sp.right_size);
        QPolynomial inner;
        for (int l = 0; l <= s; ++l) inner += QPolynomial::monomial(binomial(n, l), l) * q_analog(n - 2 * l);
        out += inner * prefactor;
    }
    return out;
}

Int tst_coeff_first_step(const Composition& alpha, int n, int k) {
    if (alpha.weight() != n) throw std::invalid_argument("tst_coeff_first_step: |alpha| != n");
    if (k < 0 || k > (n - 1) / 2) throw std::out_of_range("tst_coeff_first_step: k outside [0, (n-1)/2]");
    Int out = 0;
    for (std::size_t i = 1; i <= alpha.length(); ++i) {
        if (alpha.part(i) != 1) continue;
        const Split sp = split_at(alpha, i);
        const Int prefactor = checked_mul(multinomial(sp.right), multinomial(sp.left));
        const int s = std::min(sp.left_size, sp.right_size);
        Int inner = 0;
        for (int j = 0; j <= std::min(s, k); ++j)
            inner = checked_add(inner, checked_mul(binomial(s + k - 2 * j, s - j), binomial(n - 1 - s - k + 2 * j, j)));
        out = checked_add(out, checked_mul(prefactor, inner));
    }
    return out;
}

QPolynomial star_root_color_slice(const Composition& alpha, int i, int r) {
    const int n = alpha.weight();
    if (i < 1 || i > static_cast<int>(alpha.length())) throw std::out_of_range("root color index out of range");
    const Graph star = Graph::star(n);
    const Labeling lab = star_representative_labeling(n, r);
    const auto ell = static_cast<int>(alpha.length());
    QPolynomial out;
    for_each_proper_coloring(star, ell, [&](const Coloring& k) {
        if (k.color[0] != i || coloring_composition(k) != alpha) return;
        out.add_term(ascents_labeled(star, lab, k.color), 1);
    });
    return out;
}

QPolynomial tst_root_color_slice(const Composition& alpha, int i) {
    QPolynomial out;
    for (int r = 1; r <= alpha.weight(); ++r) out += star_root_color_slice(alpha, i, r);
    return out;
}

bool verify_csf_near_contraction(const Graph& g, Edge e) {
    const auto nc = near_contract(g, e);
    SymExpansion rhs = csf(delete_edge(g, e));
    rhs -= csf(delete_edge(nc.graph, nc.leaf_edge));
    rhs += csf(nc.graph);
    return csf(g) == rhs;
}

bool verify_tcqsf_o_near_contraction(const Graph& g, Edge e) {
    if (!is_internal(g, e)) throw PreconditionViolation("edge is not internal");
    if (lies_on_cycle(g, e)) throw PreconditionViolation("edge lies on a cycle");
    const auto nc = near_contract(g, e);
    QSymExpansion diff = total_orientation_cqsf(delete_edge(g, e));
    diff -= total_orientation_cqsf(delete_edge(nc.graph, nc.leaf_edge));
    QSymExpansion rhs = total_orientation_cqsf(nc.graph) + diff.scaled(QPolynomial::one_plus_q_pow(1));
    return total_orientation_cqsf(g) == rhs;
}

bool verify_tree_formula(const Graph& g) {
    if (!g.is_tree()) throw PreconditionViolation("graph is not a tree");
    QSymExpansion total = total_orientation_cqsf(g);
    if (!is_symmetric(total)) return false;
    return total == to_quasisymmetric(csf(g)).scaled(QPolynomial::one_plus_q_pow(g.edge_count()));
}

bool check_symmetry_conjecture(const Graph& g) { return is_symmetric(total_orientation_cqsf(g)); }

}  // namespace tchrom
