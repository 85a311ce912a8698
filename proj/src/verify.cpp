#include "tchrom/verify.hpp"

#include <algorithm>
#include <set>

#include "tchrom/chromatic.hpp"
#include "tchrom/configmodel.hpp"
#include "tchrom/error.hpp"

namespace tchrom {

void check_poly(VerificationReport& r, Params params, const QPolynomial& expected, const QPolynomial& actual) {
    ++r.instances;
    if (expected == actual) return;
    const int top = std::max(expected.degree(), actual.degree());
    for (int k = 0; k <= top; ++k) {
        if (expected.coefficient(k) != actual.coefficient(k)) {
            params.emplace_back("q_power", Int{k});
            r.failures.push_back({std::move(params), expected.coefficient(k), actual.coefficient(k)});
            return;
        }
    }
}

namespace {

// Same key set check plus coefficientwise comparison.
template <class Key>
void check_expansion(VerificationReport& r, const Params& params, const Expansion<Key>& expected,
                     const Expansion<Key>& actual) {
    std::set<Key> keys;
    for (const auto& [k, c] : expected.terms()) keys.insert(k);
    for (const auto& [k, c] : actual.terms()) keys.insert(k);
    for (const auto& k : keys) {
        Params p = params;
        p.emplace_back("index", k.to_string());
        check_poly(r, std::move(p), expected.coefficient(k), actual.coefficient(k));
    }
}

Int catalan(int i) { return binomial(2 * i, i) / (i + 1); }

}  // namespace

std::vector<VerificationReport> sweep_binomial_identity(int max_n) {
    return {verify_binomial_identity_sweep(max_n)};
}

std::vector<VerificationReport> sweep_config_model(int max_n) {
    VerificationReport closed{"closed-T"}, total{"configuration-total"}, cond{"conditions-vs-nat"},
        shift{"b0-shift-bijection"}, special{"special-bijection"}, cat{"catalan"}, glue{"concat-nat"},
        last{"last-mark"};

    for (int n = 1; n <= max_n; ++n) {
        for (int s = 0; s <= n / 2; ++s) {
            for (int b0 = 1; b0 <= n - 2 * s + 1; ++b0) {
                std::vector<Int> hist(static_cast<std::size_t>(s) + 1, 0);
                for_each_configuration(n, s, [&](const Configuration& g) { ++hist[static_cast<std::size_t>(nat(g, b0))]; });
                Int sum = 0;
                for (int i = 0; i <= s; ++i) {
                    closed.check({{"n", n}, {"s", s}, {"i", i}, {"b0", b0}}, closed_T(n, i), hist[static_cast<std::size_t>(i)]);
                    sum += hist[static_cast<std::size_t>(i)];
                }
                total.check({{"n", n}, {"s", s}, {"b0", b0}}, binomial(n, s), sum);
            }
        }
    }

    const int bij_n = std::min(max_n, 12);
    for (int n = 1; n <= bij_n; ++n) {
        for (int s = 0; s <= (n - 1) / 2; ++s) {
            for (int k = s; k <= (n - 1) / 2; ++k)
                cond.check({{"n", n}, {"s", s}, {"k", k}}, 1, conditions_vs_nat(n, s, k) ? 1 : 0);
            for (int b0 = 1; b0 + 2 * s <= n; ++b0) {
                std::set<Configuration> images;
                Int nat_mismatches = 0;
                for_each_configuration(n, s, [&](const Configuration& g) {
                    Configuration h = b0_shift_bijection(g, s, b0);
                    if (nat(h, b0 + 1) != nat(g, b0)) ++nat_mismatches;
                    images.insert(std::move(h));
                });
                shift.check({{"n", n}, {"s", s}, {"b0", b0}, {"what", "distinct images"}}, binomial(n, s),
                            static_cast<Int>(images.size()));
                shift.check({{"n", n}, {"s", s}, {"b0", b0}, {"what", "nat changes"}}, 0, nat_mismatches);
            }
        }
    }

    for (int i = 1; 2 * i <= bij_n; ++i) {
        std::set<Configuration> images;
        Int bad = 0;
        for_each_configuration(2 * i, i, [&](const Configuration& g) {
            if (nat(g, 1) != i) return;
            Configuration h = special_bijection(g, i);
            if (h.length() != 2 * i - 1 || h.mark_count() != i - 1 || nat(h, 1) != i - 1) ++bad;
            images.insert(std::move(h));
        });
        special.check({{"i", i}, {"what", "distinct images"}}, count_T(2 * i - 1, i - 1, i - 1, 1),
                      static_cast<Int>(images.size()));
        special.check({{"i", i}, {"what", "domain size"}}, count_T(2 * i - 1, i - 1, i - 1, 1), count_T(2 * i, i, i, 1));
        special.check({{"i", i}, {"what", "images outside target"}}, 0, bad);
    }

    for (int i = 0; 2 * i <= max_n; ++i) cat.check({{"i", i}}, catalan(i), count_T(2 * i, i, i, 1));

    for (int s = 1; 2 * s <= bij_n; ++s) {
        const auto left = enumerate_configurations(2 * s, s);
        for (int m = 0; 2 * s + m <= bij_n; ++m) {
            Int bad = 0, count = 0;
            for (int t = 0; 2 * t <= m; ++t) {
                for_each_configuration(m, t, [&](const Configuration& h) {
                    for (const auto& g : left) {
                        ++count;
                        if (nat(concat(g, h), 1) != nat(g, 1) + nat(h, 1)) ++bad;
                    }
                });
            }
            glue.check({{"s", s}, {"length", m}, {"pairs", count}}, 0, bad);
        }
    }

    for (int l = 1; 2 * l <= bij_n; ++l) {
        for (int i = 0; i < l; ++i) {
            try {
                Int c = count_by_last_mark(l, i);
                last.check({{"l", l}, {"i", i}}, count_T(l + i, i, i, 1), c);
            } catch (const ConsistencyError&) {
                last.check({{"l", l}, {"i", i}}, 1, 0);
            }
        }
    }

    std::vector<VerificationReport> out{closed, total, cond, shift, special, cat, glue, last};
    for (auto& r : verify_recursions(std::min(max_n, 16))) out.push_back(std::move(r));
    return out;
}

std::vector<VerificationReport> sweep_tree_formula(int max_n) {
    VerificationReport r{"tree-formula"};
    for (int n = 1; n <= max_n; ++n) {
        Int index = 0;
        for (const auto& t : enumerate_trees(n)) r.check({{"n", n}, {"tree", index++}}, 1, verify_tree_formula(t) ? 1 : 0);
    }
    return {r};
}

std::vector<VerificationReport> structural_checks(const std::vector<NamedGraph>& corpus) {
    VerificationReport pal_l{"palindromic-labeling-total"}, pal_o{"palindromic-orientation-total"},
        rev_l{"reversal-labeling-total"}, rev_o{"reversal-orientation-total"}, top{"top-coefficient"},
        nc{"csf-near-contraction"}, nco{"orientation-total-near-contraction"};
    for (const auto& [name, g] : corpus) {
        const auto tl = total_labeling_cqsf(g);
        const auto to = total_orientation_cqsf(g);
        const auto chi = csf(g);
        const int m = g.edge_count();
        for (const auto& alpha : enumerate_compositions(g.vertex_count())) {
            Params p{{"graph", name}, {"index", alpha.to_string()}};
            pal_l.check(p, 1, is_palindromic(tl.coefficient(alpha), m) ? 1 : 0);
            pal_o.check(p, 1, is_palindromic(to.coefficient(alpha), m) ? 1 : 0);
            const auto rev = reverse_composition(alpha);
            check_poly(rev_l, p, tl.coefficient(rev), tl.coefficient(alpha));
            check_poly(rev_o, p, to.coefficient(rev), to.coefficient(alpha));
            const QPolynomial c = chi.coefficient(sort_composition(alpha));
            const Int expected_top = c.coefficient(0);
            top.check(p, expected_top, to.coefficient(alpha).coefficient(m));
            if (expected_top != 0) top.check(p, m, to.coefficient(alpha).degree());
        }
        for (const auto& e : g.edges()) {
            Params p{{"graph", name}, {"u", e.u}, {"v", e.v}};
            nc.check(p, 1, verify_csf_near_contraction(g, e) ? 1 : 0);
            if (is_internal(g, e) && !lies_on_cycle(g, e))
                nco.check(p, 1, verify_tcqsf_o_near_contraction(g, e) ? 1 : 0);
        }
    }
    return {pal_l, pal_o, rev_l, rev_o, top, nc, nco};
}

std::vector<VerificationReport> disjoint_union_checks(const std::vector<NamedGraph>& components, int max_total) {
    VerificationReport lab{"disjoint-union-labeling"}, ori{"disjoint-union-orientation"}, sym{"disjoint-union-csf"};
    for (const auto& [gname, g] : components) {
        for (const auto& [hname, h] : components) {
            const int n1 = g.vertex_count(), n2 = h.vertex_count();
            if (n1 + n2 > max_total) continue;
            const Graph u = disjoint_union(g, h);
            const Params p{{"G", gname}, {"H", hname}};
            check_expansion(lab, p,
                            quasi_shuffle_product(total_labeling_cqsf(g), total_labeling_cqsf(h))
                                .scaled(QPolynomial::constant(binomial(n1 + n2, n1))),
                            total_labeling_cqsf(u));
            check_expansion(ori, p, quasi_shuffle_product(total_orientation_cqsf(g), total_orientation_cqsf(h)),
                            total_orientation_cqsf(u));
            check_expansion(sym, p, sym_product(csf(g), csf(h)), csf(u));
        }
    }
    return {lab, ori, sym};
}

std::vector<VerificationReport> sweep_near_contraction(int max_n) {
    std::vector<NamedGraph> corpus;
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        int id = 0;
        for (auto& g : graphs_up_to_isomorphism(n, true))
            corpus.push_back({"connected" + std::to_string(n) + "_" + std::to_string(id++), std::move(g)});
    }
    VerificationReport nc{"csf-near-contraction"}, nco{"orientation-total-near-contraction"};
    for (const auto& [name, g] : corpus) {
        for (const auto& e : g.edges()) {
            Params p{{"graph", name}, {"u", e.u}, {"v", e.v}};
            nc.check(p, 1, verify_csf_near_contraction(g, e) ? 1 : 0);
            if (is_internal(g, e) && !lies_on_cycle(g, e))
                nco.check(p, 1, verify_tcqsf_o_near_contraction(g, e) ? 1 : 0);
        }
    }
    return {nc, nco};
}

std::vector<VerificationReport> sweep_disjoint_union(int max_n) {
    std::vector<NamedGraph> parts;
    for (int n = 1; n < std::min(max_n, 6); ++n) {
        int id = 0;
        for (auto& g : graphs_up_to_isomorphism(n, true))
            parts.push_back({"connected" + std::to_string(n) + "_" + std::to_string(id++), std::move(g)});
    }
    return disjoint_union_checks(parts, max_n);
}

std::vector<VerificationReport> sweep_star_closed_forms(int max_n) {
    VerificationReport star{"star-cqsf-closed"}, root_indep{"star-root-label-independence"},
        tst{"tst-closed"}, by_root{"tst-by-root"}, first{"tst-first-step"}, star_csf{"star-csf-closed"},
        orient{"star-orientation-total-closed"}, comp_root{"complementary-root-label"},
        reversal{"star-reversal"}, slice{"root-color-slice-reversal"};

    for (int n = 1; n <= max_n; ++n) {
        const Graph st = Graph::star(n);
        const auto compositions = enumerate_compositions(n);
        std::vector<QSymExpansion> per_root;
        for (int r = 1; r <= n; ++r) per_root.push_back(cqsf_labeled(st, star_representative_labeling(n, r)));

        for (int r = 1; r <= n; ++r)
            for (const auto& alpha : compositions)
                check_poly(star, {{"n", n}, {"r", r}, {"alpha", alpha.to_string()}}, star_cqsf_coeff_closed(alpha, r, n),
                           per_root[static_cast<std::size_t>(r - 1)].coefficient(alpha));

        if (n <= std::min(max_n, 6)) {
            // Every labeling with root label r gives the representative's expansion.
            Int mismatched = 0;
            for_each_labeling(n, [&](const Labeling& l) {
                if (cqsf_labeled(st, l) != per_root[static_cast<std::size_t>(l(0) - 1)]) ++mismatched;
            });
            root_indep.check({{"n", n}, {"labelings", static_cast<Int>(factorial(n))}}, 0, mismatched);

            for (int r = 1; r <= n; ++r) {
                for (const auto& alpha : compositions) {
                    const auto& c = per_root[static_cast<std::size_t>(r - 1)];
                    const auto& cc = per_root[static_cast<std::size_t>(n - r)];
                    const auto rev = reverse_composition(alpha);
                    for (int k = 0; k <= n - 1; ++k) {
                        Params p{{"n", n}, {"r", r}, {"alpha", alpha.to_string()}, {"k", k}};
                        comp_root.check(p, c.coefficient(alpha).coefficient(k), cc.coefficient(alpha).coefficient(n - 1 - k));
                        reversal.check(p, c.coefficient(alpha).coefficient(k), c.coefficient(rev).coefficient(n - 1 - k));
                    }
                }
            }
            for (const auto& alpha : compositions) {
                const auto len = static_cast<int>(alpha.length());
                for (int i = 1; i <= len; ++i)
                    check_poly(slice, {{"alpha", alpha.to_string()}, {"i", i}}, tst_root_color_slice(alpha, i),
                               tst_root_color_slice(reverse_composition(alpha), len - i + 1));
            }
        }

        const auto brute = normalized_total_star(n);
        const auto brute_by_root = normalized_total_star_by_root(n);
        for (const auto& alpha : compositions) {
            Params p{{"n", n}, {"alpha", alpha.to_string()}};
            check_poly(tst, p, tst_coeff_closed(alpha, n), brute.coefficient(alpha));
            check_poly(by_root, p, brute.coefficient(alpha), brute_by_root.coefficient(alpha));
            for (int k = 0; k <= (n - 1) / 2; ++k) {
                Params pk = p;
                pk.emplace_back("k", Int{k});
                first.check(pk, brute.coefficient(alpha).coefficient(k), tst_coeff_first_step(alpha, n, k));
            }
        }

        const auto chi = csf(st);
        for (const auto& lambda : enumerate_partitions(n))
            star_csf.check({{"n", n}, {"lambda", lambda.to_string()}}, star_csf_coeff_closed(lambda),
                           chi.coefficient(lambda).coefficient(0));
        check_expansion(orient, {{"n", n}}, to_quasisymmetric(total_orientation_star_closed(n)), total_orientation_cqsf(st));
    }
    return {star, root_indep, tst, by_root, first, star_csf, orient, comp_root, reversal, slice};
}

}  // namespace tchrom
