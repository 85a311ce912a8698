#include "tchrom/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "tchrom/chromatic.hpp"
#include "tchrom/error.hpp"
#include "tchrom/io.hpp"
#include "tchrom/verify.hpp"

namespace tchrom::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
    try {
        return load_graph(path);
    } catch (const FormatError& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
}

template <class Key>
void emit_expansion(const Expansion<Key>& f, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << to_json(f).dump() << '\n';
    else if (format == "csv")
        out << to_csv(f);
    else
        out << to_text(f);
}

// A per-composition comparison of two polynomials, as printed by `tst`
// and `star-tables`.
struct ComparisonRow {
    Composition index;
    QPolynomial closed;
    QPolynomial brute;
};

bool emit_comparison(const std::vector<ComparisonRow>& rows, const Json& header, const std::string& format,
                     std::ostream& out) {
    bool agree = true;
    for (const auto& r : rows) agree = agree && r.closed == r.brute;
    if (format == "json") {
        Json j = header;
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json row;
            row["index"] = r.index.parts();
            row["closed"] = to_json(r.closed);
            row["brute"] = to_json(r.brute);
            row["diff"] = to_json(r.closed - r.brute);
            arr.push_back(std::move(row));
        }
        j["rows"] = std::move(arr);
        j["agree"] = agree;
        out << j.dump() << '\n';
    } else if (format == "csv") {
        out << "index,closed,brute,diff\n";
        for (const auto& r : rows)
            out << csv_escape(r.index.to_string()) << ',' << csv_cell(r.closed) << ',' << csv_cell(r.brute) << ','
                << csv_cell(r.closed - r.brute) << '\n';
    } else {
        for (const auto& r : rows)
            out << r.index.to_string() << ": closed " << r.closed.to_string() << " | brute " << r.brute.to_string()
                << " | diff " << (r.closed - r.brute).to_string() << '\n';
        out << (agree ? "closed form and brute force agree\n" : "closed form and brute force DISAGREE\n");
    }
    return agree;
}

std::vector<ComparisonRow> nonzero_rows(int n, const std::function<QPolynomial(const Composition&)>& closed,
                                        const QSymExpansion& brute) {
    std::vector<ComparisonRow> rows;
    for (const auto& alpha : enumerate_compositions(n)) {
        ComparisonRow r{alpha, closed(alpha), brute.coefficient(alpha)};
        if (!r.closed.is_zero() || !r.brute.is_zero()) rows.push_back(std::move(r));
    }
    return rows;
}

bool emit_reports(const std::vector<VerificationReport>& reports, const std::string& format, std::ostream& out) {
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump() << '\n';
    } else if (format == "csv") {
        out << "family,instances,failures\n";
        for (const auto& r : reports) out << r.family << ',' << r.instances << ',' << r.failures.size() << '\n';
    } else {
        for (const auto& r : reports) {
            out << (r.passed() ? "PASS " : "FAIL ") << r.family << ": " << r.instances << " instances, "
                << r.failures.size() << " failures\n";
            std::size_t shown = 0;
            for (const auto& f : r.failures) {
                if (shown++ == 5) break;
                Json p = Json::object();
                for (const auto& [k, v] : f.params) std::visit([&](const auto& x) { p[k] = x; }, v);
                out << "  " << p.dump() << " expected " << f.expected << " actual " << f.actual << '\n';
            }
        }
    }
    return ok;
}

const std::map<std::string, int>& default_max_n() {
    static const std::map<std::string, int> d{
        {"binomial-identity", 16}, {"config-model", 12},    {"tree-formula", 6},
        {"near-contraction", 5},   {"disjoint-union", 6},   {"star-closed-forms", 6},
    };
    return d;
}

std::vector<VerificationReport> run_family(const std::string& family, int max_n) {
    if (family == "binomial-identity") return sweep_binomial_identity(max_n);
    if (family == "config-model") return sweep_config_model(max_n);
    if (family == "tree-formula") return sweep_tree_formula(max_n);
    if (family == "near-contraction") return sweep_near_contraction(max_n);
    if (family == "disjoint-union") return sweep_disjoint_union(max_n);
    return sweep_star_closed_forms(max_n);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chromatic (quasi)symmetric functions: brute force, closed forms and identity checks", "tchrom"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string graph_path, labels, orient, family;
    int n = 0, root = 0, max_n = 0;

    auto with_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto with_graph = [&](CLI::App* sub) {
        sub->add_option("graph", graph_path, "Graph JSON file {\"n\":..,\"edges\":[[u,v],..]}")->required();
        with_format(sub);
    };

    auto* c_csf = app.add_subcommand("csf", "Chromatic symmetric function (m-basis)");
    with_graph(c_csf);
    auto* c_label = app.add_subcommand("cqsf-label", "Chromatic quasisymmetric function for a labeling");
    with_graph(c_label);
    c_label->add_option("--labels", labels, "Labels of vertex 0, 1, ..., e.g. \"2,1,3,4,5\"")->required();
    auto* c_orient = app.add_subcommand("cqsf-orient", "Chromatic quasisymmetric function for an orientation");
    with_graph(c_orient);
    c_orient->add_option("--orient", orient, "Arcs \"u>v,...\" covering every edge once")->required();
    auto* c_tl = app.add_subcommand("total-label", "Sum over all labelings");
    with_graph(c_tl);
    auto* c_to = app.add_subcommand("total-orient", "Sum over all acyclic orientations");
    with_graph(c_to);
    auto* c_tst = app.add_subcommand("tst", "Normalized total star: closed form, brute force and difference");
    c_tst->add_option("--n", n, "Star size")->required()->check(CLI::Range(1, 64));
    with_format(c_tst);
    auto* c_star = app.add_subcommand("star-tables", "Per-root-label star coefficients: brute force vs closed form");
    c_star->add_option("--n", n, "Star size")->required()->check(CLI::Range(1, 64));
    c_star->add_option("--root", root, "Root label")->required()->check(CLI::PositiveNumber);
    with_format(c_star);
    auto* c_verify = app.add_subcommand("verify", "Run an exhaustive verification sweep");
    std::vector<std::string> families;
    for (const auto& [k, v] : default_max_n()) families.push_back(k);
    c_verify->add_option("family", family, "Family to check")->required()->check(CLI::IsMember(families));
    c_verify->add_option("--max-n", max_n, "Largest size to sweep")->check(CLI::Range(1, 64));
    with_format(c_verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (c_csf->parsed()) {
            emit_expansion(csf(read_graph(graph_path)), format, out);
        } else if (c_label->parsed()) {
            Graph g = read_graph(graph_path);
            Labeling l = [&] {
                try {
                    return parse_labeling(labels, g.vertex_count());
                } catch (const FormatError& e) {
                    throw InputError(std::string("invalid labeling: ") + e.what());
                }
            }();
            emit_expansion(cqsf_labeled(g, l), format, out);
        } else if (c_orient->parsed()) {
            Graph g = read_graph(graph_path);
            Orientation o = [&] {
                try {
                    return Orientation::parse(g, orient);
                } catch (const FormatError& e) {
                    throw InputError(std::string("invalid orientation: ") + e.what());
                }
            }();
            emit_expansion(cqsf_oriented(g, o), format, out);
        } else if (c_tl->parsed()) {
            emit_expansion(total_labeling_cqsf(read_graph(graph_path)), format, out);
        } else if (c_to->parsed()) {
            emit_expansion(total_orientation_cqsf(read_graph(graph_path)), format, out);
        } else if (c_tst->parsed()) {
            const auto brute = normalized_total_star(n);
            auto rows = nonzero_rows(n, [&](const Composition& a) { return tst_coeff_closed(a, n); }, brute);
            Json header;
            header["n"] = n;
            return emit_comparison(rows, header, format, out) ? 0 : 1;
        } else if (c_star->parsed()) {
            if (root > n) throw InputError("--root must be between 1 and --n");
            const auto brute = cqsf_labeled(Graph::star(n), star_representative_labeling(n, root));
            auto rows = nonzero_rows(n, [&](const Composition& a) { return star_cqsf_coeff_closed(a, root, n); }, brute);
            Json header;
            header["n"] = n;
            header["root"] = root;
            return emit_comparison(rows, header, format, out) ? 0 : 1;
        } else if (c_verify->parsed()) {
            const int limit = max_n > 0 ? max_n : default_max_n().at(family);
            return emit_reports(run_family(family, limit), format, out) ? 0 : 1;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: cap exceeded: " << e.what() << " (raise with TCHROM_MAX_N)\n";
        return 2;
    } catch (const ConsistencyError& e) {
        err << "error: internal consistency check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: out of range: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace tchrom::cli
