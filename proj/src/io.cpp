#include "tchrom/io.hpp"

#include <fstream>
#include <sstream>

#include "tchrom/error.hpp"

namespace tchrom {

namespace {

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
    return j.get<int>();
}

template <class Key>
Json expansion_to_json(const Expansion<Key>& f, const char* basis) {
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms()) {
        Json t;
        t["index"] = key.parts();
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json out;
    out["degree"] = f.degree();
    out["basis"] = basis;
    out["terms"] = std::move(terms);
    return out;
}

template <class Key>
Expansion<Key> expansion_from_json(const Json& j, const char* basis) {
    if (!j.is_object()) throw FormatError("expansion must be a JSON object");
    if (!j.contains("basis") || j["basis"] != basis)
        throw FormatError(std::string("expansion basis must be \"") + basis + "\"");
    if (!j.contains("degree") || !j.contains("terms") || !j["terms"].is_array())
        throw FormatError("expansion needs \"degree\" and \"terms\"");
    Expansion<Key> f(as_int(j["degree"], "degree"));
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("index") || !t.contains("coeff") || !t["index"].is_array())
            throw FormatError("each term needs an \"index\" array and a \"coeff\" array");
        std::vector<int> parts;
        for (const auto& p : t["index"]) parts.push_back(as_int(p, "index entry"));
        try {
            f.add(Key(std::move(parts)), qpoly_from_json(t["coeff"]));
        } catch (const FormatError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    return f;
}

template <class Key>
std::string expansion_to_csv(const Expansion<Key>& f) {
    std::string out = "index,coeff\n";
    for (const auto& [key, c] : f.terms()) out += csv_escape(key.to_string()) + "," + csv_cell(c) + "\n";
    return out;
}

template <class Key>
std::string expansion_to_text(const Expansion<Key>& f) {
    std::string out;
    for (const auto& [key, c] : f.terms()) out += key.to_string() + ": " + c.to_string() + "\n";
    return out;
}

}  // namespace

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw FormatError("graph JSON must be an object with \"n\" and \"edges\"");
    const int n = as_int(j["n"], "\"n\"");
    if (!j["edges"].is_array()) throw FormatError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair [u, v]");
        pairs.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
    return Graph::from_edge_list(n, pairs);
}

Graph graph_from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("graph JSON does not parse: ") + e.what());
    }
    return graph_from_json(j);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json_text(ss.str());
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    Json out;
    out["n"] = g.vertex_count();
    out["edges"] = std::move(edges);
    return out;
}

Json to_json(const QPolynomial& p) { return Json(p.coeffs()); }

QPolynomial qpoly_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("polynomial must be an array of integers");
    std::vector<Int> c;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw FormatError("polynomial coefficients must be integers");
        c.push_back(x.get<Int>());
    }
    return QPolynomial(std::move(c));
}

Json to_json(const QSymExpansion& f) { return expansion_to_json(f, "M"); }
Json to_json(const SymExpansion& f) { return expansion_to_json(f, "m"); }
QSymExpansion qsym_from_json(const Json& j) { return expansion_from_json<Composition>(j, "M"); }
SymExpansion sym_from_json(const Json& j) { return expansion_from_json<Partition>(j, "m"); }

Json to_json(const VerificationReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json params = Json::object();
        for (const auto& [k, v] : f.params) std::visit([&](const auto& x) { params[k] = x; }, v);
        Json item;
        item["params"] = std::move(params);
        item["expected"] = f.expected;
        item["actual"] = f.actual;
        failures.push_back(std::move(item));
    }
    Json out;
    out["family"] = r.family;
    out["instances"] = r.instances;
    out["failures"] = std::move(failures);
    return out;
}

std::string csv_cell(const QPolynomial& p) {
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ';';
        out += std::to_string(p.coeffs()[k]);
    }
    return out;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string to_csv(const QSymExpansion& f) { return expansion_to_csv(f); }
std::string to_csv(const SymExpansion& f) { return expansion_to_csv(f); }
std::string to_text(const QSymExpansion& f) { return expansion_to_text(f); }
std::string to_text(const SymExpansion& f) { return expansion_to_text(f); }

}  // namespace tchrom
