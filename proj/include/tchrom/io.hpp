#pragma once

#include <string>

#include <json.hpp>

#include "tchrom/graph.hpp"
#include "tchrom/qsymfunc.hpp"
#include "tchrom/report.hpp"

namespace tchrom {

using Json = nlohmann::ordered_json;

/// {"n": 4, "edges": [[0,1],[1,2]]}; edge order is irrelevant. Throws
/// FormatError on anything else, including duplicate edges.
Graph graph_from_json(const Json& j);
Graph graph_from_json_text(const std::string& text);
Graph load_graph(const std::string& path);
Json to_json(const Graph& g);

/// Ascending coefficients, e.g. [6,36,36,36,6]; zero is [].
Json to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const Json& j);

/// {"degree": n, "basis": "M" | "m", "terms": [{"index": [...], "coeff": [...]}]}
/// with terms in lexicographic index order.
Json to_json(const QSymExpansion& f);
Json to_json(const SymExpansion& f);
QSymExpansion qsym_from_json(const Json& j);
SymExpansion sym_from_json(const Json& j);

/// {"family": ..., "instances": N, "failures": [{"params": {...}, "expected": x, "actual": y}]}
Json to_json(const VerificationReport& r);

/// "6;36;36;36;6"; the zero polynomial is an empty cell.
std::string csv_cell(const QPolynomial& p);
/// Quotes a cell when it contains a comma or a quote.
std::string csv_escape(const std::string& cell);

/// "index,coeff" header, then one row per term.
std::string to_csv(const QSymExpansion& f);
std::string to_csv(const SymExpansion& f);

/// One "index: polynomial" line per term.
std::string to_text(const QSymExpansion& f);
std::string to_text(const SymExpansion& f);

}  // namespace tchrom
