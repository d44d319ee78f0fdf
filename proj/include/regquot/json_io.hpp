#pragma once

// JSON schemas for ideals, orders, certificates, graphs, family specs and
// Betti tables. Parsing failures raise ParseError; indices are 0-based.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regquot/betti_table.hpp"
#include "regquot/graph.hpp"
#include "regquot/monomial.hpp"
#include "regquot/quotients.hpp"

namespace regquot {

using Json = nlohmann::ordered_json;

/// {"variables": [...], "generators": [[e1, ..., en], ...], "order": [...]?}
struct IdealInput {
    VariableTable variables;
    std::vector<Monomial> generators;
    std::optional<std::vector<std::size_t>> order;

    MonomialIdeal ideal() const { return minimalize(generators, variables.size()); }
};

IdealInput parse_ideal(const Json& j);
Json to_json(const IdealInput& in);

/// {"kind": "purelex" | "gradedrevlex", "ranking": [...]}
MonomialOrder parse_order(const Json& j);
Json to_json(const MonomialOrder& order);

/// {"generators": [...], "order": [...], "steps": [{"k": k, "colon": [...]}]}
/// The steps are recomputed and must match; a mismatch is a MathError.
QuotientCertificate parse_certificate(const Json& j);
Json to_json(const QuotientCertificate& c);

/// {"vertices": [...], "edges": [{"label": ..., "ends": [u, v]}]}; ends are
/// vertex labels or 0-based indices.
SimpleGraph parse_graph(const Json& j);
Json to_json(const SimpleGraph& G);

/// {"kind": "B", "l": [...], "h": h?} or {"kind": "Bst", "l": l, "h": h, "s": s, "t": t}
FamilySpec parse_family(const Json& j);
Json to_json(const FamilySpec& spec);

/// {"exact": bool, "entries": [{"i": i, "j": j, "value": v}, ...]}
BettiTable parse_betti(const Json& j);
Json to_json(const BettiTable& t);

/// Inline JSON text if the argument starts with '{' or '[', otherwise a file path.
Json load_json_argument(const std::string& arg);

}  // namespace regquot
