#include "regquot/json_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "regquot/error.hpp"

namespace regquot {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

template <class T>
T get_as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("field '") + what + "' has the wrong type");
    }
}

std::vector<std::size_t> index_list(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string("'") + what + "' must be an array");
    std::vector<std::size_t> out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
            throw ParseError(std::string("'") + what + "' must hold nonnegative integers");
        out.push_back(x.get<std::size_t>());
    }
    return out;
}

Monomial parse_exponents(const Json& j, std::size_t n) {
    if (!j.is_array()) throw ParseError("a monomial is an array of exponents");
    if (j.size() != n)
        throw ParseError("exponent vector of length " + std::to_string(j.size()) + ", expected " + std::to_string(n));
    std::vector<Exponent> e;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > INT32_MAX)
            throw ParseError("exponents must be nonnegative integers");
        e.push_back(x.get<Exponent>());
    }
    return Monomial(std::move(e));
}

std::vector<Monomial> parse_monomials(const Json& j, std::size_t n, const char* what) {
    if (!j.is_array()) throw ParseError(std::string("'") + what + "' must be an array");
    std::vector<Monomial> out;
    for (const auto& m : j) out.push_back(parse_exponents(m, n));
    return out;
}

Json monomials_json(const std::vector<Monomial>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(m.exponents());
    return a;
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
    return get_as<int>(v, key);
}

}  // namespace

IdealInput parse_ideal(const Json& j) {
    IdealInput in;
    const Json& gens = field(j, "generators");
    if (!gens.is_array()) throw ParseError("'generators' must be an array");
    if (auto it = j.find("variables"); it != j.end()) {
        if (!it->is_array()) throw ParseError("'variables' must be an array of names");
        std::vector<std::string> names;
        for (const auto& v : *it) {
            if (!v.is_string()) throw ParseError("variable names must be strings");
            names.push_back(v.get<std::string>());
        }
        try {
            in.variables = VariableTable(std::move(names));
        } catch (const BadParams& e) {
            throw ParseError(e.what());
        }
    } else if (!gens.empty() && gens.front().is_array()) {
        in.variables = VariableTable::numbered(gens.front().size());
    } else {
        throw ParseError("'variables' is required when there are no generators");
    }
    if (in.variables.size() == 0) throw ParseError("the ring needs at least one variable");
    in.generators = parse_monomials(gens, in.variables.size(), "generators");
    if (auto it = j.find("order"); it != j.end()) in.order = index_list(*it, "order");
    return in;
}

Json to_json(const IdealInput& in) {
    Json j;
    j["variables"] = in.variables.names();
    j["generators"] = monomials_json(in.generators);
    if (in.order) j["order"] = *in.order;
    return j;
}

MonomialOrder parse_order(const Json& j) {
    const auto kind = get_as<std::string>(field(j, "kind"), "kind");
    const auto ranking = index_list(field(j, "ranking"), "ranking");
    OrderKind k;
    if (kind == "purelex")
        k = OrderKind::PureLex;
    else if (kind == "gradedrevlex")
        k = OrderKind::GradedRevLex;
    else
        throw ParseError("unknown order kind '" + kind + "'");
    try {
        return MonomialOrder(k, ranking);
    } catch (const BadParams& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const MonomialOrder& order) {
    Json j;
    j["kind"] = order.kind() == OrderKind::PureLex ? "purelex" : "gradedrevlex";
    j["ranking"] = order.ranking();
    return j;
}

QuotientCertificate parse_certificate(const Json& j) {
    const Json& gens_json = field(j, "generators");
    if (!gens_json.is_array() || gens_json.empty() || !gens_json.front().is_array())
        throw ParseError("'generators' must be a nonempty array of exponent vectors");
    const auto gens = parse_monomials(gens_json, gens_json.front().size(), "generators");
    const auto order = index_list(field(j, "order"), "order");
    const MonomialIdeal I = minimalize(gens, gens.front().nvars());
    if (I.size() != gens.size()) throw NotMinimal("certificate generators are not minimal");
    QuotientCertificate c = build_certificate(I, order);

    const Json& steps = field(j, "steps");
    if (!steps.is_array()) throw ParseError("'steps' must be an array");
    if (steps.size() != c.steps.size())
        throw MathError("certificate lists " + std::to_string(steps.size()) + " steps, recomputation gives " +
                        std::to_string(c.steps.size()));
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const auto k = static_cast<std::size_t>(int_field(steps[s], "k"));
        const auto colon = parse_monomials(field(steps[s], "colon"), c.nvars, "colon");
        if (k != c.steps[s].k || colon != c.steps[s].colon_gens)
            throw MathError("certificate step " + std::to_string(s + 1) + " does not match the recomputed colon");
    }
    return c;
}

Json to_json(const QuotientCertificate& c) {
    std::vector<Monomial> original(c.gens.size());
    for (std::size_t p = 0; p < c.gens.size(); ++p) original.at(c.order[p]) = c.gens[p];
    Json j;
    j["generators"] = monomials_json(original);
    j["order"] = c.order;
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json step;
        step["k"] = s.k;
        step["colon"] = monomials_json(s.colon_gens);
        steps.push_back(step);
    }
    j["steps"] = steps;
    return j;
}

SimpleGraph parse_graph(const Json& j) {
    const Json& vs = field(j, "vertices");
    if (!vs.is_array()) throw ParseError("'vertices' must be an array");
    std::vector<std::string> vertices;
    for (const auto& v : vs) {
        if (v.is_string())
            vertices.push_back(v.get<std::string>());
        else if (v.is_number_integer())
            vertices.push_back(std::to_string(v.get<std::int64_t>()));
        else
            throw ParseError("vertex labels must be strings or integers");
    }
    std::map<std::string, std::size_t> lookup;
    for (std::size_t i = 0; i < vertices.size(); ++i) lookup.emplace(vertices[i], i);

    auto end_index = [&](const Json& e) -> std::size_t {
        if (e.is_string()) {
            auto it = lookup.find(e.get<std::string>());
            if (it == lookup.end()) throw ParseError("edge end '" + e.get<std::string>() + "' is not a vertex");
            return it->second;
        }
        if (e.is_number_integer() && e.get<std::int64_t>() >= 0 &&
            static_cast<std::size_t>(e.get<std::int64_t>()) < vertices.size())
            return e.get<std::size_t>();
        throw ParseError("edge ends must be vertex labels or 0-based vertex indices");
    };

    const Json& es = field(j, "edges");
    if (!es.is_array()) throw ParseError("'edges' must be an array");
    std::vector<Edge> edges;
    for (const auto& e : es) {
        const Json& ends = field(e, "ends");
        if (!ends.is_array() || ends.size() != 2) throw ParseError("'ends' must list two vertices");
        std::string label = e.contains("label") ? get_as<std::string>(e["label"], "label")
                                                : "e" + std::to_string(edges.size() + 1);
        edges.push_back({std::move(label), end_index(ends[0]), end_index(ends[1])});
    }
    try {
        return SimpleGraph(std::move(vertices), std::move(edges));
    } catch (const BadParams& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const SimpleGraph& G) {
    Json j;
    j["vertices"] = G.vertices();
    Json edges = Json::array();
    for (const auto& e : G.edges()) {
        Json x;
        x["label"] = e.label;
        x["ends"] = {G.vertices()[e.u], G.vertices()[e.v]};
        edges.push_back(x);
    }
    j["edges"] = edges;
    return j;
}

FamilySpec parse_family(const Json& j) {
    const auto kind = get_as<std::string>(field(j, "kind"), "kind");
    try {
        if (kind == "B") {
            const Json& l = field(j, "l");
            if (!l.is_array()) throw ParseError("B family needs 'l' as an array");
            auto lens = get_as<std::vector<int>>(l, "l");
            if (j.contains("h") && int_field(j, "h") != static_cast<int>(lens.size()))
                throw ParseError("'h' does not match the length of 'l'");
            return FamilySpec::B(std::move(lens));
        }
        if (kind == "Bst") {
            if (!field(j, "l").is_number_integer()) throw ParseError("Bst family needs 'l' as an integer");
            return FamilySpec::Bst(int_field(j, "l"), int_field(j, "h"), int_field(j, "s"), int_field(j, "t"));
        }
    } catch (const BadParams& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown family kind '" + kind + "'");
}

Json to_json(const FamilySpec& spec) {
    Json j;
    if (spec.kind == FamilyKind::B) {
        j["kind"] = "B";
        j["l"] = spec.l;
        j["h"] = spec.h;
    } else {
        j["kind"] = "Bst";
        j["l"] = spec.l.front();
        j["h"] = spec.h;
        j["s"] = spec.s;
        j["t"] = spec.t;
    }
    return j;
}

BettiTable parse_betti(const Json& j) {
    BettiTable t(get_as<bool>(field(j, "exact"), "exact") ? Exactness::Exact : Exactness::UpperBound);
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("'entries' must be an array");
    for (const auto& e : entries) {
        const int i = int_field(e, "i"), deg = int_field(e, "j");
        const auto v = get_as<std::int64_t>(field(e, "value"), "value");
        if (v <= 0) throw ParseError("Betti entries must be positive");
        if (t.at(i, deg) != 0) throw ParseError("duplicate Betti entry");
        t.set(i, deg, v);
    }
    return t;
}

Json to_json(const BettiTable& t) {
    Json j;
    j["exact"] = t.exactness() == Exactness::Exact;
    Json entries = Json::array();
    for (const auto& [key, v] : t.entries()) {
        Json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["value"] = v;
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j;
}

Json load_json_argument(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    std::string text;
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open '" + arg + "'");
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace regquot
