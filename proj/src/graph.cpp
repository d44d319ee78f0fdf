#include "regquot/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "regquot/error.hpp"

namespace regquot {

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (!vertex_lookup_.emplace(vertices_[i], i).second)
            throw BadParams("duplicate vertex label '" + vertices_[i] + "'");
    std::set<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u >= vertices_.size() || e.v >= vertices_.size())
            throw BadParams("edge '" + e.label + "' references an unknown vertex");
        if (e.u == e.v) throw BadParams("edge '" + e.label + "' is a loop");
        if (!ends.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw BadParams("edge '" + e.label + "' duplicates an existing edge");
        if (!edge_lookup_.emplace(e.label, i).second) throw BadParams("duplicate edge label '" + e.label + "'");
    }
}

std::size_t SimpleGraph::edge_index(const std::string& label) const {
    auto it = edge_lookup_.find(label);
    if (it == edge_lookup_.end()) throw BadParams("no edge labeled '" + label + "'");
    return it->second;
}

std::optional<std::size_t> SimpleGraph::vertex_index(const std::string& label) const {
    auto it = vertex_lookup_.find(label);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

VariableTable SimpleGraph::edge_variables() const {
    std::vector<std::string> names;
    for (const auto& e : edges_) names.push_back(e.label);
    return VariableTable(std::move(names));
}

namespace {

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const SimpleGraph& G) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(G.vertex_count());
    for (std::size_t i = 0; i < G.edge_count(); ++i) {
        adj[G.edge(i).u].emplace_back(G.edge(i).v, i);
        adj[G.edge(i).v].emplace_back(G.edge(i).u, i);
    }
    return adj;
}

// Per-component 2-colouring: colour[v] in {0,1}, and whether each component is bipartite.
struct Colouring {
    std::vector<int> colour;
    std::vector<std::size_t> component;
    std::vector<bool> component_bipartite;
};

Colouring two_colour(const SimpleGraph& G) {
    const auto adj = adjacency(G);
    Colouring c;
    c.colour.assign(G.vertex_count(), -1);
    c.component.assign(G.vertex_count(), 0);
    for (std::size_t s = 0; s < G.vertex_count(); ++s) {
        if (c.colour[s] != -1) continue;
        const std::size_t comp = c.component_bipartite.size();
        c.component_bipartite.push_back(true);
        std::queue<std::size_t> q;
        q.push(s);
        c.colour[s] = 0;
        c.component[s] = comp;
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            for (const auto& [w, e] : adj[v]) {
                if (c.colour[w] == -1) {
                    c.colour[w] = 1 - c.colour[v];
                    c.component[w] = comp;
                    q.push(w);
                } else if (c.colour[w] == c.colour[v]) {
                    c.component_bipartite[comp] = false;
                }
            }
        }
    }
    return c;
}

}  // namespace

bool SimpleGraph::is_bipartite() const {
    const auto c = two_colour(*this);
    return std::all_of(c.component_bipartite.begin(), c.component_bipartite.end(), [](bool b) { return b; });
}

std::size_t SimpleGraph::connected_components() const { return two_colour(*this).component_bipartite.size(); }

std::size_t SimpleGraph::bipartite_components() const {
    const auto c = two_colour(*this);
    return static_cast<std::size_t>(std::count(c.component_bipartite.begin(), c.component_bipartite.end(), true));
}

std::size_t SimpleGraph::edge_ring_dimension() const { return vertex_count() - bipartite_components(); }

SimpleGraph SimpleGraph::induced_subgraph(const std::vector<std::string>& vertex_labels) const {
    std::map<std::size_t, std::size_t> remap;
    for (const auto& label : vertex_labels) {
        const auto idx = vertex_index(label);
        if (!idx) throw BadParams("unknown vertex '" + label + "'");
        remap.emplace(*idx, remap.size());
    }
    std::vector<Edge> kept;
    for (const auto& e : edges_) {
        auto iu = remap.find(e.u), iv = remap.find(e.v);
        if (iu != remap.end() && iv != remap.end()) kept.push_back({e.label, iu->second, iv->second});
    }
    return SimpleGraph(vertex_labels, std::move(kept));
}

// ---------------------------------------------------------------------------
// Walks

bool is_closed_walk(const SimpleGraph& G, const ClosedWalk& W) {
    if (W.edges.empty()) return false;
    for (auto e : W.edges)
        if (e >= G.edge_count()) return false;
    const Edge& first = G.edge(W.edges.front());
    for (const std::size_t start : {first.u, first.v}) {
        std::size_t at = start;
        bool ok = true;
        for (auto idx : W.edges) {
            const Edge& e = G.edge(idx);
            if (e.u == at)
                at = e.v;
            else if (e.v == at)
                at = e.u;
            else {
                ok = false;
                break;
            }
        }
        if (ok && at == start) return true;
    }
    return false;
}

ClosedWalk canonical_form(const ClosedWalk& W) {
    const auto n = W.edges.size();
    ClosedWalk best = W;
    const std::vector<std::size_t> reversed(W.edges.rbegin(), W.edges.rend());
    for (const auto* seq : {&W.edges, &reversed})
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<std::size_t> cand(n);
            for (std::size_t i = 0; i < n; ++i) cand[i] = (*seq)[(r + i) % n];
            if (cand < best.edges) best.edges = std::move(cand);
        }
    return best;
}

std::string to_string(const ClosedWalk& W, const SimpleGraph& G) {
    std::ostringstream os;
    for (std::size_t i = 0; i < W.edges.size(); ++i) os << (i ? ", " : "") << G.edge(W.edges[i]).label;
    return os.str();
}

std::string to_string(const WalkBinomial& b, const VariableTable& vars) {
    return to_string(b.plus, vars) + " - " + to_string(b.minus, vars);
}

WalkBinomial walk_binomial(const SimpleGraph& G, const ClosedWalk& W) {
    if (!is_closed_walk(G, W)) throw BadParams("edge sequence is not a closed walk");
    if (W.length() % 2 != 0) throw OddWalk("walk of odd length " + std::to_string(W.length()) + " has no binomial");
    const std::size_t n = G.edge_count();
    std::vector<std::size_t> odd, even;
    for (std::size_t p = 0; p < W.length(); ++p) (p % 2 == 0 ? odd : even).push_back(W.edges[p]);
    WalkBinomial b{Monomial::from_indices(n, odd), Monomial::from_indices(n, even)};
    if (b.plus == b.minus) throw BadParams("walk binomial is zero");
    return b;
}

std::vector<ClosedWalk> even_cycles(const SimpleGraph& G, std::size_t max_cycles) {
    if (!G.is_bipartite()) throw NotBipartite("graph has an odd cycle");
    const auto adj = adjacency(G);
    std::set<ClosedWalk> found;
    std::vector<bool> on_path(G.vertex_count(), false);
    std::vector<std::size_t> path_edges;

    // Cycles are rooted at their smallest vertex; only larger vertices are visited.
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t root, std::size_t v) {
        for (const auto& [w, e] : adj[v]) {
            if (w == root && path_edges.size() >= 2 && e != path_edges.back()) {
                path_edges.push_back(e);
                found.insert(canonical_form(ClosedWalk{path_edges}));
                path_edges.pop_back();
                if (found.size() > max_cycles)
                    throw CapExceeded("more than " + std::to_string(max_cycles) + " cycles");
                continue;
            }
            if (w <= root || on_path[w]) continue;
            on_path[w] = true;
            path_edges.push_back(e);
            dfs(root, w);
            path_edges.pop_back();
            on_path[w] = false;
        }
    };
    for (std::size_t root = 0; root < G.vertex_count(); ++root) {
        on_path[root] = true;
        dfs(root, root);
        on_path[root] = false;
    }
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Families

FamilySpec FamilySpec::B(std::vector<int> l) {
    FamilySpec s;
    s.kind = FamilyKind::B;
    s.h = static_cast<int>(l.size());
    s.l = std::move(l);
    s.validate();
    return s;
}

FamilySpec FamilySpec::Bst(int l, int h, int s, int t) {
    FamilySpec f;
    f.kind = FamilyKind::Bst;
    f.l = {l};
    f.h = h;
    f.s = s;
    f.t = t;
    f.validate();
    return f;
}

void FamilySpec::validate() const {
    if (h < 2) throw BadParams("h must be at least 2");
    if (kind == FamilyKind::B) {
        if (static_cast<int>(l.size()) != h) throw BadParams("B needs exactly h path lengths");
    } else {
        if (l.size() != 1) throw BadParams("Bst takes a single path length l");
        if (s < 1 || t < 1) throw BadParams("Bst needs s, t >= 1");
    }
    for (auto x : l)
        if (x < 1) throw BadParams("path lengths must be positive");
}

int FamilySpec::path_length(int j) const {
    if (j < 1 || j > h) throw BadParams("path index out of range");
    return kind == FamilyKind::B ? l[static_cast<std::size_t>(j - 1)] : l.front();
}

std::string FamilySpec::describe() const {
    std::ostringstream os;
    if (kind == FamilyKind::B) {
        os << "B_{(";
        for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
        os << ")," << h << "}";
    } else {
        os << "B^{" << s << "," << t << "}_{" << l.front() << "," << h << "}";
    }
    return os.str();
}

std::string e_label(int i, int j) { return "e(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
std::string f_label(int k) { return "f" + std::to_string(k); }
std::string g_label(int k) { return "g" + std::to_string(k); }

namespace {

std::string x_label(int i, int j) { return "x(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

struct GraphBuilder {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::map<std::string, std::size_t> index;

    std::size_t vertex(const std::string& label) {
        auto [it, inserted] = index.emplace(label, vertices.size());
        if (inserted) vertices.push_back(label);
        return it->second;
    }
    void edge(const std::string& label, const std::string& a, const std::string& b) {
        const auto ia = vertex(a);
        const auto ib = vertex(b);
        edges.push_back({label, ia, ib});
    }
    void paths(const std::vector<int>& l) {
        vertex("y1");
        vertex("y2");
        for (int j = 1; j <= static_cast<int>(l.size()); ++j) {
            const int len = 2 * l[static_cast<std::size_t>(j - 1)];
            for (int i = 1; i <= len; ++i) {
                const std::string from = i == 1 ? "y1" : x_label(i - 1, j);
                const std::string to = i == len ? "y2" : x_label(i, j);
                edge(e_label(i, j), from, to);
            }
        }
    }
    void odd_cycle(const std::string& hub, const std::string& prefix, int half,
                   std::string (*label)(int)) {
        const int len = 2 * half + 1;
        for (int k = 1; k <= len; ++k) {
            const std::string from = k == 1 ? hub : prefix + std::to_string(k - 1);
            const std::string to = k == len ? hub : prefix + std::to_string(k);
            edge(label(k), from, to);
        }
    }
};

}  // namespace

SimpleGraph build_B(const std::vector<int>& l) {
    FamilySpec::B(l);  // validates
    GraphBuilder b;
    b.paths(l);
    return SimpleGraph(std::move(b.vertices), std::move(b.edges));
}

SimpleGraph build_Bst(int l, int h, int s, int t) {
    FamilySpec::Bst(l, h, s, t);
    GraphBuilder b;
    b.paths(std::vector<int>(static_cast<std::size_t>(h), l));
    b.odd_cycle("y1", "z", s, &f_label);
    b.odd_cycle("y2", "w", t, &g_label);
    return SimpleGraph(std::move(b.vertices), std::move(b.edges));
}

SimpleGraph build_family(const FamilySpec& spec) {
    spec.validate();
    return spec.kind == FamilyKind::B ? build_B(spec.l) : build_Bst(spec.l.front(), spec.h, spec.s, spec.t);
}

namespace {

// e(1,i), e(2,i), ..., e(2 l_i, i): y1 to y2 along path i.
std::vector<std::string> branch_down(const FamilySpec& spec, int i) {
    std::vector<std::string> out;
    for (int p = 1; p <= 2 * spec.path_length(i); ++p) out.push_back(e_label(p, i));
    return out;
}

std::vector<std::string> cycle_labels(int half, std::string (*label)(int)) {
    std::vector<std::string> out;
    for (int k = 1; k <= 2 * half + 1; ++k) out.push_back(label(k));
    return out;
}

ClosedWalk walk_from(const SimpleGraph& G, std::initializer_list<std::vector<std::string>> pieces) {
    ClosedWalk w;
    for (const auto& piece : pieces)
        for (const auto& label : piece) w.edges.push_back(G.edge_index(label));
    return w;
}

std::vector<std::string> reversed(std::vector<std::string> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<ClosedWalk> primitive_walks_B(const FamilySpec& spec) {
    if (spec.kind != FamilyKind::B) throw BadParams("primitive_walks_B needs a B family spec");
    const SimpleGraph G = build_family(spec);
    std::vector<ClosedWalk> out;
    for (int i = 1; i <= spec.h; ++i)
        for (int j = i + 1; j <= spec.h; ++j)
            out.push_back(walk_from(G, {branch_down(spec, i), reversed(branch_down(spec, j))}));
    return out;
}

std::vector<ClosedWalk> BstWalks::all() const {
    std::vector<ClosedWalk> out = w1;
    out.insert(out.end(), w2.begin(), w2.end());
    out.insert(out.end(), w3.begin(), w3.end());
    return out;
}

BstWalks primitive_walks_Bst(const FamilySpec& spec) {
    if (spec.kind != FamilyKind::Bst) throw BadParams("primitive_walks_Bst needs a Bst family spec");
    const SimpleGraph G = build_family(spec);
    const auto fs = cycle_labels(spec.s, &f_label);
    const auto gs = cycle_labels(spec.t, &g_label);
    BstWalks out;
    for (int i = 1; i <= spec.h; ++i)
        for (int j = i + 1; j <= spec.h; ++j) {
            out.w1.push_back(walk_from(G, {branch_down(spec, i), reversed(branch_down(spec, j))}));
            out.w2.push_back(walk_from(G, {fs, branch_down(spec, i), gs, reversed(branch_down(spec, j))}));
        }
    for (int i = 1; i <= spec.h; ++i)
        out.w3.push_back(walk_from(G, {fs, branch_down(spec, i), gs, reversed(branch_down(spec, i))}));
    return out;
}

MonomialOrder family_order(const FamilySpec& spec) {
    const SimpleGraph G = build_family(spec);
    std::vector<std::size_t> ranking;
    int max_row = 0;
    for (int j = 1; j <= spec.h; ++j) max_row = std::max(max_row, 2 * spec.path_length(j));
    auto rows = [&](int first) {
        for (int i = first; i <= max_row; i += 2)
            for (int j = 1; j <= spec.h; ++j)
                if (i <= 2 * spec.path_length(j)) ranking.push_back(G.edge_index(e_label(i, j)));
    };
    if (spec.kind == FamilyKind::B) {
        rows(1);
        rows(2);
        return MonomialOrder(OrderKind::PureLex, std::move(ranking));
    }
    rows(1);
    for (int k = 1; k <= 2 * spec.t + 1; ++k) ranking.push_back(G.edge_index(g_label(k)));
    for (int k = 1; k <= 2 * spec.s + 1; ++k) ranking.push_back(G.edge_index(f_label(k)));
    rows(2);
    return MonomialOrder(OrderKind::GradedRevLex, std::move(ranking));
}

MonomialIdeal initial_ideal(const std::vector<WalkBinomial>& binomials, const MonomialOrder& order) {
    std::vector<Monomial> leads;
    for (const auto& b : binomials) {
        const auto c = order.compare(b.plus, b.minus);
        if (c == 0) throw TieUnresolved("binomial terms compare equal under the order");
        leads.push_back(c > 0 ? b.plus : b.minus);
    }
    return minimalize(leads, order.nvars());
}

namespace {

// Y_{1,i} = product of odd-row edges of path i; Y_{2,i} the even-row edges.
struct PathProducts {
    const FamilySpec& spec;
    const SimpleGraph& G;

    Monomial row_product(int i, int parity) const {
        std::vector<std::size_t> idx;
        for (int p = parity; p <= 2 * spec.path_length(i); p += 2) idx.push_back(G.edge_index(e_label(p, i)));
        return Monomial::from_indices(G.edge_count(), idx);
    }
    Monomial Y1(int i) const { return row_product(i, 1); }
    Monomial Y2(int i) const { return row_product(i, 2); }
    Monomial cycle_product(int half, std::string (*label)(int), int parity) const {
        std::vector<std::size_t> idx;
        for (int k = parity; k <= 2 * half + 1; k += 2) idx.push_back(G.edge_index(label(k)));
        return Monomial::from_indices(G.edge_count(), idx);
    }
    // U = f_2 f_4 ... f_{2s} * g_1 g_3 ... g_{2t+1}; V = f_1 ... f_{2s+1} * g_2 ... g_{2t}.
    Monomial U() const { return cycle_product(spec.s, &f_label, 2) * cycle_product(spec.t, &g_label, 1); }
    Monomial V() const { return cycle_product(spec.s, &f_label, 1) * cycle_product(spec.t, &g_label, 2); }
};

}  // namespace

std::vector<WalkBinomial> family_binomials(const FamilySpec& spec) {
    const SimpleGraph G = build_family(spec);
    const PathProducts Y{spec, G};
    std::vector<WalkBinomial> out;
    if (spec.kind == FamilyKind::B) {
        for (int i = 1; i <= spec.h; ++i)
            for (int j = i + 1; j <= spec.h; ++j) out.push_back({Y.Y1(i) * Y.Y2(j), Y.Y1(j) * Y.Y2(i)});
        return out;
    }
    const Monomial U = Y.U(), V = Y.V();
    for (int i = 1; i <= spec.h; ++i)
        for (int j = i + 1; j <= spec.h; ++j) out.push_back({Y.Y1(j) * Y.Y2(i), Y.Y1(i) * Y.Y2(j)});
    for (int i = 1; i <= spec.h; ++i)
        for (int j = i + 1; j <= spec.h; ++j) out.push_back({Y.Y1(i) * Y.Y1(j) * U, Y.Y2(i) * Y.Y2(j) * V});
    for (int i = 1; i <= spec.h; ++i) out.push_back({Y.Y1(i) * Y.Y1(i) * U, Y.Y2(i) * Y.Y2(i) * V});
    return out;
}

std::vector<Monomial> FamilyInitialIdeal::canonical_generators() const {
    std::vector<Monomial> out;
    for (auto idx : canonical_order) out.push_back(ideal.generators()[idx]);
    return out;
}

FamilyInitialIdeal family_initial_ideal(const FamilySpec& spec) {
    FamilyInitialIdeal out{build_family(spec), MonomialIdeal::zero(1), {}};
    const SimpleGraph& G = out.graph;

    std::vector<ClosedWalk> walks =
        spec.kind == FamilyKind::B ? primitive_walks_B(spec) : primitive_walks_Bst(spec).all();
    std::vector<WalkBinomial> binomials;
    for (const auto& w : walks) binomials.push_back(walk_binomial(G, w));
    out.ideal = initial_ideal(binomials, family_order(spec));

    // Canonical labeling m_1, m_2, ...: pairs i from h-1 down to 1, j from h down to i+1.
    const PathProducts Y{spec, G};
    std::vector<Monomial> labeled;
    for (int i = spec.h - 1; i >= 1; --i)
        for (int j = spec.h; j > i; --j)
            labeled.push_back(spec.kind == FamilyKind::B ? Y.Y1(i) * Y.Y2(j) : Y.Y1(j) * Y.Y2(i));
    if (spec.kind == FamilyKind::Bst) {
        const Monomial U = Y.U();
        for (int i = spec.h - 1; i >= 1; --i)
            for (int j = spec.h; j > i; --j) labeled.push_back(Y.Y1(j) * Y.Y1(i) * U);
        for (int i = spec.h; i >= 1; --i) labeled.push_back(Y.Y1(i) * Y.Y1(i) * U);
    }

    const auto& gens = out.ideal.generators();
    if (labeled.size() != gens.size())
        throw MathError("labeled generator count " + std::to_string(labeled.size()) +
                        " differs from the initial ideal's " + std::to_string(gens.size()));
    for (const auto& m : labeled) {
        auto it = std::find(gens.begin(), gens.end(), m);
        if (it == gens.end()) throw MathError("labeled generator is not a minimal generator of the initial ideal");
        out.canonical_order.push_back(static_cast<std::size_t>(it - gens.begin()));
    }
    return out;
}

}  // namespace regquot
