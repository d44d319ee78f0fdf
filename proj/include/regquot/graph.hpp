#pragma once

// Simple graphs, the two path families B_{l,h} and B^{s,t}_{l,h}, their
// primitive even closed walks, walk binomials, family monomial orders and
// initial ideals.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regquot/monomial.hpp"

namespace regquot {

struct Edge {
    std::string label;
    std::size_t u = 0;
    std::size_t v = 0;

    bool operator==(const Edge&) const = default;
};

/// Loopless graph without multiple edges; edge labels are distinct. Edge i
/// is variable i of the edge polynomial ring.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    std::size_t edge_index(const std::string& label) const;
    std::optional<std::size_t> vertex_index(const std::string& label) const;

    /// Edge labels as the variable table of K[E].
    VariableTable edge_variables() const;

    bool is_bipartite() const;
    std::size_t connected_components() const;
    /// Number of connected components that are bipartite.
    std::size_t bipartite_components() const;
    /// Krull dimension of the edge ring: |V| minus the bipartite components
    /// (isolated vertices excluded, since they carry no edge).
    std::size_t edge_ring_dimension() const;

    /// Subgraph induced on the given vertex labels, keeping edge labels.
    SimpleGraph induced_subgraph(const std::vector<std::string>& vertex_labels) const;

    bool operator==(const SimpleGraph&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> edge_lookup_;
    std::map<std::string, std::size_t> vertex_lookup_;
};

/// Cyclic sequence of edge indices into some graph.
struct ClosedWalk {
    std::vector<std::size_t> edges;

    std::size_t length() const noexcept { return edges.size(); }
    bool operator==(const ClosedWalk&) const = default;
    auto operator<=>(const ClosedWalk&) const = default;
};

/// True if the edges can be traversed in sequence, returning to the start.
bool is_closed_walk(const SimpleGraph& G, const ClosedWalk& W);

/// Lexicographically smallest rotation or reflection of the edge sequence.
ClosedWalk canonical_form(const ClosedWalk& W);

std::string to_string(const ClosedWalk& W, const SimpleGraph& G);

/// plus - minus, both over the edge variables.
struct WalkBinomial {
    Monomial plus;
    Monomial minus;

    WalkBinomial negated() const { return {minus, plus}; }
    bool operator==(const WalkBinomial&) const = default;
};

std::string to_string(const WalkBinomial& b, const VariableTable& vars);

enum class FamilyKind { B, Bst };

struct FamilySpec {
    FamilyKind kind = FamilyKind::B;
    std::vector<int> l;  // B: one length per path; Bst: a single entry
    int h = 2;
    int s = 0;  // Bst only
    int t = 0;  // Bst only

    static FamilySpec B(std::vector<int> l);
    static FamilySpec Bst(int l, int h, int s, int t);

    /// Throws BadParams when the invariants fail.
    void validate() const;
    /// l_j (1-based path index); for Bst every path has length parameter l.
    int path_length(int j) const;
    std::string describe() const;

    bool operator==(const FamilySpec&) const = default;
};

/// Label of e_{i,j} ("e(i,j)"), f_k ("f<k>"), g_k ("g<k>").
std::string e_label(int i, int j);
std::string f_label(int k);
std::string g_label(int k);

/// B_{l,h}: h paths of lengths 2 l_j between y1 and y2.
SimpleGraph build_B(const std::vector<int>& l);
/// B^{s,t}_{l,h}: B_{(l,...,l),h} with odd cycles of lengths 2s+1 at y1 and 2t+1 at y2.
SimpleGraph build_Bst(int l, int h, int s, int t);
SimpleGraph build_family(const FamilySpec& spec);

/// Every cycle of a bipartite graph, each once, in canonical form and sorted.
/// Throws NotBipartite, or CapExceeded beyond max_cycles.
std::vector<ClosedWalk> even_cycles(const SimpleGraph& G, std::size_t max_cycles = 10000);

/// W_{i,j} for 1 <= i < j <= h, ordered by (i, j), over build_family(spec).
std::vector<ClosedWalk> primitive_walks_B(const FamilySpec& spec);

struct BstWalks {
    std::vector<ClosedWalk> w1;  // even cycles through two branches
    std::vector<ClosedWalk> w2;  // both odd cycles, two distinct branches
    std::vector<ClosedWalk> w3;  // both odd cycles, one branch used twice

    std::vector<ClosedWalk> all() const;
};

BstWalks primitive_walks_Bst(const FamilySpec& spec);

/// Product of odd-position edges minus product of even-position edges.
/// Throws OddWalk for odd length, BadParams for a walk whose two products agree.
WalkBinomial walk_binomial(const SimpleGraph& G, const ClosedWalk& W);

/// B: pure lex with odd rows before even rows, row then path index ascending.
/// Bst: graded reverse lex along e(odd rows), g, f, e(even rows).
MonomialOrder family_order(const FamilySpec& spec);

/// Leading terms under `order`, minimalized. Throws TieUnresolved if a
/// binomial's two terms compare equal.
MonomialIdeal initial_ideal(const std::vector<WalkBinomial>& binomials, const MonomialOrder& order);

/// The universal Groebner basis binomials written with the leading term
/// first, constructed from the path products (u_{i,j} - v_{i,j}, or the
/// three Bst groups), independently of the walk machinery.
std::vector<WalkBinomial> family_binomials(const FamilySpec& spec);

struct FamilyInitialIdeal {
    SimpleGraph graph;
    MonomialIdeal ideal;
    /// Indices into ideal.generators() in the canonical labeling m_1, m_2, ...
    std::vector<std::size_t> canonical_order;
    std::vector<Monomial> canonical_generators() const;
};

/// in(I_G) of a family graph from its primitive walks and family order,
/// with the canonical generator labeling. Throws MathError if the labeled
/// generators are not exactly the computed minimal generators.
FamilyInitialIdeal family_initial_ideal(const FamilySpec& spec);

}  // namespace regquot
