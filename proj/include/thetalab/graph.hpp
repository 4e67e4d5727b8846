#pragma once

#include "thetalab/bits.hpp"
#include "thetalab/complex.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace thetalab {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64), adjacency as bit masks.
/// Each vertex carries a label used for I/O and for the ground set of Ind(G).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    Mask all() const { return low_bits(adj_.size()); }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return contains_bit(adj_[static_cast<std::size_t>(u)], static_cast<std::size_t>(v)); }
    Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    Mask closed_neighbors(int v) const { return adj_[static_cast<std::size_t>(v)] | bit(static_cast<std::size_t>(v)); }
    int degree(int v) const { return popcount(adj_[static_cast<std::size_t>(v)]); }
    int max_degree() const;

    /// Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;
    bool has_edges() const;

    const std::vector<VertexId>& labels() const { return labels_; }
    void set_labels(std::vector<VertexId> labels);
    VertexId label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

    /// Induced subgraph on `keep`, vertices renumbered in ascending order; labels carried over.
    Graph induced(Mask keep) const;
    Graph complement() const;

    /// Non-isolated vertices of G[within].
    Mask non_isolated(Mask within) const;
    /// Whether G[within] has an edge.
    bool has_edge_within(Mask within) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<Mask> adj_;
    std::vector<VertexId> labels_;
};

/// A subgraph together with the original index of each of its vertices.
struct Subgraph {
    Graph graph;
    std::vector<int> original;
};

Subgraph delete_vertex(const Graph& g, int v);
Subgraph delete_closed_neighborhood(const Graph& g, int v);
Subgraph induced_subgraph(const Graph& g, Mask keep);

/// G/e for e = {x, y}: the merged vertex takes the place (and label) of min(x, y).
Graph contract_edge(const Graph& g, int x, int y);

/// Vertices of b are appended after those of a, labels shifted past a's largest label.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Ind(G) on the ground of vertex labels; facets are the maximal independent sets.
SimplicialComplex independence_complex(const Graph& g);

/// Maximal independent sets of G[within] (Bron–Kerbosch with pivoting on the complement), sorted.
std::vector<Mask> maximal_independent_sets(const Graph& g, Mask within);
std::vector<Mask> maximal_independent_sets(const Graph& g);

/// A perfect elimination ordering if G is chordal.
std::optional<std::vector<int>> is_chordal(const Graph& g);
bool is_co_chordal(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_2k2_free(const Graph& g);

/// Independence number of G[within].
int alpha(const Graph& g, Mask within);
int alpha(const Graph& g);
/// A maximum independent set of G[within].
Mask maximum_independent_set(const Graph& g, Mask within);

/// Minimal vertex covers (complements of maximal independent sets), sorted.
std::vector<Mask> minimal_vertex_covers(const Graph& g);
bool is_vertex_cover(const Graph& g, Mask cover);
bool is_independent(const Graph& g, Mask set);

/// Some vertex whose neighbourhood is a clique (lowest index first).
std::optional<int> simplicial_vertex(const Graph& g);

} // namespace thetalab
