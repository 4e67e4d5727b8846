#include "thetalab/graph.hpp"

#include "thetalab/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

namespace thetalab {

Graph::Graph(int n)
{
    if (n < 0)
        throw InputError("graph order must be nonnegative");
    if (n > static_cast<int>(kMaxGround))
        throw SizeError("graphs are limited to 64 vertices");
    adj_.assign(static_cast<std::size_t>(n), 0);
    labels_.resize(static_cast<std::size_t>(n));
    std::iota(labels_.begin(), labels_.end(), VertexId{0});
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw InputError("edge endpoint out of range");
    if (u == v)
        throw InputError("loops are not allowed in a simple graph");
    adj_[static_cast<std::size_t>(u)] |= bit(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)] |= bit(static_cast<std::size_t>(u));
}

int Graph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < order(); ++v)
        best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for_each_bit(adj_[static_cast<std::size_t>(u)] & ~low_bits(static_cast<std::size_t>(u) + 1),
                     [&](std::size_t v) { out.emplace_back(u, static_cast<int>(v)); });
    }
    return out;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (Mask m : adj_)
        twice += static_cast<std::size_t>(popcount(m));
    return twice / 2;
}

bool Graph::has_edges() const
{
    return std::any_of(adj_.begin(), adj_.end(), [](Mask m) { return m != 0; });
}

void Graph::set_labels(std::vector<VertexId> labels)
{
    if (labels.size() != adj_.size())
        throw InputError("label count does not match graph order");
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("graph labels must be distinct");
    labels_ = std::move(labels);
}

Graph Graph::induced(Mask keep) const
{
    keep &= all();
    Graph h(popcount(keep));
    std::vector<VertexId> labels;
    std::size_t j = 0;
    for_each_bit(keep, [&](std::size_t v) {
        h.adj_[j++] = compress(adj_[v] & keep, keep);
        labels.push_back(labels_[v]);
    });
    h.labels_ = std::move(labels);
    return h;
}

Graph Graph::complement() const
{
    Graph h = *this;
    for (std::size_t v = 0; v < adj_.size(); ++v)
        h.adj_[v] = all() & ~adj_[v] & ~bit(v);
    return h;
}

Mask Graph::non_isolated(Mask within) const
{
    Mask out = 0;
    for_each_bit(within, [&](std::size_t v) {
        if (adj_[v] & within)
            out |= bit(v);
    });
    return out;
}

bool Graph::has_edge_within(Mask within) const
{
    bool found = false;
    for_each_bit(within, [&](std::size_t v) { found = found || (adj_[v] & within) != 0; });
    return found;
}

Subgraph induced_subgraph(const Graph& g, Mask keep)
{
    keep &= g.all();
    Subgraph out{g.induced(keep), {}};
    for_each_bit(keep, [&](std::size_t v) { out.original.push_back(static_cast<int>(v)); });
    return out;
}

Subgraph delete_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw InputError("vertex " + std::to_string(v) + " is not in the graph");
    return induced_subgraph(g, g.all() & ~bit(static_cast<std::size_t>(v)));
}

Subgraph delete_closed_neighborhood(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw InputError("vertex " + std::to_string(v) + " is not in the graph");
    return induced_subgraph(g, g.all() & ~g.closed_neighbors(v));
}

Graph contract_edge(const Graph& g, int x, int y)
{
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !g.adjacent(x, y))
        throw InputError("contract_edge: not an edge of the graph");
    const int keep = std::min(x, y);
    const int gone = std::max(x, y);
    const Mask merged = (g.neighbors(x) | g.neighbors(y)) & ~bit(static_cast<std::size_t>(x)) & ~bit(static_cast<std::size_t>(y));

    Graph h(g.order());
    for (auto [u, v] : g.edges()) {
        if (u == x || u == y || v == x || v == y)
            continue;
        h.add_edge(u, v);
    }
    for_each_bit(merged, [&](std::size_t z) { h.add_edge(keep, static_cast<int>(z)); });
    h.set_labels(g.labels());
    return h.induced(h.all() & ~bit(static_cast<std::size_t>(gone)));
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(u + a.order(), v + a.order());
    std::vector<VertexId> labels = a.labels();
    const VertexId shift = a.labels().empty() ? 0 : *std::max_element(a.labels().begin(), a.labels().end()) + 1;
    for (VertexId l : b.labels())
        labels.push_back(l + shift);
    g.set_labels(std::move(labels));
    return g;
}

std::vector<Mask> maximal_independent_sets(const Graph& g, Mask within)
{
    within &= g.all();
    std::vector<Mask> out;
    auto free_of = [&](std::size_t v) { return within & ~g.closed_neighbors(static_cast<int>(v)); };
    auto expand = [&](auto&& self, Mask chosen, Mask candidates, Mask excluded) -> void {
        if (candidates == 0 && excluded == 0) {
            out.push_back(chosen);
            return;
        }
        std::size_t pivot = 0;
        int best = -1;
        for_each_bit(candidates | excluded, [&](std::size_t u) {
            const int c = popcount(candidates & free_of(u));
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        for_each_bit(candidates & ~free_of(pivot), [&](std::size_t v) {
            if (!contains_bit(candidates, v))
                return;
            self(self, chosen | bit(v), candidates & free_of(v), excluded & free_of(v));
            candidates &= ~bit(v);
            excluded |= bit(v);
        });
    };
    expand(expand, Mask{0}, within, Mask{0});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> maximal_independent_sets(const Graph& g)
{
    return maximal_independent_sets(g, g.all());
}

SimplicialComplex independence_complex(const Graph& g)
{
    // Labels may be unsorted; facets are expressed through labels.
    std::vector<FaceSet> facets;
    for (Mask m : maximal_independent_sets(g)) {
        FaceSet f;
        for_each_bit(m, [&](std::size_t v) { f.push_back(g.label(static_cast<int>(v))); });
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(g.labels(), facets);
}

std::optional<std::vector<int>> is_chordal(const Graph& g)
{
    const int n = g.order();
    // Maximum cardinality search; the reverse visit order is a PEO iff G is chordal.
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    Mask visited = 0;
    std::vector<int> visit;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (contains_bit(visited, static_cast<std::size_t>(v)))
                continue;
            if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)])
                pick = v;
        }
        visited |= bit(static_cast<std::size_t>(pick));
        visit.push_back(pick);
        for_each_bit(g.neighbors(pick) & ~visited, [&](std::size_t u) { ++weight[u]; });
    }
    std::vector<int> peo(visit.rbegin(), visit.rend());

    Mask later = g.all();
    for (int v : peo) {
        later &= ~bit(static_cast<std::size_t>(v));
        const Mask nb = g.neighbors(v) & later;
        bool clique = true;
        for_each_bit(nb, [&](std::size_t u) {
            if (!is_subset(nb & ~bit(u), g.neighbors(static_cast<int>(u))))
                clique = false;
        });
        if (!clique)
            return std::nullopt;
    }
    return peo;
}

bool is_co_chordal(const Graph& g)
{
    return is_chordal(g.complement()).has_value();
}

namespace {

// Calls f(mask) for every 4-subset of the vertices; stops early when f returns true.
template <typename F>
bool any_four_subset(const Graph& g, F&& f)
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (f(std::array<int, 4>{a, b, c, d}))
                        return true;
    return false;
}

int edges_among(const Graph& g, const std::array<int, 4>& q, std::array<int, 4>& deg)
{
    int e = 0;
    deg = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.adjacent(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)])) {
                ++e;
                ++deg[static_cast<std::size_t>(i)];
                ++deg[static_cast<std::size_t>(j)];
            }
    return e;
}

} // namespace

bool is_claw_free(const Graph& g)
{
    return !any_four_subset(g, [&](const std::array<int, 4>& q) {
        std::array<int, 4> deg{};
        if (edges_among(g, q, deg) != 3)
            return false;
        return std::count(deg.begin(), deg.end(), 3) == 1;
    });
}

bool is_2k2_free(const Graph& g)
{
    return !any_four_subset(g, [&](const std::array<int, 4>& q) {
        std::array<int, 4> deg{};
        if (edges_among(g, q, deg) != 2)
            return false;
        return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
    });
}

namespace {

struct AlphaSearch {
    const Graph& g;
    std::unordered_map<Mask, Mask> memo;

    Mask best_set(Mask s)
    {
        if (s == 0)
            return 0;
        if (auto it = memo.find(s); it != memo.end())
            return it->second;
        int pivot = -1;
        int pivot_deg = -1;
        Mask isolated = 0;
        for_each_bit(s, [&](std::size_t v) {
            const int d = popcount(g.neighbors(static_cast<int>(v)) & s);
            if (d == 0)
                isolated |= bit(v);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = static_cast<int>(v);
            }
        });
        Mask result;
        if (isolated != 0) {
            result = isolated | best_set(s & ~isolated);
        } else {
            const Mask skip = best_set(s & ~bit(static_cast<std::size_t>(pivot)));
            const Mask take = bit(static_cast<std::size_t>(pivot)) | best_set(s & ~g.closed_neighbors(pivot));
            result = popcount(take) > popcount(skip) ? take : skip;
        }
        memo.emplace(s, result);
        return result;
    }
};

} // namespace

Mask maximum_independent_set(const Graph& g, Mask within)
{
    AlphaSearch search{g, {}};
    return search.best_set(within & g.all());
}

int alpha(const Graph& g, Mask within)
{
    return popcount(maximum_independent_set(g, within));
}

int alpha(const Graph& g)
{
    return alpha(g, g.all());
}

bool is_independent(const Graph& g, Mask set)
{
    return !g.has_edge_within(set);
}

bool is_vertex_cover(const Graph& g, Mask cover)
{
    return is_independent(g, g.all() & ~cover);
}

std::vector<Mask> minimal_vertex_covers(const Graph& g)
{
    std::vector<Mask> out;
    for (Mask m : maximal_independent_sets(g))
        out.push_back(g.all() & ~m);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> simplicial_vertex(const Graph& g)
{
    for (int v = 0; v < g.order(); ++v) {
        const Mask nb = g.neighbors(v);
        bool clique = true;
        for_each_bit(nb, [&](std::size_t u) {
            if (!is_subset(nb & ~bit(u), g.neighbors(static_cast<int>(u))))
                clique = false;
        });
        if (clique)
            return v;
    }
    return std::nullopt;
}

} // namespace thetalab
