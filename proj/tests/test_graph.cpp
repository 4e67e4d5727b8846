#include "support.hpp"

#include "thetalab/errors.hpp"
#include "thetalab/io.hpp"

#include <doctest.h>

#include <numeric>

using namespace thetalab;
using namespace testing;

namespace {

bool isomorphic_small(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            ok = ok && b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("adjacency is symmetric and irreflexive")
{
    Graph g(3);
    g.add_edge(0, 1);
    CHECK(g.adjacent(1, 0));
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 5), InputError);
}

TEST_CASE("independence complex examples")
{
    CHECK(independence_complex(complete_graph(3)).facets() == std::vector<FaceSet>{{0}, {1}, {2}});
    CHECK(independence_complex(cycle_graph(4)).facets() == std::vector<FaceSet>{{0, 2}, {1, 3}});
    const auto m3 = independence_complex(matching_graph(3));
    CHECK(m3.facet_count() == 8);
    CHECK(independence_complex(Graph(0)).is_empty());
}

TEST_CASE("vertex deletions")
{
    CHECK(isomorphic_small(delete_vertex(cycle_graph(5), 0).graph, path_graph(4)));
    CHECK(isomorphic_small(delete_closed_neighborhood(cycle_graph(5), 0).graph, complete_graph(2)));
    CHECK(delete_vertex(complete_graph(1), 0).graph.order() == 0);
    const auto sub = delete_vertex(cycle_graph(5), 2);
    CHECK(sub.original == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("edge contractions")
{
    CHECK(isomorphic_small(contract_edge(cycle_graph(5), 0, 1), cycle_graph(4)));
    CHECK(isomorphic_small(contract_edge(complete_graph(2), 0, 1), complete_graph(1)));
    CHECK(isomorphic_small(contract_edge(cycle_graph(4), 0, 1), complete_graph(3)));
    CHECK_THROWS_AS(contract_edge(cycle_graph(4), 0, 2), InputError);
    for (const auto& g : small_graphs(30, 8, 127)) {
        for (auto [x, y] : g.edges()) {
            const Graph h = contract_edge(g, x, y);
            CHECK(h.order() == g.order() - 1);
            for (int u = 0; u < h.order(); ++u) {
                CHECK_FALSE(h.adjacent(u, u));
                for (int v = 0; v < h.order(); ++v)
                    CHECK(h.adjacent(u, v) == h.adjacent(v, u));
            }
        }
    }
}

TEST_CASE("chordality")
{
    CHECK(is_chordal(path_graph(6)).has_value());
    CHECK(is_chordal(complete_bipartite_graph(1, 5)).has_value());
    CHECK_FALSE(is_chordal(cycle_graph(4)).has_value());
    CHECK(is_chordal(complete_graph(6)).has_value());
    for (const auto& g : small_graphs(60, 8, 131)) {
        const auto peo = is_chordal(g);
        if (!peo)
            continue;
        Mask remaining = g.all();
        for (int v : *peo) {
            const Mask later = g.closed_neighbors(v) & remaining & ~bit(static_cast<std::size_t>(v));
            for_each_bit(later, [&](std::size_t a) {
                for_each_bit(later, [&](std::size_t b) {
                    if (a != b)
                        CHECK(g.adjacent(static_cast<int>(a), static_cast<int>(b)));
                });
            });
            remaining &= ~bit(static_cast<std::size_t>(v));
        }
    }
}

TEST_CASE("chordality agrees with a brute-force hole search")
{
    // A graph is chordal iff no induced cycle of length >= 4; checked on every vertex subset.
    for (const auto& g : small_graphs(60, 7, 137)) {
        bool hole = false;
        for (Mask m = 0; m <= g.all() && !hole; ++m) {
            const int k = popcount(m);
            if (k >= 4) {
                bool two_regular = true;
                for_each_bit(m, [&](std::size_t v) {
                    two_regular = two_regular && popcount(g.closed_neighbors(static_cast<int>(v)) & m) == 3;
                });
                if (two_regular) {
                    // Connected 2-regular induced subgraph is a cycle.
                    Mask seen = bit(static_cast<std::size_t>(std::countr_zero(m)));
                    for (int step = 0; step < k; ++step) {
                        Mask next = seen;
                        for_each_bit(seen, [&](std::size_t v) { next |= g.closed_neighbors(static_cast<int>(v)) & m; });
                        seen = next;
                    }
                    hole = seen == m;
                }
            }
            if (m == g.all())
                break;
        }
        CHECK(is_chordal(g).has_value() == !hole);
    }
}

TEST_CASE("forbidden subgraph predicates")
{
    CHECK_FALSE(is_co_chordal(complement_cycle_graph(4)));
    CHECK_FALSE(is_co_chordal(complement_cycle_graph(5)));
    CHECK(is_co_chordal(complement_cycle_graph(3)));
    CHECK(is_co_chordal(claw_graph()));
    CHECK_FALSE(is_claw_free(claw_graph()));
    CHECK(is_claw_free(cycle_graph(6)));
    CHECK(is_2k2_free(cycle_graph(5)));
    CHECK_FALSE(is_2k2_free(matching_graph(2)));
}

TEST_CASE("independence number and covers")
{
    CHECK(alpha(cycle_graph(5)) == 2);
    const Graph petersen = kneser_graph(5, 2);
    CHECK(alpha(petersen) == 4);
    CHECK(oracle::alpha(petersen) == 4);
    CHECK_FALSE(simplicial_vertex(cycle_graph(4)).has_value());
    for (const auto& g : small_graphs(60, 9, 139)) {
        CHECK(alpha(g) == oracle::alpha(g));
        for (Mask f : minimal_vertex_covers(g)) {
            CHECK(is_vertex_cover(g, f));
            for_each_bit(f, [&](std::size_t v) { CHECK_FALSE(is_vertex_cover(g, f & ~bit(v))); });
        }
    }
}

TEST_CASE("independence complexes commute with graph operations")
{
    for (const auto& g : small_graphs(40, 8, 149)) {
        const auto x = independence_complex(g);
        for (int v = 0; v < g.order(); ++v) {
            const auto lbl = g.label(v);
            CHECK(deletion(x, lbl) == independence_complex(delete_vertex(g, v).graph));
            const auto l = link(x, lbl);
            const auto h = delete_closed_neighborhood(g, v).graph;
            CHECK(oracle::from_lib(l).faces == oracle::ind(h).faces);
        }
        const Mask keep = g.all() & 0x55;
        std::vector<VertexId> labels;
        for_each_bit(keep, [&](std::size_t v) { labels.push_back(g.label(static_cast<int>(v))); });
        std::sort(labels.begin(), labels.end());
        CHECK(induced(x, labels) == independence_complex(induced_subgraph(g, keep).graph));
        auto circ = circuits(x);
        std::sort(circ.begin(), circ.end());
        std::vector<FaceSet> edges;
        for (auto [a, b] : g.edges())
            edges.push_back({std::min(g.label(a), g.label(b)), std::max(g.label(a), g.label(b))});
        std::sort(edges.begin(), edges.end());
        CHECK(circ == edges);
    }
}

TEST_CASE("graph text format round-trips")
{
    for (const auto& g : small_graphs(30, 9, 151)) {
        const Graph h = parse_graph(write_graph(g));
        CHECK(h.order() == g.order());
        CHECK(h.edges() == g.edges());
        CHECK(h.labels() == g.labels());
    }
    const Graph g = parse_graph("# c\n3 7\nvertex 1\n");
    CHECK(g.order() == 3);
    CHECK(g.labels() == std::vector<VertexId>{1, 3, 7});
    CHECK(g.adjacent(1, 2));
    CHECK_THROWS_AS(parse_graph("1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("1\n"), ParseError);
}
