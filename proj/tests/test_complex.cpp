#include "support.hpp"

#include "thetalab/errors.hpp"
#include "thetalab/io.hpp"

#include <doctest.h>

using namespace thetalab;
using namespace testing;

TEST_CASE("from_facets keeps an antichain of distinct facets")
{
    CHECK(cx({1, 2, 3}, {{1, 2}, {1, 2}, {3}}).facets() == std::vector<FaceSet>{{1, 2}, {3}});
    CHECK(cx({1, 2, 3}, {{1}, {1, 2}}).facets() == std::vector<FaceSet>{{1, 2}});
    const auto e = cx({1, 2}, {{}});
    CHECK(e.is_empty());
    CHECK(e.ghosts() == std::vector<VertexId>{1, 2});
    CHECK_THROWS_AS(cx({1, 2}, {{3}}), InputError);
    CHECK_THROWS_AS(cx({1, 1}, {{1}}), InputError);
}

TEST_CASE("void and empty are distinct")
{
    const auto v = SimplicialComplex::void_complex();
    const auto e = SimplicialComplex::empty_complex();
    CHECK(v.is_void());
    CHECK_FALSE(e.is_void());
    CHECK(e.is_empty());
    CHECK(v.dimension() == -1);
    CHECK(e.dimension() == -1);
    CHECK(canonical_key(v) != canonical_key(e));
    CHECK_FALSE(v.contains_face(FaceSet{}));
    CHECK(e.contains_face(FaceSet{}));
}

TEST_CASE("deletion examples")
{
    const auto bd2 = cx({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(deletion(bd2, 1) == cx({2, 3}, {{2, 3}}));
    CHECK(deletion(SimplicialComplex::simplex({1, 2}), 2) == SimplicialComplex::simplex({1}));
    const auto ind_k2 = independence_complex(complete_graph(2));
    const auto d = deletion(ind_k2, 0);
    CHECK(d.facets() == std::vector<FaceSet>{{1}});
    CHECK(d.ground() == std::vector<VertexId>{1});
}

TEST_CASE("link examples")
{
    const auto bd2 = cx({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
    for (VertexId v : {1U, 2U, 3U})
        CHECK(link(bd2, v).facets().size() == 2);
    CHECK(link(bd2, 1) == cx({2, 3}, {{2}, {3}}));
    CHECK(link(SimplicialComplex::simplex({1, 2, 3}), 1) == SimplicialComplex::simplex({2, 3}));
    const auto with_ghost = cx({1, 2, 3}, {{1, 2}});
    CHECK(link(with_ghost, 3).is_empty());
    CHECK(deletion(with_ghost, 3).is_empty());
}

TEST_CASE("induced subcomplex examples")
{
    const auto bd3 = boundary_simplex(3);
    const std::vector<VertexId> s{0, 1, 2};
    CHECK(induced(bd3, s) == SimplicialComplex::simplex({0, 1, 2}));
    CHECK(induced(bd3, std::vector<VertexId>{}).is_empty());
    CHECK(induced(bd3, bd3.ground()) == bd3);
}

TEST_CASE("join examples")
{
    const auto a = SimplicialComplex::simplex({1, 2});
    const auto b = SimplicialComplex::simplex({3, 4});
    CHECK(join(a, b) == SimplicialComplex::simplex({1, 2, 3, 4}));
    const auto k2a = cx({1, 2}, {{1}, {2}});
    const auto k2b = cx({3, 4}, {{3}, {4}});
    const auto sq = join(k2a, k2b);
    CHECK(sq == relabel(independence_complex(matching_graph(2)), [](VertexId v) { return v + 1; }));
    auto sq_facets = sq.facets();
    std::sort(sq_facets.begin(), sq_facets.end());
    CHECK(sq_facets == std::vector<FaceSet>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const auto x = cx({1, 2, 3}, {{1, 2}, {3}});
    const auto joined = join(x, SimplicialComplex::empty_complex());
    CHECK(joined == x);
}

TEST_CASE("circuits examples")
{
    const Graph c5 = cycle_graph(5);
    std::vector<FaceSet> edges;
    for (auto [u, v] : c5.edges())
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    std::sort(edges.begin(), edges.end());
    auto circ = circuits(independence_complex(c5));
    std::sort(circ.begin(), circ.end());
    CHECK(circ == edges);
    for (int n = 1; n <= 4; ++n) {
        const auto c = circuits(boundary_simplex(n));
        REQUIRE(c.size() == 1);
        CHECK(c[0].size() == static_cast<std::size_t>(n + 1));
    }
    CHECK(circuits(SimplicialComplex::simplex({1, 2, 3})).empty());
    CHECK(circuits(cx({1, 2, 3}, {{1, 2}})) == std::vector<FaceSet>{{3}});
}

TEST_CASE("circuits match the minimal non-faces oracle")
{
    for (const auto& x : small_complexes(60, 7, 4, 11)) {
        auto lib = circuits(x);
        std::sort(lib.begin(), lib.end());
        std::vector<FaceSet> ref;
        for (const auto& f : oracle::circuits(oracle::from_lib(x)))
            ref.emplace_back(f.begin(), f.end());
        std::sort(ref.begin(), ref.end());
        CHECK(lib == ref);
    }
}

TEST_CASE("non-cone vertices")
{
    CHECK(non_cone_vertices(SimplicialComplex::simplex({1, 2, 3})).empty());
    CHECK(non_cone_vertices(boundary_simplex(2)).size() == 3);
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK(non_cone_vertices(independence_complex(g)) == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("weak pseudo-manifolds")
{
    const Graph h = disjoint_union(cycle_graph(5), cycle_graph(5)).complement();
    CHECK(is_weak_pseudo_manifold(independence_complex(h)));
    CHECK_FALSE(is_weak_pseudo_manifold(independence_complex(path_graph(3))));
    for (int n = 1; n <= 4; ++n)
        CHECK(is_weak_pseudo_manifold(independence_complex(matching_graph(n))));
}

TEST_CASE("canonical keys")
{
    const auto a = cx({1, 2, 3}, {{1, 2}, {2, 3}});
    const auto b = cx({1, 2, 3}, {{2, 3}, {1, 2}});
    CHECK(canonical_key(a) == canonical_key(b));
    const auto cone = SimplicialComplex::simplex({1, 2});
    CHECK(canonical_key(cone) != canonical_key(deletion(cone, 1)));
}

TEST_CASE("link and deletion commute as in the three identities")
{
    for (const auto& x : small_complexes(40, 6, 4, 5)) {
        const auto vs = x.vertices();
        for (VertexId u : vs) {
            for (VertexId v : vs) {
                if (u == v)
                    continue;
                CHECK(faces_of(link(link(x, v), u)) == faces_of(link(link(x, u), v)));
                CHECK(deletion(deletion(x, v), u) == deletion(deletion(x, u), v));
                const auto f = faces_of(x);
                CHECK(oracle::del(oracle::lk(f, v), u) == oracle::lk(oracle::del(f, u), v));
                // With u a ghost of lk(X;v), the ghost convention makes the left side EMPTY.
                if (link(x, v).position_of(u) && contains_bit(link(x, v).vertex_mask(), *link(x, v).position_of(u)))
                    CHECK(faces_of(deletion(link(x, v), u)) == faces_of(link(deletion(x, u), v)));
            }
        }
    }
}

TEST_CASE("the ghost convention breaks the third identity at inner ghosts")
{
    // 0 and 1 are actual vertices of X, but 0 is a ghost of lk(X;1).
    const auto x = cx({0, 1, 2, 3, 4}, {{0, 2, 3, 4}, {1, 2, 3, 4}});
    const auto left = deletion(link(x, 1), 0);
    const auto right = link(deletion(x, 0), 1);
    CHECK(left.is_empty());
    CHECK(right == SimplicialComplex::simplex({2, 3, 4}));
    CHECK(oracle::del(oracle::lk(faces_of(x), 1), 0) == faces_of(right));
}

TEST_CASE("deletion, link and induced agree with the face-set oracle")
{
    for (const auto& x : small_complexes(60, 7, 4, 9)) {
        const auto f = faces_of(x);
        for (VertexId v : x.vertices()) {
            CHECK(faces_of(deletion(x, v)) == oracle::del(f, static_cast<int>(v)));
            CHECK(faces_of(link(x, v)) == oracle::lk(f, static_cast<int>(v)));
        }
        std::vector<VertexId> half;
        for (std::size_t i = 0; i < x.ground().size(); i += 2)
            half.push_back(x.ground()[i]);
        CHECK(faces_of(induced(x, half)) == oracle::restrict_to(f, std::vector<int>(half.begin(), half.end())));
    }
}

TEST_CASE("induced is transitive and faces avoid every circuit")
{
    for (const auto& x : small_complexes(40, 7, 4, 13)) {
        const auto& g = x.ground();
        std::vector<VertexId> s(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(std::min(g.size(), g.size() / 2 + 2)));
        std::vector<VertexId> t(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2));
        CHECK(induced(induced(x, s), t) == induced(x, t));
        const auto circ = circuit_masks(x);
        for (Mask m = 0; m <= x.ground_mask(); ++m) {
            const bool hits = std::any_of(circ.begin(), circ.end(), [&](Mask c) { return is_subset(c, m); });
            CHECK(x.contains_face(m) == !hits);
            if (m == x.ground_mask())
                break;
        }
    }
}

TEST_CASE("join is commutative and associative on faces")
{
    const auto a = cx({1, 2}, {{1}, {2}});
    const auto b = cx({3, 4, 5}, {{3, 4}, {5}});
    const auto c = cx({6, 7}, {{6, 7}});
    CHECK(join(a, b) == join(b, a));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(join(SimplicialComplex::void_complex(), a).is_void());
}

TEST_CASE("complex text format round-trips")
{
    for (const auto& x : small_complexes(30, 8, 4, 17))
        CHECK(parse_complex(write_complex(x)) == x);
    CHECK(parse_complex("VOID\n").is_void());
    CHECK(parse_complex("EMPTY\n").is_empty());
    CHECK(parse_complex("# c\n1 2\nghost: 5\n") == cx({1, 2, 5}, {{1, 2}}));
    CHECK(parse_complex(write_complex(cx({1, 2, 5}, {{}}))) == cx({1, 2, 5}, {{}}));
    CHECK_THROWS_AS(parse_complex("1 x\n"), ParseError);
}
