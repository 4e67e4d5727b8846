#include "support.hpp"

#include "thetalab/errors.hpp"
#include "thetalab/families.hpp"
#include "thetalab/graph_invariants.hpp"

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

TEST_CASE("small associahedral graphs")
{
    CHECK(isomorphic_small(associahedral_graph(4), complete_graph(2)));
    CHECK(isomorphic_small(associahedral_graph(5), cycle_graph(5)));
    CHECK(associahedral_graph(6).order() == 9);
    for (int n = 4; n <= 9; ++n)
        CHECK(associahedral_graph(n).order() == n * (n - 3) / 2);
}

TEST_CASE("associahedral theta grows with the polygon")
{
    for (int n = 4; n <= 8; ++n)
        CHECK(theta_graph(associahedral_graph(n)) == n - 3);
}

TEST_CASE("kneser and named graphs")
{
    const Graph p = kneser_graph(5, 2);
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < p.order(); ++v)
        CHECK(p.degree(v) == 3);
    CHECK(isomorphic_small(kneser_graph(3, 1), complete_graph(3)));
    CHECK(claw_graph().edge_count() == 3);
    CHECK(complement_cycle_graph(5).edge_count() == 5);
    CHECK(matching_graph(3).edge_count() == 3);
    CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
}

TEST_CASE("six-vertex example and spheres")
{
    const auto x = x6_complex();
    CHECK(x.ground_size() == 6);
    CHECK(x.facet_count() == 10);
    CHECK(x.dimension() == 2);
    CHECK(boundary_simplex(3).facet_count() == 4);
    CHECK(simplex_complex(3).facet_count() == 1);
}

TEST_CASE("random generators")
{
    CHECK(random_graph(0, 1, 2, 5).order() == 0);
    CHECK(random_graph(6, 1, 1, 5).edge_count() == 15);
    CHECK(random_graph(6, 0, 1, 5).edge_count() == 0);
    const Graph a = random_graph(9, 1, 2, 42);
    const Graph b = random_graph(9, 1, 2, 42);
    CHECK(a.edges() == b.edges());
    const auto x = random_complex(7, 3, 5, 42);
    const auto y = random_complex(7, 3, 5, 42);
    CHECK(x == y);
    CHECK(x.ground_size() == 7);
    for (const auto& f : x.facets())
        CHECK(f.size() <= 3);
}

TEST_CASE("family specs")
{
    const auto s = parse_family_spec("kneser:5,2");
    CHECK(s.name == "kneser");
    CHECK(s.params == std::vector<long long>{5, 2});
    CHECK(parse_family_spec("x6").params.empty());
    CHECK_THROWS_AS(parse_family_spec(""), InputError);
    CHECK_THROWS_AS(parse_family_spec("kneser:5,x"), InputError);
    CHECK_THROWS_AS(generate(parse_family_spec("nosuch")), InputError);
    CHECK_THROWS_AS(generate(parse_family_spec("kneser:5")), InputError);
    for (const auto& name : family_names()) {
        if (is_random_family(name))
            CHECK_THROWS_AS(generate(parse_family_spec(name + ":5,1,2")), InputError);
    }
    const auto g = generate(parse_family_spec("associahedron:6"));
    REQUIRE(std::holds_alternative<Graph>(g));
    CHECK(std::get<Graph>(g).order() == 9);
    const auto c = generate(parse_family_spec("x6"));
    REQUIRE(std::holds_alternative<SimplicialComplex>(c));
    CHECK(std::get<SimplicialComplex>(c) == x6_complex());
}
