#include "support.hpp"

#include "thetalab/errors.hpp"
#include "thetalab/theta.hpp"

#include <doctest.h>

#include <numeric>

using namespace thetalab;
using namespace testing;

namespace {

int literal_theta(const SimplicialComplex& x)
{
    return theta(x, {.use_dimension_bound = false});
}

} // namespace

TEST_CASE("theta of boundary spheres")
{
    for (int n = 1; n <= 5; ++n) {
        CHECK(theta(boundary_simplex(n)) == n);
        CHECK(literal_theta(boundary_simplex(n)) == n);
    }
}

TEST_CASE("theta of the trivial complexes is zero")
{
    CHECK(theta(SimplicialComplex::simplex({1, 2, 3})) == 0);
    CHECK(theta(SimplicialComplex::empty_complex({1, 2})) == 0);
    CHECK(theta(SimplicialComplex::void_complex()) == 0);
}

TEST_CASE("theta of the six-vertex example complex")
{
    CHECK(theta(x6_complex()) == 3);
    CHECK(oracle::theta(faces_of(x6_complex())) == 3);
}

TEST_CASE("theta of complete bipartite graphs")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(theta(independence_complex(complete_bipartite_graph(n, n))) == 1);
}

TEST_CASE("theta matches the definition oracle on random complexes")
{
    for (const auto& x : small_complexes(150, 7, 4, 21)) {
        const int ref = oracle::theta(faces_of(x));
        CHECK(theta(x) == ref);
        CHECK(literal_theta(x) == ref);
    }
}

TEST_CASE("theta matches the definition oracle on independence complexes")
{
    for (const auto& g : small_graphs(80, 8, 23)) {
        const auto x = independence_complex(g);
        CHECK(theta(x) == oracle::theta(oracle::ind(g).faces));
    }
}

TEST_CASE("theta-prime vertices")
{
    for (int n = 1; n <= 4; ++n) {
        const auto x = boundary_simplex(n);
        for (VertexId v : x.vertices())
            CHECK(is_theta_prime_vertex(x, v));
        CHECK(is_theta_prime_complex(x));
    }
    // Vertex 0 is a cone point.
    const auto cone = cx({0, 1, 2, 3}, {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}});
    CHECK_FALSE(is_theta_prime_vertex(cone, 0));
    const auto c6 = independence_complex(complement_cycle_graph(6));
    for (VertexId v : c6.vertices())
        CHECK(is_theta_prime_vertex(c6, v));
    CHECK_FALSE(is_theta_prime_vertex(cx({1, 2, 3}, {{1, 2}}), 3));
}

TEST_CASE("theta-prime complexes")
{
    CHECK(is_theta_prime_complex(SimplicialComplex::empty_complex()));
    for (int n = 4; n <= 8; ++n)
        CHECK(is_theta_prime_complex(independence_complex(complement_cycle_graph(n))));
    const Graph h = disjoint_union(cycle_graph(5), cycle_graph(5)).complement();
    CHECK_FALSE(is_theta_prime_complex(independence_complex(h)));
}

TEST_CASE("reduction over matchings counts every edge")
{
    for (int n = 1; n <= 4; ++n) {
        const auto x = independence_complex(matching_graph(n));
        const auto trace = theta_prime_reduction(x, x.ground());
        CHECK(trace.prime_count == n);
        CHECK(trace.final_complex.is_empty());
        CHECK(oracle::theta(faces_of(x)) == n);
    }
}

TEST_CASE("reduction edge cases")
{
    const auto s = SimplicialComplex::simplex({1, 2, 3});
    const std::vector<VertexId> f{1, 3};
    const auto t = theta_prime_reduction(s, f);
    CHECK(t.prime_count == 0);
    CHECK(t.final_complex == SimplicialComplex::simplex({2}));
    const auto x = boundary_simplex(3);
    const auto none = theta_prime_reduction(x, std::vector<VertexId>{});
    CHECK(none.steps.empty());
    CHECK(none.final_complex == x);
    CHECK_THROWS_AS(theta_prime_reduction(x, std::vector<VertexId>{1, 1}), InputError);
    CHECK_THROWS_AS(theta_prime_reduction(x, std::vector<VertexId>{9}), InputError);
}

TEST_CASE("reduction soundness on random complexes and orders")
{
    Rng rng(31);
    for (const auto& x : small_complexes(100, 7, 4, 29)) {
        const int t = literal_theta(x);
        auto order = x.ground();
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t len = 0; len <= order.size(); ++len) {
            const std::vector<VertexId> f(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(len));
            const auto trace = theta_prime_reduction(x, f);
            CHECK(x.contains_face(trace.prime_set));
            CHECK(trace.prime_count == static_cast<int>(trace.prime_set.size()));
            CHECK(t <= literal_theta(trace.final_complex) + trace.prime_count);
            if (len == order.size())
                CHECK(trace.prime_count == t);
        }
    }
}

TEST_CASE("circuit cover number examples")
{
    for (int n = 1; n <= 4; ++n) {
        CHECK(circuit_cover_number(independence_complex(complete_bipartite_graph(n, n))) == n);
        CHECK(circuit_cover_number(independence_complex(matching_graph(n))) == n);
    }
    CHECK(circuit_cover_number(SimplicialComplex::simplex({1, 2, 3})) == 0);
    CHECK(circuit_cover_number(SimplicialComplex::void_complex()) == 0);
}

TEST_CASE("circuit cover number matches the definition oracle")
{
    for (const auto& x : small_complexes(120, 7, 4, 37)) {
        if (x.is_void())
            continue;
        const auto cc = minimum_circuit_cover(x);
        CHECK(cc.value == oracle::ccn(oracle::from_lib(x)));
        CHECK(is_circuit_cover(x, x.to_mask(cc.cover)));
        CHECK(literal_theta(x) <= cc.value);
    }
}

TEST_CASE("prime decompositions of matchings and spheres")
{
    for (int n = 1; n <= 3; ++n) {
        const auto x = independence_complex(matching_graph(n));
        const auto pd = prime_decompositions(x);
        REQUIRE(pd.size() == 1);
        CHECK(pd[0].size() == static_cast<std::size_t>(n));
    }
    for (int n = 2; n <= 3; ++n) {
        const auto x = boundary_simplex(n);
        for (auto reading : {DecompositionReading::kMaximal, DecompositionReading::kUnrestricted}) {
            for (const auto& dec : induced_decompositions(x, reading)) {
                CHECK(dec.size() <= 1);
            }
        }
        const auto pd = prime_decompositions(x);
        REQUIRE(pd.size() == 1);
        CHECK(pd[0] == Decomposition{x.ground()});
    }
}

TEST_CASE("the closed neighbourhood of an edge splits off as a join factor")
{
    for (const auto& g : small_graphs(40, 7, 41)) {
        const auto x = independence_complex(g);
        for (auto [a, b] : g.edges()) {
            FaceSet rest;
            const Mask closed = g.closed_neighbors(a) | g.closed_neighbors(b);
            for (int v = 0; v < g.order(); ++v)
                if (!contains_bit(closed, static_cast<std::size_t>(v)))
                    rest.push_back(g.label(v));
            FaceSet e{g.label(a), g.label(b)};
            std::sort(e.begin(), e.end());
            CHECK(is_join_decomposition(x, {rest, e}));
        }
    }
}

TEST_CASE("theta is additive on joins")
{
    auto xs = small_complexes(30, 5, 3, 43);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
        const auto& a = xs[i];
        const auto shift = static_cast<VertexId>(a.ground_size());
        const auto b = relabel(xs[i + 1], [shift](VertexId v) { return v + shift; });
        CHECK(literal_theta(join(a, b)) == literal_theta(a) + literal_theta(b));
    }
}

TEST_CASE("theta equals the best prime decomposition sum")
{
    for (const auto& x : small_complexes(60, 6, 3, 47)) {
        const int t = literal_theta(x);
        int best = -1;
        for (const auto& dec : prime_decompositions(x, DecompositionReading::kUnrestricted)) {
            int sum = 0;
            for (const auto& part : dec)
                sum += literal_theta(induced(x, part));
            best = std::max(best, sum);
        }
        CHECK(best == t);
    }
}

TEST_CASE("monotone under induced subcomplexes and bounded by dimension")
{
    for (const auto& x : small_complexes(60, 6, 4, 53)) {
        const int t = literal_theta(x);
        CHECK(t <= x.dimension() + 1);
        for (Mask m = 0; m <= x.ground_mask(); ++m) {
            CHECK(literal_theta(induced(x, x.to_face(m))) <= t);
            if (m == x.ground_mask())
                break;
        }
    }
}

TEST_CASE("dichotomy at every vertex")
{
    for (const auto& x : small_complexes(80, 7, 4, 59)) {
        const int t = literal_theta(x);
        for (VertexId v : x.vertices()) {
            const int d = literal_theta(deletion(x, v));
            const int l = literal_theta(link(x, v));
            CHECK((t == d || t == l + 1));
        }
    }
}

TEST_CASE("the link bound fails on the boundary of a triangle")
{
    // theta(lk) <= theta(del) is false here: del is an edge, lk is two points.
    const auto x = boundary_simplex(2);
    CHECK(literal_theta(deletion(x, 0)) == 0);
    CHECK(literal_theta(link(x, 0)) == 1);
    CHECK(oracle::theta(oracle::del(faces_of(x), 0)) == 0);
    CHECK(oracle::theta(oracle::lk(faces_of(x), 0)) == 1);
}
