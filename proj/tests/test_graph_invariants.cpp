#include "support.hpp"

#include "thetalab/collapse.hpp"
#include "thetalab/errors.hpp"
#include "thetalab/graph_invariants.hpp"
#include "thetalab/theta.hpp"

#include <doctest.h>

using namespace thetalab;
using namespace testing;

TEST_CASE("theta of named graphs")
{
    for (int n = 4; n <= 9; ++n)
        CHECK(theta_graph(complement_cycle_graph(n)) == 2);
    CHECK(theta_graph(kneser_graph(5, 2)) == 3);
    CHECK(theta_graph(kneser_graph(3, 1)) == 1);
    for (int n = 1; n <= 5; ++n)
        CHECK(theta_graph(matching_graph(n)) == n);
    CHECK(theta_graph(path_graph(4)) == 1);
    CHECK(theta_graph(Graph(0)) == 0);
    CHECK(theta_graph(Graph(3)) == 0);
}

TEST_CASE("graph theta equals theta of the independence complex")
{
    for (const auto& g : small_graphs(120, 9, 157)) {
        const int ref = oracle::theta(oracle::ind(g).faces);
        CHECK(theta_graph(g) == ref);
        CHECK(theta_graph(g, {.use_bounds = false}) == ref);
        CHECK(theta(independence_complex(g)) == ref);
    }
}

TEST_CASE("graph dichotomy at every vertex")
{
    for (const auto& g : small_graphs(60, 9, 163)) {
        GraphThetaSolver s(g, {.use_bounds = false});
        const int t = s.theta();
        for (int v = 0; v < g.order(); ++v) {
            const int d = s.theta_of(g.all() & ~bit(static_cast<std::size_t>(v)));
            const int l = s.theta_of(g.all() & ~g.closed_neighbors(v));
            CHECK((t == d || t == l + 1));
        }
    }
}

TEST_CASE("matching numbers")
{
    CHECK(induced_matching_number(associahedral_graph(6)) == 2);
    for (int n = 1; n <= 4; ++n) {
        CHECK(induced_matching_number(matching_graph(n)) == n);
        CHECK(min_maximal_matching_number(matching_graph(n)) == n);
    }
    CHECK(induced_matching_number(cycle_graph(7)) == 2);
    CHECK(min_maximal_matching_number(cycle_graph(7)) == 3);
    CHECK(oracle::matchings(cycle_graph(7)) == std::pair{2, 3});
}

TEST_CASE("matching numbers and alpha match brute force")
{
    for (const auto& g : small_graphs(100, 8, 167)) {
        if (g.edge_count() > 18)
            continue;
        const auto [im, mm] = oracle::matchings(g);
        const auto r = induced_matching(g);
        CHECK(r.value == im);
        CHECK(static_cast<int>(r.witness.edges.size()) == im);
        CHECK(is_valid_matching(g, r.witness));
        const auto m = min_maximal_matching(g);
        if (g.has_edges()) {
            CHECK(m.value == mm);
            CHECK(is_valid_matching(g, m.witness));
        } else {
            CHECK(m.value == 0);
        }
        CHECK(is_valid_matching(g, greedy_maximal_matching(g, g.all())));
        CHECK(is_valid_matching(g, greedy_induced_matching(g, g.all())));
    }
}

TEST_CASE("invalid matchings are rejected")
{
    const Graph p4 = path_graph(4);
    CHECK_FALSE(is_valid_matching(p4, {{{0, 1}, {1, 2}}, MatchingKind::kMatching}));
    CHECK_FALSE(is_valid_matching(p4, {{{0, 1}, {2, 3}}, MatchingKind::kInduced}));
    CHECK_FALSE(is_valid_matching(p4, {{{0, 2}}, MatchingKind::kMatching}));
    CHECK(is_valid_matching(p4, {{{1, 2}}, MatchingKind::kMaximal}));
    CHECK_FALSE(is_valid_matching(cycle_graph(4), {{{0, 1}}, MatchingKind::kDominatingInduced}));
}

TEST_CASE("graph circuit cover number")
{
    for (int n = 1; n <= 4; ++n) {
        CHECK(ccn_graph(complete_bipartite_graph(n, n)) == n);
        CHECK(ccn_graph(matching_graph(n)) == n);
    }
    CHECK(ccn_graph(Graph(4)) == 0);
    for (const auto& g : small_graphs(80, 8, 173)) {
        const auto cc = min_circuit_cover(g);
        CHECK(cc.value == oracle::ccn_graph(g));
        CHECK(is_vertex_cover(g, cc.cover));
        CHECK(alpha(g, cc.cover) == cc.value);
        CHECK(cc.value == oracle::ccn(oracle::ind(g)));
    }
}

TEST_CASE("privacy degree")
{
    CHECK(privacy_degree(complete_graph(4)) == 0);
    CHECK(privacy_degree(complete_graph(2)) == 0);
    CHECK(privacy_degree(path_graph(3)) == 1);
    CHECK_THROWS_AS(privacy_degree(Graph(3)), UndefinedError);
}

TEST_CASE("dominating induced matchings")
{
    for (int n = 1; n <= 2; ++n) {
        const Graph k = kneser_graph(2 * n + 1, n);
        const auto m = dominating_induced_matching(k);
        REQUIRE(m.has_value());
        CHECK(is_valid_matching(k, *m));
        CHECK(static_cast<int>(m->edges.size()) == theta_graph(k));
    }
    const auto nk2 = dominating_induced_matching(matching_graph(3));
    REQUIRE(nk2.has_value());
    CHECK(nk2->edges.size() == 3);
    CHECK_FALSE(dominating_induced_matching(cycle_graph(4)).has_value());
}

TEST_CASE("well-covered graphs")
{
    CHECK(is_well_covered(cycle_graph(5)));
    CHECK_FALSE(is_well_covered(path_graph(3)));
    for (int n = 4; n <= 7; ++n)
        CHECK(is_1_well_covered(associahedral_graph(n)));
}

TEST_CASE("strongly theta-prime graphs")
{
    for (int n = 4; n <= 7; ++n) {
        const Graph a = associahedral_graph(n);
        const auto seq = strongly_theta_prime_sequence(a);
        REQUIRE(seq.has_value());
        CHECK(static_cast<int>(seq->size()) == n - 3);
    }
    for (int n = 4; n <= 8; ++n)
        CHECK(is_strongly_theta_prime(complement_cycle_graph(n)));
    const Graph h = disjoint_union(cycle_graph(5), cycle_graph(5)).complement();
    CHECK_FALSE(is_strongly_theta_prime(h));
    CHECK_FALSE(is_theta_prime_graph(h));
}

TEST_CASE("associahedral graphs")
{
    for (int n = 4; n <= 8; ++n) {
        const Graph a = associahedral_graph(n);
        CHECK(a.order() == n * (n - 3) / 2);
        CHECK(theta_graph(a) == n - 3);
        CHECK(induced_matching_number(a) == n / 2 - 1);
    }
}

TEST_CASE("bound battery on named graphs")
{
    const auto pet = check_bounds(kneser_graph(5, 2));
    for (const auto& b : pet)
        CHECK((!b.applicable || b.pass));
    const auto v = graph_values(matching_graph(4));
    CHECK(v.im == 4);
    CHECK(v.theta == 4);
    CHECK(v.ccn == 4);
    CHECK(v.min_m == 4);
    const auto c6 = check_bounds(complement_cycle_graph(6));
    bool saw = false;
    for (const auto& b : c6) {
        if (b.name == "thm46_two_k2_free") {
            saw = true;
            CHECK(b.applicable);
            CHECK(b.pass);
        }
    }
    CHECK(saw);
}

TEST_CASE("bound battery on random graphs")
{
    for (const auto& g : small_graphs(150, 9, 179)) {
        for (const auto& b : check_bounds(g))
            CHECK_MESSAGE((!b.applicable || b.pass), b.name);
    }
}

TEST_CASE("edge operations move theta by at most one")
{
    for (const auto& g : small_graphs(60, 8, 181)) {
        GraphThetaSolver s(g, {.use_bounds = false});
        const int t = s.theta();
        for (auto [x, y] : g.edges()) {
            const Mask pair = bit(static_cast<std::size_t>(x)) | bit(static_cast<std::size_t>(y));
            const int without = s.theta_of(g.all() & ~pair);
            const int closed = s.theta_of(g.all() & ~(g.closed_neighbors(x) | g.closed_neighbors(y)));
            const int contracted = theta_graph(contract_edge(g, x, y), {.use_bounds = false});
            CHECK(closed + 1 <= t);
            CHECK(without <= t);
            CHECK(t <= without + 1);
            CHECK(without <= contracted);
            CHECK(contracted <= without + 1);
            CHECK(contracted <= t);
            CHECK(t <= contracted + 1);
        }
    }
}

TEST_CASE("co-chordal graphs are exactly those with theta one")
{
    for (const auto& g : small_graphs(150, 9, 191)) {
        if (!g.has_edges())
            continue;
        const int t = theta_graph(g);
        CHECK((t == 1) == is_co_chordal(g));
        CHECK((collapsibility_number(independence_complex(g)) == 1) == (t == 1));
    }
}

TEST_CASE("strongly theta-prime consequences on random graphs")
{
    int found = 0;
    for (const auto& g : small_graphs(300, 8, 193)) {
        if (!is_strongly_theta_prime(g))
            continue;
        ++found;
        CHECK(is_1_well_covered(g));
        CHECK(is_weak_pseudo_manifold(independence_complex(g)));
        CHECK(theta_graph(g) == alpha(g));
    }
    CHECK(found > 0);
}

TEST_CASE("nested closed neighbourhoods rule out theta-primeness")
{
    for (const auto& g : small_graphs(100, 8, 197)) {
        bool nested = false;
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y)
                if (x != y && g.degree(y) >= 2 && is_subset(g.closed_neighbors(x), g.closed_neighbors(y)))
                    nested = true;
        if (nested)
            CHECK_FALSE(is_theta_prime_graph(g));
    }
}
