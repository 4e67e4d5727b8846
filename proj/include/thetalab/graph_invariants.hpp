#pragma once

#include "thetalab/graph.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace thetalab {

struct GraphThetaOptions {
    /// Prune with im(G) <= θ(G) and θ(G) <= (size of any maximal matching).
    /// Turn off to evaluate the recursion literally, e.g. when those bounds are under test.
    bool use_bounds = true;
};

/// θ of induced subgraphs of one graph, memoized on vertex masks.
class GraphThetaSolver {
public:
    explicit GraphThetaSolver(const Graph& g, GraphThetaOptions options = {});

    int theta() { return theta_of(g_.all()); }
    int theta_of(Mask within);

    /// θ(G[within] − v) < θ(G[within]).
    bool is_theta_prime_vertex(Mask within, int v);
    /// Every vertex of G[within] is θ-prime (the graph with no vertices qualifies).
    bool is_theta_prime(Mask within);

    const Graph& graph() const { return g_; }
    std::size_t state_count() const { return memo_.size(); }

private:
    int solve(Mask state);

    Graph g_;
    GraphThetaOptions options_;
    std::unordered_map<Mask, int> memo_;
};

int theta_graph(const Graph& g, GraphThetaOptions options = {});

enum class MatchingKind { kMatching, kInduced, kMaximal, kDominatingInduced };

struct MatchingWitness {
    std::vector<Edge> edges;
    MatchingKind kind = MatchingKind::kMatching;
};

/// Literal check of the invariants of `w.kind` against G.
bool is_valid_matching(const Graph& g, const MatchingWitness& w);

struct MatchingResult {
    int value = 0;
    MatchingWitness witness;
};

MatchingResult induced_matching(const Graph& g);
int induced_matching_number(const Graph& g);
/// Induced matching number of G[within].
int induced_matching_number(const Graph& g, Mask within);

MatchingResult min_maximal_matching(const Graph& g);
int min_maximal_matching_number(const Graph& g);

/// Some maximal matching chosen greedily (lowest edges first).
MatchingWitness greedy_maximal_matching(const Graph& g, Mask within);
/// Some induced matching chosen greedily.
MatchingWitness greedy_induced_matching(const Graph& g, Mask within);

struct GraphCircuitCover {
    int value = 0;
    Mask cover = 0;
};

/// min α(G[F]) over vertex covers F, attained on a minimal cover.
GraphCircuitCover min_circuit_cover(const Graph& g);
int ccn_graph(const Graph& g);

/// Γ(G) = max |N[x] ∖ N[y]| over adjacent x, y. Throws UndefinedError if G has no edges.
int privacy_degree(const Graph& g);

/// An induced matching whose vertices cover every edge, if one exists.
std::optional<MatchingWitness> dominating_induced_matching(const Graph& g);

bool is_well_covered(const Graph& g);
bool is_1_well_covered(const Graph& g);

/// Graph form of the θ-prime property (every vertex x has θ(G − x) < θ(G)).
bool is_theta_prime_graph(const Graph& g);

/// x₁..x_k (k = θ(G)) if G is strongly θ-prime: θ-prime, and G − N[x] strongly θ-prime for every x.
std::optional<std::vector<int>> strongly_theta_prime_sequence(const Graph& g);
bool is_strongly_theta_prime(const Graph& g);

/// Whether G[within] is strongly θ-prime, sharing one θ solver.
bool is_strongly_theta_prime(GraphThetaSolver& solver, Mask within);

struct BoundCheck {
    std::string name;
    bool applicable = true;
    long long lhs = 0;
    long long rhs = 0;
    bool pass = true;
};

struct GraphValues {
    int theta = 0;
    int im = 0;
    int ccn = 0;
    int min_m = 0;
    int n = 0;
    int max_degree = 0;
    std::optional<int> gamma;
    bool claw_free = false;
    bool two_k2_free = false;
};

GraphValues graph_values(const Graph& g);

/// Every inequality of the graph battery, evaluated on exact values.
std::vector<BoundCheck> check_bounds(const GraphValues& v);
std::vector<BoundCheck> check_bounds(const Graph& g);

} // namespace thetalab
