#include "thetalab/graph_invariants.hpp"

#include "thetalab/errors.hpp"

#include <algorithm>
#include <limits>

namespace thetalab {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;

int lowest(Mask m)
{
    return std::countr_zero(m);
}

Edge ordered(int a, int b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

} // namespace

GraphThetaSolver::GraphThetaSolver(const Graph& g, GraphThetaOptions options) : g_(g), options_(options) {}

int GraphThetaSolver::theta_of(Mask within)
{
    return solve(g_.non_isolated(within & g_.all()));
}

int GraphThetaSolver::solve(Mask state)
{
    if (state == 0)
        return 0;
    if (auto it = memo_.find(state); it != memo_.end())
        return it->second;

    int best = kUnbounded;
    int floor = 1;
    if (options_.use_bounds) {
        best = static_cast<int>(greedy_maximal_matching(g_, state).edges.size());
        floor = static_cast<int>(greedy_induced_matching(g_, state).edges.size());
    }
    for_each_bit(state, [&](std::size_t i) {
        if (best <= floor)
            return;
        const int v = static_cast<int>(i);
        const int through_link = solve(g_.non_isolated(state & ~g_.closed_neighbors(v))) + 1;
        if (through_link >= best)
            return;
        const int through_deletion = solve(g_.non_isolated(state & ~bit(i)));
        best = std::min(best, std::max(through_deletion, through_link));
    });
    memo_.emplace(state, best);
    return best;
}

bool GraphThetaSolver::is_theta_prime_vertex(Mask within, int v)
{
    return theta_of(within & ~bit(static_cast<std::size_t>(v))) < theta_of(within);
}

bool GraphThetaSolver::is_theta_prime(Mask within)
{
    const int t = theta_of(within);
    bool prime = true;
    for_each_bit(within, [&](std::size_t v) {
        if (prime && theta_of(within & ~bit(v)) >= t)
            prime = false;
    });
    return prime;
}

int theta_graph(const Graph& g, GraphThetaOptions options)
{
    return GraphThetaSolver(g, options).theta();
}

bool is_valid_matching(const Graph& g, const MatchingWitness& w)
{
    Mask covered = 0;
    for (auto [a, b] : w.edges) {
        if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b))
            return false;
        const Mask e = bit(static_cast<std::size_t>(a)) | bit(static_cast<std::size_t>(b));
        if (covered & e)
            return false;
        covered |= e;
    }
    const bool induced = [&] {
        for (std::size_t i = 0; i < w.edges.size(); ++i) {
            for (std::size_t j = i + 1; j < w.edges.size(); ++j) {
                for (int a : {w.edges[i].first, w.edges[i].second})
                    for (int b : {w.edges[j].first, w.edges[j].second})
                        if (g.adjacent(a, b))
                            return false;
            }
        }
        return true;
    }();
    switch (w.kind) {
    case MatchingKind::kMatching:
        return true;
    case MatchingKind::kInduced:
        return induced;
    case MatchingKind::kMaximal:
        return !g.has_edge_within(g.all() & ~covered);
    case MatchingKind::kDominatingInduced:
        return induced && !g.has_edge_within(g.all() & ~covered);
    }
    return false;
}

MatchingWitness greedy_maximal_matching(const Graph& g, Mask within)
{
    MatchingWitness w{{}, MatchingKind::kMaximal};
    Mask free = within;
    for (auto [a, b] : g.edges()) {
        const Mask e = bit(static_cast<std::size_t>(a)) | bit(static_cast<std::size_t>(b));
        if (is_subset(e, free)) {
            w.edges.emplace_back(a, b);
            free &= ~e;
        }
    }
    return w;
}

MatchingWitness greedy_induced_matching(const Graph& g, Mask within)
{
    MatchingWitness w{{}, MatchingKind::kInduced};
    Mask allowed = within;
    for (auto [a, b] : g.edges()) {
        const Mask e = bit(static_cast<std::size_t>(a)) | bit(static_cast<std::size_t>(b));
        if (is_subset(e, allowed)) {
            w.edges.emplace_back(a, b);
            allowed &= ~(g.closed_neighbors(a) | g.closed_neighbors(b));
        }
    }
    return w;
}

namespace {

/// im(G[mask]): the lowest non-isolated vertex is either unmatched or matched to one of its neighbours.
class InducedMatchingSearch {
public:
    explicit InducedMatchingSearch(const Graph& g) : g_(g) {}

    int value(Mask state)
    {
        state = g_.non_isolated(state);
        if (state == 0)
            return 0;
        if (auto it = memo_.find(state); it != memo_.end())
            return it->second.first;
        const int v = lowest(state);
        int best = value(state & ~bit(static_cast<std::size_t>(v)));
        int choice = -1;
        for_each_bit(g_.neighbors(v) & state, [&](std::size_t u) {
            const int with = 1 + value(state & ~g_.closed_neighbors(v) & ~g_.closed_neighbors(static_cast<int>(u)));
            if (with > best) {
                best = with;
                choice = static_cast<int>(u);
            }
        });
        memo_.emplace(state, std::make_pair(best, choice));
        return best;
    }

    std::vector<Edge> witness(Mask state)
    {
        std::vector<Edge> out;
        while (true) {
            state = g_.non_isolated(state);
            if (state == 0)
                return out;
            value(state);
            const int v = lowest(state);
            const int u = memo_.at(state).second;
            if (u < 0) {
                state &= ~bit(static_cast<std::size_t>(v));
            } else {
                out.push_back(ordered(v, u));
                state &= ~g_.closed_neighbors(v) & ~g_.closed_neighbors(u);
            }
        }
    }

private:
    const Graph& g_;
    std::unordered_map<Mask, std::pair<int, int>> memo_;
};

/// Minimum maximal matching over the set of matched vertices: some endpoint of
/// the lowest uncovered edge must end up matched.
class MinMaximalSearch {
public:
    explicit MinMaximalSearch(const Graph& g) : g_(g) {}

    int value(Mask matched)
    {
        auto e = uncovered(matched);
        if (!e)
            return 0;
        if (auto it = memo_.find(matched); it != memo_.end())
            return it->second.first;
        int best = kUnbounded;
        Edge choice{-1, -1};
        for (int w : {e->first, e->second}) {
            for_each_bit(g_.neighbors(w) & ~matched, [&](std::size_t z) {
                const Mask pair = bit(static_cast<std::size_t>(w)) | bit(z);
                const int with = 1 + value(matched | pair);
                if (with < best) {
                    best = with;
                    choice = ordered(w, static_cast<int>(z));
                }
            });
        }
        memo_.emplace(matched, std::make_pair(best, choice));
        return best;
    }

    std::vector<Edge> witness()
    {
        std::vector<Edge> out;
        Mask matched = 0;
        while (uncovered(matched)) {
            value(matched);
            const Edge e = memo_.at(matched).second;
            out.push_back(e);
            matched |= bit(static_cast<std::size_t>(e.first)) | bit(static_cast<std::size_t>(e.second));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::optional<Edge> uncovered(Mask matched) const
    {
        const Mask free = g_.all() & ~matched;
        for (Mask m = free; m != 0; m &= m - 1) {
            const int v = lowest(m);
            const Mask nb = g_.neighbors(v) & free;
            if (nb != 0)
                return Edge{v, lowest(nb)};
        }
        return std::nullopt;
    }

    const Graph& g_;
    std::unordered_map<Mask, std::pair<int, Edge>> memo_;
};

} // namespace

MatchingResult induced_matching(const Graph& g)
{
    InducedMatchingSearch s(g);
    MatchingResult r;
    r.value = s.value(g.all());
    r.witness = {s.witness(g.all()), MatchingKind::kInduced};
    std::sort(r.witness.edges.begin(), r.witness.edges.end());
    return r;
}

int induced_matching_number(const Graph& g)
{
    return InducedMatchingSearch(g).value(g.all());
}

int induced_matching_number(const Graph& g, Mask within)
{
    return InducedMatchingSearch(g).value(within & g.all());
}

MatchingResult min_maximal_matching(const Graph& g)
{
    MinMaximalSearch s(g);
    MatchingResult r;
    r.value = s.value(0);
    r.witness = {s.witness(), MatchingKind::kMaximal};
    return r;
}

int min_maximal_matching_number(const Graph& g)
{
    return MinMaximalSearch(g).value(0);
}

GraphCircuitCover min_circuit_cover(const Graph& g)
{
    GraphCircuitCover best{kUnbounded, 0};
    for (Mask independent : maximal_independent_sets(g)) {
        const Mask cover = g.all() & ~independent;
        const int a = alpha(g, cover);
        if (a < best.value)
            best = {a, cover};
    }
    return best;
}

int ccn_graph(const Graph& g)
{
    return min_circuit_cover(g).value;
}

int privacy_degree(const Graph& g)
{
    if (!g.has_edges())
        throw UndefinedError("privacy degree is undefined for a graph without edges");
    int best = 0;
    for (auto [x, y] : g.edges()) {
        best = std::max(best, popcount(g.closed_neighbors(x) & ~g.closed_neighbors(y)));
        best = std::max(best, popcount(g.closed_neighbors(y) & ~g.closed_neighbors(x)));
    }
    return best;
}

std::optional<MatchingWitness> dominating_induced_matching(const Graph& g)
{
    std::unordered_map<Mask, bool> refuted;
    std::vector<Edge> chosen;

    auto search = [&](auto&& self, Mask matched, Mask blocked) -> bool {
        // Lowest edge with both ends unmatched; an endpoint of it must join the matching.
        std::optional<Edge> open;
        for (Mask m = g.all() & ~matched; m != 0 && !open; m &= m - 1) {
            const int v = lowest(m);
            const Mask nb = g.neighbors(v) & ~matched;
            if (nb != 0)
                open = Edge{v, lowest(nb)};
        }
        if (!open)
            return true;
        if (refuted.count(matched) != 0)
            return false;
        for (int w : {open->first, open->second}) {
            if (contains_bit(blocked, static_cast<std::size_t>(w)))
                continue;
            bool found = false;
            for_each_bit(g.neighbors(w) & ~blocked, [&](std::size_t z) {
                if (found)
                    return;
                const int zi = static_cast<int>(z);
                chosen.push_back(ordered(w, zi));
                if (self(self, matched | bit(static_cast<std::size_t>(w)) | bit(z),
                         blocked | g.closed_neighbors(w) | g.closed_neighbors(zi)))
                    found = true;
                else
                    chosen.pop_back();
            });
            if (found)
                return true;
        }
        refuted.emplace(matched, true);
        return false;
    };

    if (!search(search, 0, 0))
        return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return MatchingWitness{chosen, MatchingKind::kDominatingInduced};
}

namespace {

bool well_covered_within(const Graph& g, Mask within)
{
    const auto sets = maximal_independent_sets(g, within);
    return std::all_of(sets.begin(), sets.end(), [&](Mask s) { return popcount(s) == popcount(sets.front()); });
}

} // namespace

bool is_well_covered(const Graph& g)
{
    return well_covered_within(g, g.all());
}

bool is_1_well_covered(const Graph& g)
{
    if (!is_well_covered(g))
        return false;
    for (int x = 0; x < g.order(); ++x) {
        if (!well_covered_within(g, g.all() & ~bit(static_cast<std::size_t>(x))))
            return false;
    }
    return true;
}

bool is_theta_prime_graph(const Graph& g)
{
    GraphThetaSolver solver(g);
    return solver.is_theta_prime(g.all());
}

namespace {

bool strongly_prime(GraphThetaSolver& solver, Mask within, std::unordered_map<Mask, bool>& memo)
{
    if (within == 0)
        return true;
    if (auto it = memo.find(within); it != memo.end())
        return it->second;
    const Graph& g = solver.graph();
    bool ok = solver.is_theta_prime(within);
    for (Mask m = within; ok && m != 0; m &= m - 1)
        ok = strongly_prime(solver, within & ~g.closed_neighbors(lowest(m)), memo);
    memo.emplace(within, ok);
    return ok;
}

} // namespace

bool is_strongly_theta_prime(GraphThetaSolver& solver, Mask within)
{
    std::unordered_map<Mask, bool> memo;
    return strongly_prime(solver, within, memo);
}

std::optional<std::vector<int>> strongly_theta_prime_sequence(const Graph& g)
{
    GraphThetaSolver solver(g);
    if (!is_strongly_theta_prime(solver, g.all()))
        return std::nullopt;
    std::vector<int> seq;
    for (Mask rest = g.all(); rest != 0;) {
        const int x = lowest(rest);
        seq.push_back(x);
        rest &= ~g.closed_neighbors(x);
    }
    return seq;
}

bool is_strongly_theta_prime(const Graph& g)
{
    GraphThetaSolver solver(g);
    return is_strongly_theta_prime(solver, g.all());
}

GraphValues graph_values(const Graph& g)
{
    GraphValues v;
    v.theta = theta_graph(g, {.use_bounds = false});
    v.im = induced_matching_number(g);
    v.ccn = ccn_graph(g);
    v.min_m = min_maximal_matching_number(g);
    v.n = g.order();
    v.max_degree = g.max_degree();
    if (g.has_edges())
        v.gamma = privacy_degree(g);
    v.claw_free = is_claw_free(g);
    v.two_k2_free = is_2k2_free(g);
    return v;
}

std::vector<BoundCheck> check_bounds(const GraphValues& v)
{
    std::vector<BoundCheck> out;
    auto le = [&](std::string name, bool applicable, long long lhs, long long rhs) {
        out.push_back({std::move(name), applicable, lhs, rhs, !applicable || lhs <= rhs});
    };
    le("prop36_im_le_theta", true, v.im, v.theta);
    le("prop36_theta_le_ccn", true, v.theta, v.ccn);
    le("prop36_ccn_le_min_m", true, v.ccn, v.min_m);
    if (v.gamma)
        le("thm40_privacy_degree", true, v.theta, static_cast<long long>(*v.gamma + 1) * v.im);
    else
        le("thm40_privacy_degree", false, v.theta, 0);
    le("thm40_max_degree", true, v.theta, static_cast<long long>(v.max_degree) * v.im);
    // θ <= 2·sqrt(n·im), squared.
    le("thm41_sqrt", true, static_cast<long long>(v.theta) * v.theta, 4LL * v.n * v.im);
    le("thm43_claw_free", v.claw_free, v.theta, 2LL * v.im);
    // θ <= 2·log₂ n, exponentiated: 2^θ <= n².
    const bool log_applies = v.two_k2_free && v.n >= 1 && v.theta < 62;
    le("thm46_two_k2_free", log_applies, log_applies ? (1LL << v.theta) : 0, static_cast<long long>(v.n) * v.n);
    return out;
}

std::vector<BoundCheck> check_bounds(const Graph& g)
{
    return check_bounds(graph_values(g));
}

} // namespace thetalab
