#include "thetalab/theta.hpp"

#include "thetalab/errors.hpp"
#include "thetalab/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace thetalab {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;

// Antichain with cone vertices removed; VOID stays empty, a simplex becomes {∅}.
std::vector<Mask> normalize(std::vector<Mask> facets)
{
    facets = maximal_sets(std::move(facets));
    if (facets.empty())
        return facets;
    Mask common = ~Mask{0};
    for (Mask f : facets)
        common &= f;
    if (common != 0) {
        for (Mask& f : facets)
            f &= ~common;
        std::sort(facets.begin(), facets.end());
    }
    return facets;
}

} // namespace

ThetaSolver::ThetaSolver(const SimplicialComplex& x, ThetaOptions options) : x_(x), options_(options) {}

std::vector<Mask> ThetaSolver::deletion_facets(std::span<const Mask> facets, std::size_t p)
{
    std::vector<Mask> out;
    out.reserve(facets.size());
    for (Mask f : facets)
        out.push_back(f & ~bit(p));
    return maximal_sets(std::move(out));
}

std::vector<Mask> ThetaSolver::link_facets(std::span<const Mask> facets, std::size_t p)
{
    std::vector<Mask> out;
    for (Mask f : facets) {
        if (contains_bit(f, p))
            out.push_back(f & ~bit(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ThetaSolver::theta()
{
    return theta_of({x_.facet_masks().begin(), x_.facet_masks().end()});
}

int ThetaSolver::theta_of(std::vector<Mask> facets)
{
    return solve(normalize(std::move(facets)));
}

int ThetaSolver::solve(const std::vector<Mask>& state)
{
    // No non-cone vertex: VOID, or a single facet reduced to ∅.
    if (state.size() <= 1)
        return 0;
    if (auto it = memo_.find(state); it != memo_.end())
        return it->second;

    Mask non_cone = 0;
    int top = 0;
    for (Mask f : state) {
        non_cone |= f;
        top = std::max(top, popcount(f));
    }

    int best = options_.use_dimension_bound ? top : kUnbounded;
    const int floor = 1;
    for_each_bit(non_cone, [&](std::size_t v) {
        if (best <= floor)
            return;
        const int through_link = solve(normalize(link_facets(state, v))) + 1;
        if (through_link >= best)
            return;
        const int through_deletion = solve(normalize(deletion_facets(state, v)));
        best = std::min(best, std::max(through_deletion, through_link));
    });

    memo_.emplace(state, best);
    return best;
}

int theta(const SimplicialComplex& x, ThetaOptions options)
{
    return ThetaSolver(x, options).theta();
}

namespace {

bool theta_prime_at(ThetaSolver& solver, std::span<const Mask> facets, std::size_t p)
{
    Mask common = ~Mask{0};
    Mask actual = 0;
    for (Mask f : facets) {
        common &= f;
        actual |= f;
    }
    if (!contains_bit(actual, p) || contains_bit(common, p))
        return false;
    const std::vector<Mask> all(facets.begin(), facets.end());
    return solver.theta_of(ThetaSolver::deletion_facets(facets, p)) < solver.theta_of(all);
}

} // namespace

bool is_theta_prime_vertex(const SimplicialComplex& x, VertexId v)
{
    const std::size_t p = x.require_position(v);
    ThetaSolver solver(x);
    return theta_prime_at(solver, x.facet_masks(), p);
}

bool is_theta_prime_complex(const SimplicialComplex& x)
{
    ThetaSolver solver(x);
    bool prime = true;
    for_each_bit(x.vertex_mask(), [&](std::size_t p) {
        if (prime && !theta_prime_at(solver, x.facet_masks(), p))
            prime = false;
    });
    return prime;
}

ReductionTrace theta_prime_reduction(const SimplicialComplex& x, std::span<const VertexId> order)
{
    std::vector<std::size_t> pos;
    Mask seen = 0;
    for (VertexId v : order) {
        const std::size_t p = x.require_position(v);
        if (contains_bit(seen, p))
            throw InputError("reduction order lists vertex " + std::to_string(v) + " twice");
        seen |= bit(p);
        pos.push_back(p);
    }

    ThetaSolver solver(x);
    std::vector<Mask> current(x.facet_masks().begin(), x.facet_masks().end());
    Mask ground = x.ground_mask();
    ReductionTrace trace;
    Mask primes = 0;

    for (std::size_t p : pos) {
        Mask actual = 0;
        for (Mask f : current)
            actual |= f;
        if (!contains_bit(actual, p))
            continue;
        const VertexId v = x.ground()[p];
        if (theta_prime_at(solver, current, p)) {
            current = ThetaSolver::link_facets(current, p);
            trace.steps.push_back({v, ReductionDecision::kPrime});
            primes |= bit(p);
        } else {
            current = ThetaSolver::deletion_facets(current, p);
            trace.steps.push_back({v, ReductionDecision::kDelete});
        }
        ground &= ~bit(p);
    }

    std::vector<VertexId> final_ground;
    for_each_bit(ground, [&](std::size_t i) { final_ground.push_back(x.ground()[i]); });
    std::vector<Mask> final_facets;
    for (Mask f : current)
        final_facets.push_back(compress(f, ground));
    trace.final_complex = SimplicialComplex::from_masks(std::move(final_ground), std::move(final_facets));
    trace.prime_count = popcount(primes);
    trace.prime_set = x.to_face(primes);
    return trace;
}

bool is_circuit_cover(const SimplicialComplex& x, Mask cover)
{
    for (Mask c : circuit_masks(x)) {
        if (popcount(c & cover) < popcount(c) - 1)
            return false;
    }
    return true;
}

CircuitCover minimum_circuit_cover(const SimplicialComplex& x)
{
    if (x.is_void())
        return {0, {}};
    // C is a cover iff its complement meets every circuit at most once, i.e. the
    // complement is independent in the graph joining vertices that share a circuit.
    const auto n = static_cast<int>(x.ground_size());
    Graph conflicts(n);
    for (Mask c : circuit_masks(x)) {
        const auto members = positions(c);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                conflicts.add_edge(static_cast<int>(members[i]), static_cast<int>(members[j]));
    }

    CircuitCover best{kUnbounded, {}};
    for (Mask outside : maximal_independent_sets(conflicts)) {
        const Mask cover = x.ground_mask() & ~outside;
        int dim_plus_one = 0;
        for (Mask f : x.facet_masks())
            dim_plus_one = std::max(dim_plus_one, popcount(f & cover));
        if (dim_plus_one < best.value)
            best = {dim_plus_one, x.to_face(cover)};
    }
    return best;
}

int circuit_cover_number(const SimplicialComplex& x)
{
    return minimum_circuit_cover(x).value;
}

bool is_join_decomposition(const SimplicialComplex& x, const Decomposition& parts)
{
    Mask covered = 0;
    std::vector<Mask> masks;
    for (const FaceSet& part : parts) {
        const Mask m = x.to_mask(part);
        if (m & covered)
            return false;
        covered |= m;
        masks.push_back(m);
    }
    for (Mask c : circuit_masks(x)) {
        if (!is_subset(c, covered))
            continue;
        if (std::none_of(masks.begin(), masks.end(), [c](Mask m) { return is_subset(c, m); }))
            return false;
    }
    return true;
}

namespace {

struct PartFamily {
    Mask support;
    std::vector<Mask> parts;
};

std::vector<PartFamily> enumerate_join_partitions(const SimplicialComplex& x)
{
    const std::size_t n = x.ground_size();
    std::vector<std::vector<Mask>> closing(n);
    for (Mask c : circuit_masks(x)) {
        if (c != 0)
            closing[static_cast<std::size_t>(63 - std::countl_zero(c))].push_back(c);
    }

    std::vector<PartFamily> out;
    std::vector<Mask> parts;
    auto assign = [&](auto&& self, std::size_t i, Mask support) -> void {
        if (i == n) {
            if (std::all_of(parts.begin(), parts.end(), [](Mask m) { return popcount(m) >= 2; }))
                out.push_back({support, parts});
            return;
        }
        auto consistent = [&](Mask support_now) {
            for (Mask c : closing[i]) {
                if (!is_subset(c, support_now))
                    continue;
                if (std::none_of(parts.begin(), parts.end(), [c](Mask m) { return is_subset(c, m); }))
                    return false;
            }
            return true;
        };
        // Leave i outside the union.
        self(self, i + 1, support);
        for (std::size_t j = 0; j <= parts.size(); ++j) {
            const bool fresh = j == parts.size();
            if (fresh)
                parts.push_back(0);
            parts[j] |= bit(i);
            if (consistent(support | bit(i)))
                self(self, i + 1, support | bit(i));
            parts[j] &= ~bit(i);
            if (fresh)
                parts.pop_back();
        }
    };
    assign(assign, 0, 0);
    return out;
}

bool strictly_refines(const PartFamily& finer, const PartFamily& coarser)
{
    if (finer.parts.size() <= coarser.parts.size())
        return false;
    return std::all_of(finer.parts.begin(), finer.parts.end(), [&](Mask p) {
        return std::any_of(coarser.parts.begin(), coarser.parts.end(), [p](Mask q) { return is_subset(p, q); });
    });
}

} // namespace

std::vector<Decomposition> induced_decompositions(const SimplicialComplex& x, DecompositionReading reading, std::size_t cap)
{
    if (x.ground_size() > cap)
        throw SizeError("decomposition enumeration is capped at " + std::to_string(cap) + " ground vertices");
    auto all = enumerate_join_partitions(x);

    std::vector<const PartFamily*> kept;
    if (reading == DecompositionReading::kUnrestricted) {
        for (const auto& d : all)
            kept.push_back(&d);
    } else {
        std::set<Mask> supports;
        for (const auto& d : all)
            supports.insert(d.support);
        for (const auto& d : all) {
            const bool larger_union = std::any_of(supports.begin(), supports.end(), [&](Mask s) {
                return s != d.support && is_subset(d.support, s);
            });
            if (larger_union)
                continue;
            const bool refined = std::any_of(all.begin(), all.end(), [&](const PartFamily& e) {
                return e.support == d.support && strictly_refines(e, d);
            });
            if (!refined)
                kept.push_back(&d);
        }
    }

    std::vector<Decomposition> out;
    for (const PartFamily* d : kept) {
        Decomposition dec;
        for (Mask p : d->parts)
            dec.push_back(x.to_face(p));
        out.push_back(std::move(dec));
    }
    return out;
}

std::vector<Decomposition> prime_decompositions(const SimplicialComplex& x, DecompositionReading reading, std::size_t cap)
{
    std::map<FaceSet, bool> prime_part;
    std::vector<Decomposition> out;
    for (auto& dec : induced_decompositions(x, reading, cap)) {
        bool all_prime = true;
        for (const FaceSet& part : dec) {
            auto it = prime_part.find(part);
            if (it == prime_part.end())
                it = prime_part.emplace(part, is_theta_prime_complex(induced(x, part))).first;
            if (!it->second) {
                all_prime = false;
                break;
            }
        }
        if (all_prime)
            out.push_back(std::move(dec));
    }
    return out;
}

} // namespace thetalab
