#include "thetalab/collapse.hpp"

#include "thetalab/errors.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace thetalab {

namespace {

int facets_containing(std::span<const Mask> facets, Mask a)
{
    return static_cast<int>(std::count_if(facets.begin(), facets.end(), [a](Mask f) { return is_subset(a, f); }));
}

/// Calls f on every subset of `m` with exactly `size` elements.
template <typename F>
void for_each_subset_of_size(Mask m, int size, F&& f)
{
    const auto pos = positions(m);
    const auto n = static_cast<int>(pos.size());
    if (size < 0 || size > n)
        return;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mask s = 0;
        for (int i : idx)
            s |= bit(pos[static_cast<std::size_t>(i)]);
        f(s);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<Mask> collapse_masks(std::span<const Mask> facets, Mask a, Mask b)
{
    std::vector<Mask> out;
    for (Mask f : facets) {
        if (f != b)
            out.push_back(f);
    }
    for_each_bit(a, [&](std::size_t i) { out.push_back(b & ~bit(i)); });
    return maximal_sets(std::move(out));
}

struct MaskStep {
    Mask free_face;
    Mask facet;
};

class CollapseSearch {
public:
    CollapseSearch(int k, std::uint64_t budget) : k_(k), budget_(budget) {}

    /// Drops every facet of size <= k, logging the face-by-face removals.
    std::vector<Mask> reduce(const std::vector<Mask>& facets)
    {
        std::vector<Mask> big;
        std::vector<Mask> small;
        for (Mask f : facets)
            (popcount(f) > k_ ? big : small).push_back(f);
        if (small.empty())
            return big;

        std::vector<Mask> doomed;
        for (Mask f : small) {
            for (Mask s = f;; s = (s - 1) & f) {
                if (std::none_of(big.begin(), big.end(), [s](Mask g) { return is_subset(s, g); }))
                    doomed.push_back(s);
                if (s == 0)
                    break;
            }
        }
        std::sort(doomed.begin(), doomed.end());
        doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
        std::stable_sort(doomed.begin(), doomed.end(), [](Mask a, Mask b) { return popcount(a) > popcount(b); });
        for (Mask d : doomed)
            steps_.push_back({d, d});
        return big;
    }

    bool search(const std::vector<Mask>& state)
    {
        if (state.empty())
            return true;
        if (refuted_.count(state) != 0)
            return false;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        for (Mask b : state) {
            bool found = false;
            for_each_subset_of_size(b, k_, [&](Mask a) {
                if (found || exhausted_ || facets_containing(state, a) != 1)
                    return;
                const std::size_t mark = steps_.size();
                steps_.push_back({a, b});
                auto next = reduce(collapse_masks(state, a, b));
                if (search(next))
                    found = true;
                else
                    steps_.resize(mark);
            });
            if (found)
                return true;
            if (exhausted_)
                return false;
        }
        refuted_.insert(state);
        return false;
    }

    std::vector<MaskStep>& steps() { return steps_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<MaskStep> steps_;
    std::unordered_set<std::vector<Mask>, MaskVectorHash> refuted_;
};

} // namespace

std::vector<FreePair> free_faces(const SimplicialComplex& x, int k)
{
    std::vector<FreePair> out;
    const auto facets = x.facet_masks();
    for (Mask b : facets) {
        for (int size = 0; size <= std::min(k, popcount(b)); ++size) {
            for_each_subset_of_size(b, size, [&](Mask a) {
                if (facets_containing(facets, a) == 1)
                    out.emplace_back(x.to_face(a), x.to_face(b));
            });
        }
    }
    return out;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& x, const FaceSet& a)
{
    const Mask am = x.to_mask(a);
    const auto facets = x.facet_masks();
    const Mask* holder = nullptr;
    for (const Mask& f : facets) {
        if (!is_subset(am, f))
            continue;
        if (holder != nullptr)
            throw PreconditionError("face lies in more than one facet, so it is not free");
        holder = &f;
    }
    if (holder == nullptr)
        throw PreconditionError("face is not a face of the complex");
    return SimplicialComplex::from_masks(x.ground(), collapse_masks(facets, am, *holder));
}

CollapseDecision decide_k_collapsible(const SimplicialComplex& x, int k, CollapseOptions options)
{
    if (k < 0)
        throw InputError("k must be nonnegative");
    CollapseSearch search(k, options.node_budget);
    const auto start = search.reduce({x.facet_masks().begin(), x.facet_masks().end()});
    CollapseDecision out;
    if (search.search(start)) {
        CollapseSequence seq{k, {}};
        for (const MaskStep& s : search.steps())
            seq.steps.push_back({x.to_face(s.free_face), x.to_face(s.facet)});
        out.verdict = Verdict::kYes;
        out.certificate = std::move(seq);
    } else {
        out.verdict = search.exhausted() ? Verdict::kInconclusive : Verdict::kNo;
    }
    out.nodes = search.nodes();
    return out;
}

std::optional<CollapseSequence> is_k_collapsible(const SimplicialComplex& x, int k, CollapseOptions options)
{
    auto d = decide_k_collapsible(x, k, options);
    if (d.verdict == Verdict::kInconclusive)
        throw BudgetExhausted("k-collapsibility search for k = " + std::to_string(k) + " ran out of budget");
    return std::move(d.certificate);
}

CollapsibilityResult collapsibility(const SimplicialComplex& x, int lower_bound, CollapseOptions options)
{
    // Every complex is (dim + 1)-collapsible, so the loop ends there at the latest.
    for (int k = std::max(lower_bound, 0);; ++k) {
        auto d = decide_k_collapsible(x, k, options);
        if (d.verdict == Verdict::kYes)
            return {k, true, std::move(d.certificate)};
        if (d.verdict == Verdict::kInconclusive)
            return {k, false, std::nullopt};
    }
}

int collapsibility_number(const SimplicialComplex& x, int lower_bound, CollapseOptions options)
{
    auto r = collapsibility(x, lower_bound, options);
    if (!r.exact)
        throw BudgetExhausted("collapsibility search ran out of budget at k = " + std::to_string(r.value));
    return r.value;
}

bool replay_collapse(const SimplicialComplex& x, const CollapseSequence& seq)
{
    std::vector<Mask> facets(x.facet_masks().begin(), x.facet_masks().end());
    for (const CollapseStep& step : seq.steps) {
        Mask a = 0;
        Mask b = 0;
        for (VertexId v : step.free_face) {
            auto p = x.position_of(v);
            if (!p)
                return false;
            a |= bit(*p);
        }
        for (VertexId v : step.facet) {
            auto p = x.position_of(v);
            if (!p)
                return false;
            b |= bit(*p);
        }
        if (popcount(a) > seq.k || !is_subset(a, b))
            return false;
        if (std::find(facets.begin(), facets.end(), b) == facets.end())
            return false;
        if (facets_containing(facets, a) != 1)
            return false;
        facets = collapse_masks(facets, a, b);
    }
    return facets.empty();
}

std::optional<FacetChainWitness> complete_facet_chain(const SimplicialComplex& x, const std::vector<VertexId>& vertices)
{
    const auto facets = x.facet_masks();
    FacetChainWitness w;
    Mask before = 0;
    auto first_facet = [&](Mask within, std::optional<std::size_t> avoid) -> std::optional<Mask> {
        for (Mask f : facets) {
            if (is_subset(within, f) && (!avoid || !contains_bit(f, *avoid)))
                return f;
        }
        return std::nullopt;
    };
    for (VertexId v : vertices) {
        auto p = x.position_of(v);
        if (!p)
            return std::nullopt;
        auto a = first_facet(before, *p);
        if (!a)
            return std::nullopt;
        w.facets.push_back(x.to_face(*a));
        before |= bit(*p);
    }
    auto last = first_facet(before, std::nullopt);
    if (!last)
        return std::nullopt;
    w.facets.push_back(x.to_face(*last));
    w.vertices = vertices;
    return w;
}

bool is_facet_chain_witness(const SimplicialComplex& x, const FacetChainWitness& w)
{
    if (w.facets.size() != w.vertices.size() + 1)
        return false;
    std::vector<Mask> a;
    for (const FaceSet& f : w.facets) {
        const auto facets = x.facet_masks();
        Mask m = 0;
        for (VertexId v : f) {
            auto p = x.position_of(v);
            if (!p)
                return false;
            m |= bit(*p);
        }
        if (std::find(facets.begin(), facets.end(), m) == facets.end())
            return false;
        a.push_back(m);
    }
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        auto p = x.position_of(w.vertices[i]);
        if (!p || contains_bit(a[i], *p))
            return false;
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (!contains_bit(a[j], *p))
                return false;
        }
    }
    return true;
}

LewBound lew_bound(const SimplicialComplex& x)
{
    if (x.is_void())
        return {};
    const auto facets = x.facet_masks();
    const Mask actual = x.vertex_mask();
    std::unordered_map<Mask, std::pair<int, int>> memo; // chosen set -> (value, best next position or -1)

    auto value = [&](auto&& self, Mask chosen) -> int {
        if (auto it = memo.find(chosen); it != memo.end())
            return it->second.first;
        Mask avoidable = 0;
        Mask reachable = 0;
        for (Mask f : facets) {
            if (is_subset(chosen, f)) {
                avoidable |= ~f;
                reachable |= f;
            }
        }
        int best = 0;
        int next = -1;
        for_each_bit(actual & avoidable & reachable & ~chosen, [&](std::size_t v) {
            const int through = 1 + self(self, chosen | bit(v));
            if (through > best) {
                best = through;
                next = static_cast<int>(v);
            }
        });
        memo.emplace(chosen, std::make_pair(best, next));
        return best;
    };

    LewBound out;
    out.k = value(value, 0);
    Mask chosen = 0;
    std::vector<VertexId> order;
    for (int next = memo.at(0).second; next >= 0; next = memo.at(chosen).second) {
        order.push_back(x.ground()[static_cast<std::size_t>(next)]);
        chosen |= bit(static_cast<std::size_t>(next));
    }
    out.witness = *complete_facet_chain(x, order);
    return out;
}

} // namespace thetalab
