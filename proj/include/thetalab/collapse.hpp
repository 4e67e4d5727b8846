#pragma once

#include "thetalab/complex.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace thetalab {

/// (A, B): A lies in exactly one facet B.
using FreePair = std::pair<FaceSet, FaceSet>;

/// All free faces A with |A| <= k, each with its unique facet.
std::vector<FreePair> free_faces(const SimplicialComplex& x, int k);

/// X − [A, B] for the unique facet B over A. The ground is unchanged.
/// Throws PreconditionError if A is not a free face.
SimplicialComplex elementary_collapse(const SimplicialComplex& x, const FaceSet& a);

struct CollapseStep {
    FaceSet free_face;
    FaceSet facet;
};

struct CollapseSequence {
    int k = 0;
    std::vector<CollapseStep> steps;
};

enum class Verdict { kYes, kNo, kInconclusive };

struct CollapseOptions {
    /// Search nodes allowed per k before the answer becomes kInconclusive.
    std::uint64_t node_budget = 5'000'000;
};

struct CollapseDecision {
    Verdict verdict = Verdict::kNo;
    std::optional<CollapseSequence> certificate;
    std::uint64_t nodes = 0;
};

/// Exhaustive k-collapsibility search with a table of refuted states.
///
/// Two reductions keep the search small. A facet of size <= k can always be
/// removed first without losing k-collapsibility, so every state is reduced to
/// the facets of size > k. A collapse [A, B] with |A| < min(k, |B|) splits into
/// [A + b, B] followed by [A, B - b], so only free faces of size exactly k are
/// branched on.
CollapseDecision decide_k_collapsible(const SimplicialComplex& x, int k, CollapseOptions options = {});

/// Certificate or nullopt (a definite NO). Throws BudgetExhausted when inconclusive.
std::optional<CollapseSequence> is_k_collapsible(const SimplicialComplex& x, int k, CollapseOptions options = {});

struct CollapsibilityResult {
    /// Least k found; when `exact` is false this is only a lower bound.
    int value = 0;
    bool exact = true;
    std::optional<CollapseSequence> certificate;
};

/// Searches k upward from `lower_bound` (which must be a valid lower bound, e.g. 0 or ℒ(X)).
CollapsibilityResult collapsibility(const SimplicialComplex& x, int lower_bound = 0, CollapseOptions options = {});

/// 𝒞(X). Throws BudgetExhausted when some k stays undecided.
int collapsibility_number(const SimplicialComplex& x, int lower_bound = 0, CollapseOptions options = {});

/// Replays a sequence from X; true iff every step is a legal elementary
/// k-collapse and the final complex is VOID.
bool replay_collapse(const SimplicialComplex& x, const CollapseSequence& seq);

struct FacetChainWitness {
    std::vector<VertexId> vertices;
    std::vector<FaceSet> facets;
};

/// xᵢ ∉ Aᵢ and xᵢ ∈ Aⱼ for i < j <= k+1, each Aᵢ a facet of X.
bool is_facet_chain_witness(const SimplicialComplex& x, const FacetChainWitness& w);

/// Whether some facets A₁..A_{k+1} complete the given vertex sequence to a witness.
std::optional<FacetChainWitness> complete_facet_chain(const SimplicialComplex& x, const std::vector<VertexId>& vertices);

struct LewBound {
    int k = 0;
    FacetChainWitness witness;
};

/// The largest k admitting a facet chain witness (0 for VOID).
LewBound lew_bound(const SimplicialComplex& x);

} // namespace thetalab
