#pragma once

#include "thetalab/complex.hpp"

#include <span>
#include <unordered_map>
#include <vector>

namespace thetalab {

struct ThetaOptions {
    /// Cap every branch at dim + 1 (a proven upper bound). Turn off to evaluate
    /// the recursion literally, e.g. when that very bound is under test.
    bool use_dimension_bound = true;
};

/// Exact theta-number with a memo shared across every sub-complex of one input.
///
/// A recursion state is the facet family of a complex reachable from the input
/// by deletions and links, written over the input's ground positions. States
/// are normalized by dropping cone vertices (vertices lying in every facet),
/// which never change theta and never become non-cone further down.
class ThetaSolver {
public:
    explicit ThetaSolver(const SimplicialComplex& x, ThetaOptions options = {});

    int theta();
    /// Theta of the complex with these facets (positions in the input's ground).
    int theta_of(std::vector<Mask> facets);

    /// Facets of del / lk at position p of the complex given by `facets`.
    static std::vector<Mask> deletion_facets(std::span<const Mask> facets, std::size_t p);
    static std::vector<Mask> link_facets(std::span<const Mask> facets, std::size_t p);

    std::size_t state_count() const { return memo_.size(); }
    const SimplicialComplex& complex() const { return x_; }

private:
    int solve(const std::vector<Mask>& state);

    SimplicialComplex x_;
    ThetaOptions options_;
    std::unordered_map<std::vector<Mask>, int, MaskVectorHash> memo_;
};

int theta(const SimplicialComplex& x, ThetaOptions options = {});

/// θ(del(X; v)) < θ(X). Ghost and cone vertices are never θ-prime.
bool is_theta_prime_vertex(const SimplicialComplex& x, VertexId v);
/// Every actual vertex is θ-prime; EMPTY (and any complex without actual vertices) qualifies.
bool is_theta_prime_complex(const SimplicialComplex& x);

enum class ReductionDecision { kPrime, kDelete };

struct ReductionStep {
    VertexId vertex;
    ReductionDecision decision;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    SimplicialComplex final_complex;
    int prime_count = 0;
    FaceSet prime_set;
};

/// Walks `order`: a vertex θ-prime in the current complex moves to its link
/// (counter + 1), any other vertex is deleted. Vertices that are no longer
/// actual vertices of the current complex are skipped without a step.
/// Throws InputError on duplicates or labels outside the ground.
ReductionTrace theta_prime_reduction(const SimplicialComplex& x, std::span<const VertexId> order);

struct CircuitCover {
    int value = 0;
    FaceSet cover;
};

/// min over circuit covers C of dim(X[C]) + 1, with one optimal cover.
CircuitCover minimum_circuit_cover(const SimplicialComplex& x);
int circuit_cover_number(const SimplicialComplex& x);
bool is_circuit_cover(const SimplicialComplex& x, Mask cover);

using Decomposition = std::vector<FaceSet>;

enum class DecompositionReading {
    /// No decomposition with a strictly larger union, and none with the same
    /// union that refines it into more parts.
    kMaximal,
    /// Every family of disjoint parts of size >= 2 whose union induces their join.
    kUnrestricted,
};

/// Whether X[∪R] is the join of the X[R_i]: no circuit inside ∪R meets two parts.
bool is_join_decomposition(const SimplicialComplex& x, const Decomposition& parts);

/// Induced decompositions of X (ground size <= cap, else SizeError), parts sorted.
std::vector<Decomposition> induced_decompositions(const SimplicialComplex& x,
                                                  DecompositionReading reading = DecompositionReading::kMaximal,
                                                  std::size_t cap = 12);
/// Induced decompositions whose parts all induce θ-prime complexes.
std::vector<Decomposition> prime_decompositions(const SimplicialComplex& x,
                                                DecompositionReading reading = DecompositionReading::kMaximal,
                                                std::size_t cap = 12);

} // namespace thetalab
