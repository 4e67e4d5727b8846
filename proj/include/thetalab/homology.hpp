#pragma once

#include "thetalab/complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace thetalab {

/// Integer matrix in row-major order.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> entries;

    std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Exact rank over the rationals (fraction-free elimination; falls back to
/// arbitrary precision when 64-bit intermediates would overflow).
std::size_t rational_rank(const IntMatrix& m);

/// Faces of X of size d + 1 in lexicographic order of their sorted vertex lists.
std::vector<Mask> faces_of_dimension(const SimplicialComplex& x, int d);

/// ∂_d : C_d → C_{d−1}; rows are (d−1)-faces, columns d-faces. For d = 0 this is
/// the augmentation (a single row of ones). Signs alternate by position.
IntMatrix boundary_matrix(const SimplicialComplex& x, int d);

/// Reduced Betti number b̃_d over ℚ (d >= −1). b̃₋₁(EMPTY) = 1; VOID has none.
int reduced_betti(const SimplicialComplex& x, int d);
/// b̃₋₁ .. b̃_dim.
std::vector<int> reduced_betti_numbers(const SimplicialComplex& x);

struct LerayWitness {
    FaceSet subset;
    int dimension = -1;
};

struct LerayResult {
    int value = 0;
    /// Some X[S] with b̃_i ≠ 0 and i + 1 = value; absent when value is 0.
    std::optional<LerayWitness> witness;
};

/// ℒ(X) by scanning induced subcomplexes on vertex subsets (ground size <= cap, else SizeError).
LerayResult leray(const SimplicialComplex& x, std::size_t cap = 18);
int leray_number(const SimplicialComplex& x, std::size_t cap = 18);

/// Shedding vertices in pre-order of the decomposition tree: the vertex shed at
/// a state, then the trace for its deletion, then the trace for its link.
using SheddingTrace = std::vector<VertexId>;

/// A certificate when X is vertex decomposable (VOID is not).
std::optional<SheddingTrace> vertex_decomposition(const SimplicialComplex& x);
bool is_vertex_decomposable(const SimplicialComplex& x);

} // namespace thetalab
