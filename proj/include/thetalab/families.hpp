#pragma once

#include "thetalab/complex.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/io.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace thetalab {

/// Pseudo-random source for every seeded generator (64-bit Mersenne Twister).
using Rng = std::mt19937_64;

SimplicialComplex simplex_complex(int n);          // Δⁿ on {0..n}
SimplicialComplex boundary_simplex(int n);         // ∂Δⁿ on {0..n}
SimplicialComplex x6_complex();                    // the 10-facet 2-collapsible complex on {1..6} with θ = 3

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph matching_graph(int n);                       // nK₂
Graph claw_graph();
Graph complement_cycle_graph(int n);
/// Vertices are the k-subsets of {0..n-1} in lexicographic order; edges join disjoint subsets.
Graph kneser_graph(int n, int k);
/// Vertices are the diagonals {i, j} of the n-gon (lexicographic); edges join crossing diagonals.
Graph associahedral_graph(int n);

/// Edge {u, v} (u < v, lexicographic order) kept iff rng() mod p_den < p_num.
Graph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den, Rng& rng);
Graph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed);

/// Ground {0..n-1}; facet_count random faces, each of size uniform in [1, max_facet_size]
/// (capped at n) with members drawn by a partial Fisher-Yates shuffle.
SimplicialComplex random_complex(int n, int max_facet_size, int facet_count, Rng& rng);
SimplicialComplex random_complex(int n, int max_facet_size, int facet_count, std::uint64_t seed);

struct FamilySpec {
    std::string name;
    std::vector<long long> params;
    std::optional<std::uint64_t> seed;
};

/// Parses "name" or "name:p1,p2,...". Throws InputError.
FamilySpec parse_family_spec(std::string_view text, std::optional<std::uint64_t> seed = std::nullopt);

std::vector<std::string> family_names();
bool is_random_family(const std::string& name);

/// Builds the named object. Throws InputError on unknown names, wrong arity or
/// out-of-range parameters, and when a random family has no seed.
LoadedObject generate(const FamilySpec& spec);

} // namespace thetalab
