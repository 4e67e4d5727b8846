#pragma once

#include "oracles.hpp"

#include "thetalab/complex.hpp"
#include "thetalab/families.hpp"
#include "thetalab/graph.hpp"

#include <vector>

namespace testing {

using thetalab::FaceSet;
using thetalab::Graph;
using thetalab::SimplicialComplex;
using thetalab::VertexId;

inline SimplicialComplex cx(std::vector<VertexId> ground, std::vector<FaceSet> facets)
{
    return SimplicialComplex::from_facets(std::move(ground), facets);
}

inline std::vector<VertexId> range(VertexId first, VertexId last)
{
    std::vector<VertexId> out;
    for (VertexId v = first; v <= last; ++v)
        out.push_back(v);
    return out;
}

/// Small seeded complexes for oracle comparisons.
inline std::vector<SimplicialComplex> small_complexes(int count, int max_vertices, int max_face, std::uint64_t seed)
{
    thetalab::Rng rng(seed);
    std::vector<SimplicialComplex> out;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
        const int faces = 1 + static_cast<int>(rng() % 6);
        out.push_back(thetalab::random_complex(n, max_face, faces, rng));
    }
    return out;
}

inline std::vector<Graph> small_graphs(int count, int max_vertices, std::uint64_t seed)
{
    thetalab::Rng rng(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
        const auto p = 1 + rng() % 3;
        out.push_back(thetalab::random_graph(n, p, 4, rng));
    }
    return out;
}

inline oracle::Faces faces_of(const SimplicialComplex& x)
{
    return oracle::from_lib(x).faces;
}

} // namespace testing
