#pragma once

#include "thetalab/bits.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace thetalab {

/// Vertex label within a ground set.
using VertexId = std::uint32_t;

/// A face as a sorted list of distinct vertex labels.
using FaceSet = std::vector<VertexId>;

/// Exact identity of a complex: ground labels plus its sorted facet masks.
/// Two complexes share a key iff they have the same ground and the same faces.
struct CanonicalKey {
    std::vector<VertexId> ground;
    std::vector<Mask> facets;

    bool operator==(const CanonicalKey&) const = default;

    /// Stable textual form, suitable for content-addressed caches.
    std::string to_string() const;
    /// FNV-1a digest of to_string(); stable across runs and platforms.
    std::uint64_t digest() const;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const noexcept;
};

/// A finite (generalized) simplicial complex stored by its facets.
///
/// The ground set is an ordered list of at most 64 labels. Facets are kept as
/// masks over positions in that list, always as a sorted antichain. A ground
/// element lying in no facet is a ghost vertex. The void complex (no faces)
/// and the empty complex {∅} are distinct values.
class SimplicialComplex {
public:
    /// The void complex on an empty ground.
    SimplicialComplex() = default;

    /// Keeps the inclusion-maximal candidates. Ground labels are sorted and must be distinct.
    static SimplicialComplex from_facets(std::vector<VertexId> ground, const std::vector<FaceSet>& candidate_facets);
    /// Mask-level constructor; masks refer to positions in the (already sorted, distinct) ground.
    static SimplicialComplex from_masks(std::vector<VertexId> ground, std::vector<Mask> candidate_facets);

    static SimplicialComplex void_complex(std::vector<VertexId> ground = {});
    static SimplicialComplex empty_complex(std::vector<VertexId> ground = {});
    static SimplicialComplex simplex(std::vector<VertexId> vertices);

    const std::vector<VertexId>& ground() const { return ground_; }
    std::size_t ground_size() const { return ground_.size(); }
    Mask ground_mask() const { return low_bits(ground_.size()); }

    std::span<const Mask> facet_masks() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    std::vector<FaceSet> facets() const;

    bool is_void() const { return facets_.empty(); }
    bool is_empty() const { return facets_.size() == 1 && facets_.front() == 0; }
    /// Exactly one facet (EMPTY is the simplex on ∅).
    bool is_simplex() const { return facets_.size() == 1; }

    /// Largest face dimension; -1 for VOID and EMPTY.
    int dimension() const;
    /// Positions of actual vertices.
    Mask vertex_mask() const;
    Mask ghost_mask() const { return ground_mask() & ~vertex_mask(); }
    std::vector<VertexId> vertices() const;
    std::vector<VertexId> ghosts() const;

    bool contains_face(Mask face) const;
    bool contains_face(const FaceSet& face) const;

    std::optional<std::size_t> position_of(VertexId v) const;
    /// Throws InputError if v is not in the ground.
    std::size_t require_position(VertexId v) const;
    Mask to_mask(std::span<const VertexId> labels) const;
    FaceSet to_face(Mask m) const;

    CanonicalKey canonical_key() const { return CanonicalKey{ground_, facets_}; }

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<VertexId> ground_;
    std::vector<Mask> facets_;
};

/// del(X; v). Deleting a ghost vertex yields EMPTY on the reduced ground.
SimplicialComplex deletion(const SimplicialComplex& x, VertexId v);
/// lk(X; v). The link of a ghost vertex is EMPTY on the reduced ground.
SimplicialComplex link(const SimplicialComplex& x, VertexId v);
/// X[S] on ground S.
SimplicialComplex induced(const SimplicialComplex& x, std::span<const VertexId> subset);
/// X1 * X2 on the union of the (disjoint) grounds.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Minimal non-faces, as masks over the ground of x.
std::vector<Mask> circuit_masks(const SimplicialComplex& x);
std::vector<FaceSet> circuits(const SimplicialComplex& x);

/// Positions of actual vertices whose link differs from their deletion.
Mask non_cone_mask(const SimplicialComplex& x);
std::vector<VertexId> non_cone_vertices(const SimplicialComplex& x);

bool is_weak_pseudo_manifold(const SimplicialComplex& x);

CanonicalKey canonical_key(const SimplicialComplex& x);

/// Relabels vertices through `label_map` (old label -> new label); must be injective on the ground.
SimplicialComplex relabel(const SimplicialComplex& x, const std::function<VertexId(VertexId)>& label_map);

/// All faces of the complex as masks (including ∅ unless VOID), ascending.
std::vector<Mask> all_faces(const SimplicialComplex& x);

} // namespace thetalab
