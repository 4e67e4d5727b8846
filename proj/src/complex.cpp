#include "thetalab/complex.hpp"

#include "thetalab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace thetalab {

namespace {

std::vector<VertexId> checked_ground(std::vector<VertexId> ground)
{
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        throw InputError("ground set lists a vertex twice");
    if (ground.size() > kMaxGround)
        throw SizeError("ground set has " + std::to_string(ground.size()) + " vertices; at most 64 are supported");
    return ground;
}

} // namespace

std::string CanonicalKey::to_string() const
{
    std::ostringstream out;
    out << "g";
    for (VertexId v : ground)
        out << ':' << v;
    out << "|f";
    for (Mask f : facets)
        out << ':' << f;
    return out.str();
}

std::uint64_t CanonicalKey::digest() const
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_string()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept
{
    std::size_t h = MaskVectorHash{}(k.facets);
    for (VertexId v : k.ground)
        h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<VertexId> ground, std::vector<Mask> candidate_facets)
{
    SimplicialComplex x;
    x.ground_ = checked_ground(std::move(ground));
    const Mask all = x.ground_mask();
    for (Mask f : candidate_facets) {
        if (!is_subset(f, all))
            throw InputError("facet mask refers to a position outside the ground set");
    }
    x.facets_ = maximal_sets(std::move(candidate_facets));
    return x;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexId> ground, const std::vector<FaceSet>& candidate_facets)
{
    SimplicialComplex x;
    x.ground_ = checked_ground(std::move(ground));
    std::vector<Mask> masks;
    masks.reserve(candidate_facets.size());
    for (const FaceSet& f : candidate_facets)
        masks.push_back(x.to_mask(f));
    x.facets_ = maximal_sets(std::move(masks));
    return x;
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<VertexId> ground)
{
    return from_masks(std::move(ground), {});
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<VertexId> ground)
{
    return from_masks(std::move(ground), {Mask{0}});
}

SimplicialComplex SimplicialComplex::simplex(std::vector<VertexId> vertices)
{
    const std::size_t n = vertices.size();
    return from_masks(std::move(vertices), {low_bits(n)});
}

std::vector<FaceSet> SimplicialComplex::facets() const
{
    std::vector<FaceSet> out;
    out.reserve(facets_.size());
    for (Mask f : facets_)
        out.push_back(to_face(f));
    return out;
}

int SimplicialComplex::dimension() const
{
    int best = -1;
    for (Mask f : facets_)
        best = std::max(best, popcount(f) - 1);
    return best;
}

Mask SimplicialComplex::vertex_mask() const
{
    Mask m = 0;
    for (Mask f : facets_)
        m |= f;
    return m;
}

std::vector<VertexId> SimplicialComplex::vertices() const
{
    return to_face(vertex_mask());
}

std::vector<VertexId> SimplicialComplex::ghosts() const
{
    return to_face(ghost_mask());
}

bool SimplicialComplex::contains_face(Mask face) const
{
    return std::any_of(facets_.begin(), facets_.end(), [face](Mask f) { return is_subset(face, f); });
}

bool SimplicialComplex::contains_face(const FaceSet& face) const
{
    Mask m = 0;
    for (VertexId v : face) {
        auto p = position_of(v);
        if (!p)
            return false;
        m |= bit(*p);
    }
    return contains_face(m);
}

std::optional<std::size_t> SimplicialComplex::position_of(VertexId v) const
{
    auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
    if (it == ground_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - ground_.begin());
}

std::size_t SimplicialComplex::require_position(VertexId v) const
{
    auto p = position_of(v);
    if (!p)
        throw InputError("vertex " + std::to_string(v) + " is not in the ground set");
    return *p;
}

Mask SimplicialComplex::to_mask(std::span<const VertexId> labels) const
{
    Mask m = 0;
    for (VertexId v : labels)
        m |= bit(require_position(v));
    return m;
}

FaceSet SimplicialComplex::to_face(Mask m) const
{
    FaceSet out;
    for_each_bit(m, [&](std::size_t i) { out.push_back(ground_[i]); });
    return out;
}

namespace {

std::vector<VertexId> ground_without(const std::vector<VertexId>& ground, std::size_t pos)
{
    std::vector<VertexId> g = ground;
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(pos));
    return g;
}

} // namespace

SimplicialComplex deletion(const SimplicialComplex& x, VertexId v)
{
    const std::size_t p = x.require_position(v);
    auto ground = ground_without(x.ground(), p);
    if (!contains_bit(x.vertex_mask(), p))
        return SimplicialComplex::empty_complex(std::move(ground));
    std::vector<Mask> fs;
    for (Mask f : x.facet_masks())
        fs.push_back(drop_position(f & ~bit(p), p));
    return SimplicialComplex::from_masks(std::move(ground), std::move(fs));
}

SimplicialComplex link(const SimplicialComplex& x, VertexId v)
{
    const std::size_t p = x.require_position(v);
    auto ground = ground_without(x.ground(), p);
    if (!contains_bit(x.vertex_mask(), p))
        return SimplicialComplex::empty_complex(std::move(ground));
    std::vector<Mask> fs;
    for (Mask f : x.facet_masks()) {
        if (contains_bit(f, p))
            fs.push_back(drop_position(f & ~bit(p), p));
    }
    return SimplicialComplex::from_masks(std::move(ground), std::move(fs));
}

SimplicialComplex induced(const SimplicialComplex& x, std::span<const VertexId> subset)
{
    const Mask keep = x.to_mask(subset);
    std::vector<VertexId> ground;
    for_each_bit(keep, [&](std::size_t i) { ground.push_back(x.ground()[i]); });
    std::vector<Mask> fs;
    for (Mask f : x.facet_masks())
        fs.push_back(compress(f & keep, keep));
    return SimplicialComplex::from_masks(std::move(ground), std::move(fs));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<VertexId> ground = a.ground();
    ground.insert(ground.end(), b.ground().begin(), b.ground().end());
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        throw InputError("join requires disjoint ground sets");
    if (ground.size() > kMaxGround)
        throw SizeError("join would exceed 64 ground vertices");

    auto lift = [&](const SimplicialComplex& part, Mask m) {
        Mask out = 0;
        for_each_bit(m, [&](std::size_t i) {
            auto it = std::lower_bound(ground.begin(), ground.end(), part.ground()[i]);
            out |= bit(static_cast<std::size_t>(it - ground.begin()));
        });
        return out;
    };

    std::vector<Mask> fs;
    for (Mask fa : a.facet_masks()) {
        const Mask la = lift(a, fa);
        for (Mask fb : b.facet_masks())
            fs.push_back(la | lift(b, fb));
    }
    return SimplicialComplex::from_masks(std::move(ground), std::move(fs));
}

std::vector<Mask> circuit_masks(const SimplicialComplex& x)
{
    if (x.is_void())
        return {Mask{0}};
    const std::size_t n = x.ground_size();
    std::vector<Mask> out;
    // Every circuit S is reached as A ∪ {x} with A = S minus its top position, a face.
    auto visit = [&](auto&& self, Mask face, std::size_t next) -> void {
        for (std::size_t i = next; i < n; ++i) {
            const Mask s = face | bit(i);
            if (x.contains_face(s)) {
                self(self, s, i + 1);
                continue;
            }
            bool minimal = true;
            for_each_bit(face, [&](std::size_t j) {
                if (minimal && !x.contains_face(s & ~bit(j)))
                    minimal = false;
            });
            if (minimal)
                out.push_back(s);
        }
    };
    visit(visit, Mask{0}, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FaceSet> circuits(const SimplicialComplex& x)
{
    std::vector<FaceSet> out;
    for (Mask c : circuit_masks(x))
        out.push_back(x.to_face(c));
    return out;
}

Mask non_cone_mask(const SimplicialComplex& x)
{
    if (x.is_void())
        return 0;
    Mask common = x.ground_mask();
    for (Mask f : x.facet_masks())
        common &= f;
    return x.vertex_mask() & ~common;
}

std::vector<VertexId> non_cone_vertices(const SimplicialComplex& x)
{
    return x.to_face(non_cone_mask(x));
}

bool is_weak_pseudo_manifold(const SimplicialComplex& x)
{
    const auto fs = x.facet_masks();
    if (fs.empty())
        return false;
    const int size = popcount(fs.front());
    for (Mask f : fs) {
        if (popcount(f) != size)
            return false;
    }
    for (Mask f : fs) {
        bool ok = true;
        for_each_bit(f, [&](std::size_t i) {
            const Mask ridge = f & ~bit(i);
            const auto holders = std::count_if(fs.begin(), fs.end(), [ridge](Mask g) { return is_subset(ridge, g); });
            if (holders != 2)
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

CanonicalKey canonical_key(const SimplicialComplex& x)
{
    return x.canonical_key();
}

SimplicialComplex relabel(const SimplicialComplex& x, const std::function<VertexId(VertexId)>& label_map)
{
    std::vector<VertexId> ground;
    for (VertexId v : x.ground())
        ground.push_back(label_map(v));
    std::vector<FaceSet> fs;
    for (const FaceSet& f : x.facets()) {
        FaceSet g;
        for (VertexId v : f)
            g.push_back(label_map(v));
        std::sort(g.begin(), g.end());
        fs.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(std::move(ground), fs);
}

std::vector<Mask> all_faces(const SimplicialComplex& x)
{
    std::vector<Mask> out;
    for (Mask f : x.facet_masks()) {
        for (Mask s = f;; s = (s - 1) & f) {
            out.push_back(s);
            if (s == 0)
                break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace thetalab
