#include "thetalab/homology.hpp"

#include "thetalab/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <unordered_map>

namespace thetalab {

namespace {

/// Fraction-free Gaussian elimination. Returns nullopt if T overflows.
template <typename T, typename Step>
std::optional<std::size_t> bareiss_rank(std::vector<T> a, std::size_t rows, std::size_t cols, Step step)
{
    T prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[pivot * cols + j], a[rank * cols + j]);
        }
        const T p = a[rank * cols + c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const T f = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                auto v = step(p, a[i * cols + j], f, a[rank * cols + j], prev);
                if (!v)
                    return std::nullopt;
                a[i * cols + j] = *v;
            }
            a[i * cols + c] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

bool lex_less(Mask a, Mask b)
{
    return positions(a) < positions(b);
}

void sort_faces(std::vector<Mask>& faces)
{
    std::sort(faces.begin(), faces.end(), lex_less);
}

std::vector<std::vector<Mask>> faces_by_size(const std::vector<Mask>& faces)
{
    int top = -1;
    for (Mask f : faces)
        top = std::max(top, popcount(f));
    std::vector<std::vector<Mask>> out(static_cast<std::size_t>(top + 1));
    for (Mask f : faces)
        out[static_cast<std::size_t>(popcount(f))].push_back(f);
    for (auto& level : out)
        sort_faces(level);
    return out;
}

IntMatrix boundary_between(const std::vector<Mask>& lower, const std::vector<Mask>& upper)
{
    IntMatrix m;
    m.rows = lower.size();
    m.cols = upper.size();
    m.entries.assign(m.rows * m.cols, 0);
    std::unordered_map<Mask, std::size_t> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i)
        row_of.emplace(lower[i], i);
    for (std::size_t c = 0; c < upper.size(); ++c) {
        std::int64_t sign = 1;
        for_each_bit(upper[c], [&](std::size_t p) {
            m.entries[row_of.at(upper[c] & ~bit(p)) * m.cols + c] = sign;
            sign = -sign;
        });
    }
    return m;
}

/// b̃_d from faces grouped by size (index = size = d + 1).
int betti_from_levels(const std::vector<std::vector<Mask>>& levels, int d)
{
    auto level = [&](int size) -> const std::vector<Mask>* {
        if (size < 0 || static_cast<std::size_t>(size) >= levels.size())
            return nullptr;
        return &levels[static_cast<std::size_t>(size)];
    };
    const auto* here = level(d + 1);
    if (here == nullptr || here->empty())
        return 0;
    std::size_t rank_out = 0;
    if (const auto* below = level(d); below != nullptr && !below->empty())
        rank_out = rational_rank(boundary_between(*below, *here));
    std::size_t rank_in = 0;
    if (const auto* above = level(d + 2); above != nullptr && !above->empty())
        rank_in = rational_rank(boundary_between(*here, *above));
    return static_cast<int>(here->size() - rank_out - rank_in);
}

} // namespace

std::size_t rational_rank(const IntMatrix& m)
{
    auto narrow = [](std::int64_t p, std::int64_t x, std::int64_t f, std::int64_t y, std::int64_t prev) -> std::optional<std::int64_t> {
        std::int64_t a = 0;
        std::int64_t b = 0;
        std::int64_t d = 0;
        if (__builtin_mul_overflow(p, x, &a) || __builtin_mul_overflow(f, y, &b) || __builtin_sub_overflow(a, b, &d))
            return std::nullopt;
        return d / prev;
    };
    if (auto r = bareiss_rank<std::int64_t>(m.entries, m.rows, m.cols, narrow))
        return *r;

    using Big = boost::multiprecision::cpp_int;
    auto wide = [](const Big& p, const Big& x, const Big& f, const Big& y, const Big& prev) -> std::optional<Big> {
        return Big((p * x - f * y) / prev);
    };
    std::vector<Big> big(m.entries.begin(), m.entries.end());
    return *bareiss_rank<Big>(std::move(big), m.rows, m.cols, wide);
}

std::vector<Mask> faces_of_dimension(const SimplicialComplex& x, int d)
{
    std::vector<Mask> out;
    for (Mask f : all_faces(x)) {
        if (popcount(f) == d + 1)
            out.push_back(f);
    }
    sort_faces(out);
    return out;
}

IntMatrix boundary_matrix(const SimplicialComplex& x, int d)
{
    return boundary_between(faces_of_dimension(x, d - 1), faces_of_dimension(x, d));
}

int reduced_betti(const SimplicialComplex& x, int d)
{
    return betti_from_levels(faces_by_size(all_faces(x)), d);
}

std::vector<int> reduced_betti_numbers(const SimplicialComplex& x)
{
    const auto levels = faces_by_size(all_faces(x));
    std::vector<int> out;
    for (int d = -1; d <= x.dimension(); ++d)
        out.push_back(betti_from_levels(levels, d));
    return out;
}

LerayResult leray(const SimplicialComplex& x, std::size_t cap)
{
    if (x.ground_size() > cap)
        throw SizeError("Leray scan is capped at " + std::to_string(cap) + " ground vertices");
    LerayResult out;
    const int ceiling = x.dimension() + 1;
    const auto faces = all_faces(x);
    const Mask verts = x.vertex_mask();
    const auto pos = positions(verts);
    const auto n = static_cast<int>(pos.size());

    for (int size = n; size > out.value && out.value < ceiling; --size) {
        // Subsets of the actual vertices with `size` elements, as index combinations.
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i)
            idx[static_cast<std::size_t>(i)] = i;
        while (out.value < ceiling) {
            Mask s = 0;
            for (int i : idx)
                s |= bit(pos[static_cast<std::size_t>(i)]);

            std::vector<Mask> restricted;
            for (Mask f : x.facet_masks())
                restricted.push_back(f & s);
            restricted = maximal_sets(std::move(restricted));
            Mask common = s;
            int top = 0;
            for (Mask f : restricted) {
                common &= f;
                top = std::max(top, popcount(f));
            }
            std::vector<Mask> sub;
            // Cones are acyclic; X[S] has homology only below its own dimension + 1.
            if (common == 0 && top > out.value) {
                for (Mask f : faces) {
                    if (is_subset(f, s))
                        sub.push_back(f);
                }
                const auto levels = faces_by_size(sub);
                for (int d = top - 1; d >= out.value; --d) {
                    if (betti_from_levels(levels, d) != 0) {
                        out.value = d + 1;
                        out.witness = LerayWitness{x.to_face(s), d};
                        break;
                    }
                }
            }

            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

int leray_number(const SimplicialComplex& x, std::size_t cap)
{
    return leray(x, cap).value;
}

namespace {

class SheddingSearch {
public:
    std::optional<SheddingTrace> run(const std::vector<Mask>& facets, const std::vector<VertexId>& ground)
    {
        if (facets.empty())
            return std::nullopt;
        if (facets.size() == 1)
            return SheddingTrace{};
        if (auto it = memo_.find(facets); it != memo_.end())
            return it->second;

        Mask actual = 0;
        for (Mask f : facets)
            actual |= f;
        std::optional<SheddingTrace> found;
        for_each_bit(actual, [&](std::size_t v) {
            if (found)
                return;
            std::vector<Mask> del;
            std::vector<Mask> lk;
            for (Mask f : facets) {
                del.push_back(f & ~bit(v));
                if (contains_bit(f, v))
                    lk.push_back(f & ~bit(v));
            }
            del = maximal_sets(std::move(del));
            std::sort(lk.begin(), lk.end());
            const bool sheds = std::all_of(del.begin(), del.end(), [&](Mask d) {
                return std::binary_search(facets.begin(), facets.end(), d);
            });
            if (!sheds)
                return;
            auto del_trace = run(del, ground);
            if (!del_trace)
                return;
            auto lk_trace = run(lk, ground);
            if (!lk_trace)
                return;
            SheddingTrace t{ground[v]};
            t.insert(t.end(), del_trace->begin(), del_trace->end());
            t.insert(t.end(), lk_trace->begin(), lk_trace->end());
            found = std::move(t);
        });
        memo_.emplace(facets, found);
        return found;
    }

private:
    std::unordered_map<std::vector<Mask>, std::optional<SheddingTrace>, MaskVectorHash> memo_;
};

} // namespace

std::optional<SheddingTrace> vertex_decomposition(const SimplicialComplex& x)
{
    SheddingSearch search;
    return search.run({x.facet_masks().begin(), x.facet_masks().end()}, x.ground());
}

bool is_vertex_decomposable(const SimplicialComplex& x)
{
    return vertex_decomposition(x).has_value();
}

} // namespace thetalab
