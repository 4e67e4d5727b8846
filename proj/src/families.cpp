#include "thetalab/families.hpp"

#include "thetalab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace thetalab {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InputError(what);
}

std::vector<VertexId> iota_ground(int n, VertexId first = 0)
{
    std::vector<VertexId> g(static_cast<std::size_t>(n));
    std::iota(g.begin(), g.end(), first);
    return g;
}

} // namespace

SimplicialComplex simplex_complex(int n)
{
    require(n >= 0 && n < 64, "simplex dimension must be in [0, 63]");
    return SimplicialComplex::simplex(iota_ground(n + 1));
}

SimplicialComplex boundary_simplex(int n)
{
    require(n >= 0 && n < 64, "boundary_simplex dimension must be in [0, 63]");
    const Mask all = low_bits(static_cast<std::size_t>(n + 1));
    std::vector<Mask> facets;
    for (int i = 0; i <= n; ++i)
        facets.push_back(all & ~bit(static_cast<std::size_t>(i)));
    return SimplicialComplex::from_masks(iota_ground(n + 1), std::move(facets));
}

SimplicialComplex x6_complex()
{
    return SimplicialComplex::from_facets(iota_ground(6, 1),
                                          {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {1, 3, 6},
                                           {2, 3, 5}, {2, 3, 6}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6}});
}

Graph path_graph(int n)
{
    require(n >= 0, "path length must be nonnegative");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycles need at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n)
{
    require(n >= 0, "order must be nonnegative");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(int a, int b)
{
    require(a >= 0 && b >= 0, "part sizes must be nonnegative");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

Graph matching_graph(int n)
{
    require(n >= 0, "matching size must be nonnegative");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i)
        g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Graph claw_graph()
{
    return complete_bipartite_graph(1, 3);
}

Graph complement_cycle_graph(int n)
{
    return cycle_graph(n).complement();
}

Graph kneser_graph(int n, int k)
{
    require(k >= 1 && n >= 2 * k, "kneser needs k >= 1 and n >= 2k");
    if (n > 24)
        throw SizeError("kneser graphs are generated for n <= 24");
    std::vector<Mask> subsets;
    for (Mask m = 0; m < bit(static_cast<std::size_t>(n)); ++m) {
        if (popcount(m) == k)
            subsets.push_back(m);
    }
    // Lexicographic order of the sorted member lists.
    std::sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) { return positions(a) < positions(b); });
    Graph g(static_cast<int>(subsets.size()));
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph associahedral_graph(int n)
{
    require(n >= 4, "associahedron needs n >= 4");
    std::vector<Edge> diagonals;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1))
                diagonals.emplace_back(i, j);
    auto strictly_between = [](int a, int b, int c) { return a < c && c < b; };
    Graph g(static_cast<int>(diagonals.size()));
    for (std::size_t s = 0; s < diagonals.size(); ++s) {
        for (std::size_t t = s + 1; t < diagonals.size(); ++t) {
            auto [a, b] = diagonals[s];
            auto [c, d] = diagonals[t];
            if (a == c || a == d || b == c || b == d)
                continue;
            if (strictly_between(a, b, c) != strictly_between(a, b, d))
                g.add_edge(static_cast<int>(s), static_cast<int>(t));
        }
    }
    return g;
}

Graph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den, Rng& rng)
{
    require(n >= 0, "order must be nonnegative");
    require(p_den > 0 && p_num <= p_den, "probability must be p_num/p_den with 0 <= p_num <= p_den, p_den > 0");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % p_den < p_num)
                g.add_edge(u, v);
    return g;
}

Graph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed)
{
    Rng rng(seed);
    return random_graph(n, p_num, p_den, rng);
}

SimplicialComplex random_complex(int n, int max_facet_size, int facet_count, Rng& rng)
{
    require(n >= 0 && n <= 64, "random_complex needs 0 <= n <= 64");
    require(max_facet_size >= 1, "max_facet_size must be positive");
    require(facet_count >= 0, "facet_count must be nonnegative");
    std::vector<Mask> facets;
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < facet_count; ++i) {
        const int cap = std::min(max_facet_size, n);
        const int size = cap == 0 ? 0 : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
        std::iota(pool.begin(), pool.end(), 0);
        Mask f = 0;
        for (int j = 0; j < size; ++j) {
            const auto pick = j + static_cast<int>(rng() % static_cast<std::uint64_t>(n - j));
            std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(pick)]);
            f |= bit(static_cast<std::size_t>(pool[static_cast<std::size_t>(j)]));
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_masks(iota_ground(n), std::move(facets));
}

SimplicialComplex random_complex(int n, int max_facet_size, int facet_count, std::uint64_t seed)
{
    Rng rng(seed);
    return random_complex(n, max_facet_size, facet_count, rng);
}

namespace {

struct FamilyInfo {
    const char* name;
    std::size_t arity;
    bool random;
};

constexpr FamilyInfo kFamilies[] = {
    {"simplex", 1, false},        {"boundary_simplex", 1, false}, {"path", 1, false},
    {"cycle", 1, false},          {"complete", 1, false},         {"complete_bipartite", 2, false},
    {"nk2", 1, false},            {"claw", 0, false},             {"complement_cycle", 1, false},
    {"kneser", 2, false},         {"associahedron", 1, false},    {"x6", 0, false},
    {"random_graph", 3, true},    {"random_complex", 3, true},
};

const FamilyInfo& info(const std::string& name)
{
    for (const auto& f : kFamilies) {
        if (name == f.name)
            return f;
    }
    throw InputError("unknown family '" + name + "'");
}

} // namespace

std::vector<std::string> family_names()
{
    std::vector<std::string> out;
    for (const auto& f : kFamilies)
        out.emplace_back(f.name);
    return out;
}

bool is_random_family(const std::string& name)
{
    return info(name).random;
}

FamilySpec parse_family_spec(std::string_view text, std::optional<std::uint64_t> seed)
{
    FamilySpec spec;
    spec.seed = seed;
    const auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view tok = rest.substr(0, comma);
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
                throw InputError("bad family parameter '" + std::string(tok) + "'");
            spec.params.push_back(value);
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
    }
    const auto& fi = info(spec.name);
    if (spec.params.size() != fi.arity)
        throw InputError("family '" + spec.name + "' takes " + std::to_string(fi.arity) + " parameter(s)");
    return spec;
}

LoadedObject generate(const FamilySpec& spec)
{
    const auto& fi = info(spec.name);
    if (spec.params.size() != fi.arity)
        throw InputError("family '" + spec.name + "' takes " + std::to_string(fi.arity) + " parameter(s)");
    for (long long p : spec.params)
        require(p >= 0 && p <= 1'000'000, "family parameters must be in [0, 1000000]");
    auto p = [&](std::size_t i) { return static_cast<int>(spec.params[i]); };
    const std::string& n = spec.name;
    if (fi.random && !spec.seed)
        throw InputError("family '" + n + "' needs a seed");

    if (n == "simplex")
        return simplex_complex(p(0));
    if (n == "boundary_simplex")
        return boundary_simplex(p(0));
    if (n == "x6")
        return x6_complex();
    if (n == "path")
        return path_graph(p(0));
    if (n == "cycle")
        return cycle_graph(p(0));
    if (n == "complete")
        return complete_graph(p(0));
    if (n == "complete_bipartite")
        return complete_bipartite_graph(p(0), p(1));
    if (n == "nk2")
        return matching_graph(p(0));
    if (n == "claw")
        return claw_graph();
    if (n == "complement_cycle")
        return complement_cycle_graph(p(0));
    if (n == "kneser")
        return kneser_graph(p(0), p(1));
    if (n == "associahedron")
        return associahedral_graph(p(0));
    if (n == "random_graph")
        return random_graph(p(0), static_cast<std::uint64_t>(spec.params[1]), static_cast<std::uint64_t>(spec.params[2]), *spec.seed);
    return random_complex(p(0), p(1), p(2), *spec.seed);
}

} // namespace thetalab
