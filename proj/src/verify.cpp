#include "thetalab/verify.hpp"

#include "thetalab/errors.hpp"
#include "thetalab/graph_invariants.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/theta.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace thetalab {

const std::vector<TheoremInfo>& theorem_catalogue()
{
    static const std::vector<TheoremInfo> catalogue = {
        {"prop2", Domain::kComplex, "theta(X[S]) <= theta(X) for every S"},
        {"thm4", Domain::kComplex, "theta(lk(X;v)) <= theta(del(X;v)) for every vertex"},
        {"cor5", Domain::kComplex, "theta(X) is theta(del(X;v)) or theta(lk(X;v)) + 1 for every vertex"},
        {"prop7", Domain::kComplex, "the prime set of a reduction run is a face; theta(X) <= theta(X_F) + prime_F"},
        {"cor8", Domain::kComplex, "theta(X) <= dim(X) + 1"},
        {"thm10", Domain::kComplex, "theta(X) <= ccn(X)"},
        {"thm11", Domain::kComplex, "theta(X1 * X2) = theta(X1) + theta(X2)"},
        {"thm13", Domain::kComplex, "theta(X) = max over prime decompositions of the sum of theta(X[R_i])"},
        {"lemma21", Domain::kComplex, "C(X) <= max(C(del(X;v)), C(lk(X;v)) + 1)"},
        {"thm22", Domain::kComplex, "C(lk(X;v)) <= C(del(X;v))"},
        {"cor23", Domain::kComplex, "C(X) is C(del(X;v)) or C(lk(X;v)) + 1 for every vertex"},
        {"thm25", Domain::kComplex, "C(X) <= theta(X)"},
        {"wegner", Domain::kComplex, "L(X) <= C(X)"},
        {"cor26", Domain::kComplex, "C(X) = 1 iff theta(X) = 1"},
        {"cor29", Domain::kComplex, "theta-prime sets are facet chains; theta(X) <= k(X)"},
        {"thm30", Domain::kComplex, "vertex decomposable => theta = C = L"},
        {"prop17", Domain::kGraph, "N[u] a vertex cover => theta(G) = theta(G - u) or theta(G) = 1"},
        {"prop19", Domain::kGraph, "E != {}: theta(G) = 1 iff G is co-chordal"},
        {"lemma32", Domain::kGraph, "theta(G - N[e]) + 1 <= theta(G) for every edge"},
        {"prop33", Domain::kGraph, "theta(G - {x,y}) <= theta(G) <= theta(G - {x,y}) + 1"},
        {"prop34", Domain::kGraph, "theta(G - {x,y}) <= theta(G/e) <= theta(G - {x,y}) + 1"},
        {"thm35", Domain::kGraph, "theta(G/e) <= theta(G) <= theta(G/e) + 1"},
        {"prop36", Domain::kGraph, "im <= theta <= ccn <= min-m"},
        {"cor37", Domain::kGraph, "a dominating induced matching forces theta = im"},
        {"thm40", Domain::kGraph, "theta <= (Gamma + 1) im and theta <= Delta im"},
        {"thm41", Domain::kGraph, "theta <= 2 sqrt(n im)"},
        {"thm43", Domain::kGraph, "claw-free => theta <= 2 im"},
        {"thm46", Domain::kGraph, "2K2-free => theta <= 2 log2 n"},
        {"prop47", Domain::kGraph, "N[x] within N[y], deg(y) >= 2 => not theta-prime"},
        {"cor48", Domain::kGraph, "strongly theta-prime => G - N[S] strongly theta-prime for independent S"},
        {"lemma49", Domain::kGraph, "strongly theta-prime => 1-well-covered"},
        {"cor50", Domain::kGraph, "strongly theta-prime => Ind(G) weak pseudo-manifold; weak pseudo-manifold => theta = alpha"},
    };
    return catalogue;
}

const TheoremInfo* find_theorem(const std::string& id)
{
    const auto& c = theorem_catalogue();
    auto it = std::find_if(c.begin(), c.end(), [&](const TheoremInfo& t) { return t.id == id; });
    return it == c.end() ? nullptr : &*it;
}

namespace {

Rng instance_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(stream)};
    return Rng(seq);
}

int uniform(Rng& rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

SimplicialComplex draw_complex(Rng& rng, int max_vertices)
{
    const int n = uniform(rng, 1, max_vertices);
    const int max_face = uniform(rng, 1, std::min(4, n));
    const int faces = uniform(rng, 1, 6);
    return random_complex(n, max_face, faces, rng);
}

} // namespace

std::vector<Instance> random_graph_instances(const RandomStreamOptions& opt)
{
    if (opt.max_vertices < 1 || opt.count < 0)
        throw InputError("random stream needs max_vertices >= 1 and count >= 0");
    std::vector<Instance> out;
    for (int i = 0; i < opt.count; ++i) {
        Rng rng = instance_rng(opt.seed, static_cast<std::uint64_t>(i), 1);
        const int n = uniform(rng, 1, opt.max_vertices);
        const auto p = static_cast<std::uint64_t>(uniform(rng, 1, 3));
        out.push_back({"random-graph-" + std::to_string(opt.seed) + "-" + std::to_string(i), random_graph(n, p, 4, rng), std::nullopt});
    }
    return out;
}

std::vector<Instance> random_complex_instances(const RandomStreamOptions& opt)
{
    if (opt.max_vertices < 1 || opt.count < 0)
        throw InputError("random stream needs max_vertices >= 1 and count >= 0");
    std::vector<Instance> out;
    for (int i = 0; i < opt.count; ++i) {
        Rng rng = instance_rng(opt.seed, static_cast<std::uint64_t>(i), 2);
        SimplicialComplex x = draw_complex(rng, opt.max_vertices);
        SimplicialComplex y = draw_complex(rng, std::max(1, opt.max_vertices / 2));
        const auto shift = static_cast<VertexId>(x.ground_size());
        y = relabel(y, [shift](VertexId v) { return v + shift; });
        out.push_back({"random-complex-" + std::to_string(opt.seed) + "-" + std::to_string(i), std::move(x), std::move(y)});
    }
    return out;
}

std::vector<Instance> random_instances(Domain domain, const RandomStreamOptions& opt)
{
    return domain == Domain::kGraph ? random_graph_instances(opt) : random_complex_instances(opt);
}

Instance family_instance(const FamilySpec& spec)
{
    std::ostringstream id;
    id << spec.name;
    for (std::size_t i = 0; i < spec.params.size(); ++i)
        id << (i == 0 ? ':' : ',') << spec.params[i];
    if (spec.seed && is_random_family(spec.name))
        id << "@" << *spec.seed;
    return {id.str(), generate(spec), std::nullopt};
}

namespace {

std::string face_text(const FaceSet& f)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < f.size(); ++i)
        out << (i ? "," : "") << f[i];
    out << '}';
    return out.str();
}

/// Exact values of sub-complexes met during one check, keyed by canonical form.
class ComplexValues {
public:
    explicit ComplexValues(const CheckSettings& s) : settings_(s) {}

    int theta(const SimplicialComplex& x)
    {
        const auto key = x.canonical_key();
        if (auto it = theta_.find(key); it != theta_.end())
            return it->second;
        const int t = ThetaSolver(x, {.use_dimension_bound = false}).theta();
        theta_.emplace(key, t);
        return t;
    }

    /// nullopt when the collapse search ran out of budget.
    std::optional<int> collapsibility(const SimplicialComplex& x)
    {
        const auto key = x.canonical_key();
        if (auto it = collapse_.find(key); it != collapse_.end())
            return it->second;
        auto r = thetalab::collapsibility(x, 0, settings_.collapse);
        std::optional<int> v;
        if (r.exact)
            v = r.value;
        collapse_.emplace(key, v);
        return v;
    }

    int leray(const SimplicialComplex& x)
    {
        return leray_number(x, settings_.leray_cap);
    }

private:
    const CheckSettings& settings_;
    std::unordered_map<CanonicalKey, int, CanonicalKeyHash> theta_;
    std::unordered_map<CanonicalKey, std::optional<int>, CanonicalKeyHash> collapse_;
};

CheckOutcome pass()
{
    return {CheckStatus::kPass, {}};
}

CheckOutcome not_applicable(std::string why)
{
    return {CheckStatus::kNotApplicable, std::move(why)};
}

CheckOutcome inconclusive(std::string why)
{
    return {CheckStatus::kInconclusive, std::move(why)};
}

template <typename... Parts>
CheckOutcome fail(const Parts&... parts)
{
    std::ostringstream out;
    (out << ... << parts);
    return {CheckStatus::kFail, out.str()};
}

using ComplexCheck = std::function<CheckOutcome(const SimplicialComplex&, const Instance&, ComplexValues&, const CheckSettings&)>;
using GraphCheck = std::function<CheckOutcome(const Graph&, const CheckSettings&)>;

/// Runs f(v, C(X), C(del), C(lk)) on each actual vertex, stopping at the first non-pass.
CheckOutcome per_vertex_collapse(const SimplicialComplex& x, ComplexValues& values,
                                 const std::function<CheckOutcome(VertexId, int, int, int)>& f)
{
    const auto c = values.collapsibility(x);
    if (!c)
        return inconclusive("collapse search budget exhausted on X");
    for (VertexId v : x.vertices()) {
        const auto d = values.collapsibility(deletion(x, v));
        const auto l = values.collapsibility(link(x, v));
        if (!d || !l)
            return inconclusive("collapse search budget exhausted at vertex " + std::to_string(v));
        if (auto r = f(v, *c, *d, *l); r.status != CheckStatus::kPass)
            return r;
    }
    return pass();
}

const std::map<std::string, ComplexCheck>& complex_checks()
{
    static const std::map<std::string, ComplexCheck> checks = {
        {"prop2", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings& s) {
             if (x.ground_size() > s.subset_cap)
                 return not_applicable("ground exceeds the subset cap");
             const int t = val.theta(x);
             for (Mask m = 0; m <= x.ground_mask(); ++m) {
                 const FaceSet sub = x.to_face(m);
                 const int ts = val.theta(induced(x, sub));
                 if (ts > t)
                     return fail("theta(X[", face_text(sub), "]) = ", ts, " > theta(X) = ", t);
                 if (m == x.ground_mask())
                     break;
             }
             return pass();
         }},
        {"thm4", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             for (VertexId v : x.vertices()) {
                 const int l = val.theta(link(x, v));
                 const int d = val.theta(deletion(x, v));
                 if (l > d)
                     return fail("vertex ", v, ": theta(lk) = ", l, " > theta(del) = ", d);
             }
             return pass();
         }},
        {"cor5", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             const int t = val.theta(x);
             for (VertexId v : x.vertices()) {
                 const int d = val.theta(deletion(x, v));
                 const int l = val.theta(link(x, v));
                 if (t != d && t != l + 1)
                     return fail("vertex ", v, ": theta = ", t, ", theta(del) = ", d, ", theta(lk) = ", l);
             }
             return pass();
         }},
        {"prop7", [](const SimplicialComplex& x, const Instance& inst, ComplexValues& val, const CheckSettings&) {
             const int t = val.theta(x);
             std::vector<std::vector<VertexId>> orders;
             orders.push_back(x.ground());
             orders.emplace_back(x.ground().rbegin(), x.ground().rend());
             auto shuffled = x.ground();
             Rng rng(std::hash<std::string>{}(inst.id));
             std::shuffle(shuffled.begin(), shuffled.end(), rng);
             orders.push_back(shuffled);
             // Prefixes give proper subsets F.
             for (std::size_t len = 0; len < shuffled.size(); ++len)
                 orders.emplace_back(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(len));
             for (const auto& order : orders) {
                 const auto trace = theta_prime_reduction(x, order);
                 if (!x.contains_face(trace.prime_set))
                     return fail("prime set ", face_text(trace.prime_set), " is not a face");
                 const int rest = val.theta(trace.final_complex);
                 if (t > rest + trace.prime_count)
                     return fail("theta = ", t, " > theta(X_F) + prime_F = ", rest, " + ", trace.prime_count);
                 if (order.size() == x.ground_size() && trace.prime_count != t)
                     return fail("full reduction counted ", trace.prime_count, " primes but theta = ", t);
             }
             return pass();
         }},
        {"cor8", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             const int t = val.theta(x);
             if (t > x.dimension() + 1)
                 return fail("theta = ", t, " > dim + 1 = ", x.dimension() + 1);
             return pass();
         }},
        {"thm10", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             const int t = val.theta(x);
             const auto cc = minimum_circuit_cover(x);
             if (!x.is_void() && !is_circuit_cover(x, x.to_mask(cc.cover)))
                 return fail("reported cover ", face_text(cc.cover), " is not a circuit cover");
             if (t > cc.value)
                 return fail("theta = ", t, " > ccn = ", cc.value);
             return pass();
         }},
        {"thm11", [](const SimplicialComplex& x, const Instance& inst, ComplexValues& val, const CheckSettings&) {
             if (!inst.partner)
                 return not_applicable("no partner complex");
             const auto& y = *inst.partner;
             const int tj = val.theta(join(x, y));
             const int tx = val.theta(x);
             const int ty = val.theta(y);
             if (tj != tx + ty)
                 return fail("theta(X1 * X2) = ", tj, " but theta(X1) + theta(X2) = ", tx, " + ", ty);
             return pass();
         }},
        {"thm13", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings& s) {
             if (x.ground_size() > s.decomposition_cap)
                 return not_applicable("ground exceeds the decomposition cap");
             const int t = val.theta(x);
             int best = -1;
             for (const auto& dec : prime_decompositions(x, DecompositionReading::kUnrestricted, s.decomposition_cap)) {
                 int sum = 0;
                 for (const auto& part : dec)
                     sum += val.theta(induced(x, part));
                 best = std::max(best, sum);
             }
             if (best != t)
                 return fail("theta = ", t, " but the best prime decomposition sums to ", best);
             return pass();
         }},
        {"lemma21", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             return per_vertex_collapse(x, val, [](VertexId v, int c, int d, int l) {
                 if (c > std::max(d, l + 1))
                     return fail("vertex ", v, ": C = ", c, " > max(C(del), C(lk) + 1) = max(", d, ", ", l + 1, ")");
                 return pass();
             });
         }},
        {"thm22", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             return per_vertex_collapse(x, val, [](VertexId v, int, int d, int l) {
                 if (l > d)
                     return fail("vertex ", v, ": C(lk) = ", l, " > C(del) = ", d);
                 return pass();
             });
         }},
        {"cor23", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             return per_vertex_collapse(x, val, [](VertexId v, int c, int d, int l) {
                 if (c != d && c != l + 1)
                     return fail("vertex ", v, ": C = ", c, ", C(del) = ", d, ", C(lk) = ", l);
                 return pass();
             });
         }},
        {"thm25", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             const auto c = val.collapsibility(x);
             if (!c)
                 return inconclusive("collapse search budget exhausted");
             const int t = val.theta(x);
             if (*c > t)
                 return fail("C = ", *c, " > theta = ", t);
             return pass();
         }},
        {"wegner", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings& s) {
             if (x.ground_size() > s.leray_cap)
                 return not_applicable("ground exceeds the Leray cap");
             const auto c = val.collapsibility(x);
             if (!c)
                 return inconclusive("collapse search budget exhausted");
             const int l = val.leray(x);
             if (l > *c)
                 return fail("L = ", l, " > C = ", *c);
             return pass();
         }},
        {"cor26", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             const auto c = val.collapsibility(x);
             if (!c)
                 return inconclusive("collapse search budget exhausted");
             const int t = val.theta(x);
             if ((*c == 1) != (t == 1))
                 return fail("C = ", *c, " but theta = ", t);
             return pass();
         }},
        {"cor29", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings&) {
             const int t = val.theta(x);
             const auto lew = lew_bound(x);
             if (!x.is_void() && !is_facet_chain_witness(x, lew.witness))
                 return fail("lew bound witness is not a facet chain");
             if (t > lew.k)
                 return fail("theta = ", t, " > k(X) = ", lew.k);
             const auto trace = theta_prime_reduction(x, x.ground());
             std::vector<VertexId> primes;
             for (const auto& step : trace.steps) {
                 if (step.decision == ReductionDecision::kPrime)
                     primes.push_back(step.vertex);
             }
             auto chain = complete_facet_chain(x, primes);
             if (!x.is_void() && (!chain || !is_facet_chain_witness(x, *chain)))
                 return fail("theta-prime sequence ", face_text(primes), " admits no facet chain");
             return pass();
         }},
        {"thm30", [](const SimplicialComplex& x, const Instance&, ComplexValues& val, const CheckSettings& s) {
             if (x.ground_size() > s.leray_cap)
                 return not_applicable("ground exceeds the Leray cap");
             if (!is_vertex_decomposable(x))
                 return not_applicable("not vertex decomposable");
             const auto c = val.collapsibility(x);
             if (!c)
                 return inconclusive("collapse search budget exhausted");
             const int t = val.theta(x);
             const int l = val.leray(x);
             if (t != *c || *c != l)
                 return fail("vertex decomposable but theta = ", t, ", C = ", *c, ", L = ", l);
             return pass();
         }},
    };
    return checks;
}

struct EdgeThetas {
    int g;
    int without_pair;
    int without_closed;
    int contracted;
};

/// θ of G and of the three graphs an edge xy gives rise to.
EdgeThetas edge_thetas(GraphThetaSolver& solver, int x, int y)
{
    const Graph& g = solver.graph();
    const Mask pair = bit(static_cast<std::size_t>(x)) | bit(static_cast<std::size_t>(y));
    EdgeThetas t{};
    t.g = solver.theta();
    t.without_pair = solver.theta_of(g.all() & ~pair);
    t.without_closed = solver.theta_of(g.all() & ~(g.closed_neighbors(x) | g.closed_neighbors(y)));
    t.contracted = theta_graph(contract_edge(g, x, y), {.use_bounds = false});
    return t;
}

CheckOutcome bound_entries(const Graph& g, const std::string& prefix)
{
    for (const auto& b : check_bounds(g)) {
        if (b.name.rfind(prefix, 0) == 0 && b.applicable && !b.pass)
            return fail(b.name, ": ", b.lhs, " > ", b.rhs);
    }
    return pass();
}

std::string edge_text(const Graph& g, int x, int y)
{
    return std::to_string(g.label(x)) + "-" + std::to_string(g.label(y));
}

const std::map<std::string, GraphCheck>& graph_checks()
{
    static const std::map<std::string, GraphCheck> checks = {
        {"prop17", [](const Graph& g, const CheckSettings&) {
             GraphThetaSolver solver(g, {.use_bounds = false});
             const int t = solver.theta();
             for (int u = 0; u < g.order(); ++u) {
                 if (!is_vertex_cover(g, g.closed_neighbors(u)))
                     continue;
                 const int without = solver.theta_of(g.all() & ~bit(static_cast<std::size_t>(u)));
                 if (t != without && t != 1)
                     return fail("N[", g.label(u), "] is a cover but theta = ", t, ", theta(G - u) = ", without);
             }
             return pass();
         }},
        {"prop19", [](const Graph& g, const CheckSettings&) {
             if (!g.has_edges())
                 return not_applicable("no edges");
             const int t = theta_graph(g, {.use_bounds = false});
             const bool cc = is_co_chordal(g);
             if ((t == 1) != cc)
                 return fail("theta = ", t, " but co-chordal = ", cc);
             return pass();
         }},
        {"lemma32", [](const Graph& g, const CheckSettings&) {
             GraphThetaSolver solver(g, {.use_bounds = false});
             const auto ind = independence_complex(g);
             for (auto [x, y] : g.edges()) {
                 const auto t = edge_thetas(solver, x, y);
                 if (t.without_closed + 1 > t.g)
                     return fail("edge ", edge_text(g, x, y), ": theta(G - N[e]) + 1 = ", t.without_closed + 1, " > theta = ", t.g);
                 const Mask rest = g.all() & ~(g.closed_neighbors(x) | g.closed_neighbors(y));
                 FaceSet rest_labels;
                 for_each_bit(rest, [&](std::size_t i) { rest_labels.push_back(g.label(static_cast<int>(i))); });
                 FaceSet pair{g.label(x), g.label(y)};
                 std::sort(pair.begin(), pair.end());
                 if (!is_join_decomposition(ind, {rest_labels, pair}))
                     return fail("edge ", edge_text(g, x, y), ": {G - N[e], e} is not a join decomposition");
             }
             return pass();
         }},
        {"prop33", [](const Graph& g, const CheckSettings&) {
             GraphThetaSolver solver(g, {.use_bounds = false});
             for (auto [x, y] : g.edges()) {
                 const auto t = edge_thetas(solver, x, y);
                 if (t.without_pair > t.g || t.g > t.without_pair + 1)
                     return fail("edge ", edge_text(g, x, y), ": theta = ", t.g, ", theta(G - {x,y}) = ", t.without_pair);
             }
             return pass();
         }},
        {"prop34", [](const Graph& g, const CheckSettings&) {
             GraphThetaSolver solver(g, {.use_bounds = false});
             for (auto [x, y] : g.edges()) {
                 const auto t = edge_thetas(solver, x, y);
                 if (t.without_pair > t.contracted || t.contracted > t.without_pair + 1)
                     return fail("edge ", edge_text(g, x, y), ": theta(G/e) = ", t.contracted, ", theta(G - {x,y}) = ", t.without_pair);
             }
             return pass();
         }},
        {"thm35", [](const Graph& g, const CheckSettings&) {
             GraphThetaSolver solver(g, {.use_bounds = false});
             for (auto [x, y] : g.edges()) {
                 const auto t = edge_thetas(solver, x, y);
                 if (t.contracted > t.g || t.g > t.contracted + 1)
                     return fail("edge ", edge_text(g, x, y), ": theta = ", t.g, ", theta(G/e) = ", t.contracted);
             }
             return pass();
         }},
        {"prop36", [](const Graph& g, const CheckSettings&) { return bound_entries(g, "prop36"); }},
        {"thm40", [](const Graph& g, const CheckSettings&) { return bound_entries(g, "thm40"); }},
        {"thm41", [](const Graph& g, const CheckSettings&) { return bound_entries(g, "thm41"); }},
        {"thm43", [](const Graph& g, const CheckSettings&) {
             if (!is_claw_free(g))
                 return not_applicable("contains a claw");
             return bound_entries(g, "thm43");
         }},
        {"thm46", [](const Graph& g, const CheckSettings&) {
             if (!is_2k2_free(g) || g.order() == 0)
                 return not_applicable("contains an induced 2K2 or is empty");
             return bound_entries(g, "thm46");
         }},
        {"cor37", [](const Graph& g, const CheckSettings&) {
             const auto m = dominating_induced_matching(g);
             if (!m)
                 return not_applicable("no dominating induced matching");
             if (!is_valid_matching(g, *m))
                 return fail("reported dominating induced matching is invalid");
             const int t = theta_graph(g, {.use_bounds = false});
             const int im = induced_matching_number(g);
             if (t != im)
                 return fail("dominating induced matching present but theta = ", t, ", im = ", im);
             return pass();
         }},
        {"prop47", [](const Graph& g, const CheckSettings&) {
             for (int x = 0; x < g.order(); ++x) {
                 for (int y = 0; y < g.order(); ++y) {
                     if (x == y || g.degree(y) < 2 || !is_subset(g.closed_neighbors(x), g.closed_neighbors(y)))
                         continue;
                     GraphThetaSolver solver(g, {.use_bounds = false});
                     if (solver.is_theta_prime(g.all()))
                         return fail("N[", g.label(x), "] within N[", g.label(y), "] yet G is theta-prime");
                     return pass();
                 }
             }
             return not_applicable("no nested closed neighbourhoods");
         }},
        {"cor48", [](const Graph& g, const CheckSettings& s) {
             if (static_cast<std::size_t>(g.order()) > s.subset_cap)
                 return not_applicable("order exceeds the subset cap");
             GraphThetaSolver solver(g, {.use_bounds = false});
             if (!is_strongly_theta_prime(solver, g.all()))
                 return not_applicable("not strongly theta-prime");
             const auto seq = strongly_theta_prime_sequence(g);
             if (!seq || static_cast<int>(seq->size()) != solver.theta())
                 return fail("strong theta-prime sequence length differs from theta = ", solver.theta());
             for (Mask set = 0; set <= g.all(); ++set) {
                 if (is_independent(g, set)) {
                     Mask closed = 0;
                     for_each_bit(set, [&](std::size_t v) { closed |= g.closed_neighbors(static_cast<int>(v)); });
                     if (!is_strongly_theta_prime(solver, g.all() & ~closed))
                         return fail("G - N[S] is not strongly theta-prime for an independent S of size ", popcount(set));
                 }
                 if (set == g.all())
                     break;
             }
             return pass();
         }},
        {"lemma49", [](const Graph& g, const CheckSettings&) {
             if (!is_strongly_theta_prime(g))
                 return not_applicable("not strongly theta-prime");
             if (!is_1_well_covered(g))
                 return fail("strongly theta-prime but not 1-well-covered");
             return pass();
         }},
        {"cor50", [](const Graph& g, const CheckSettings&) {
             const bool strong = is_strongly_theta_prime(g);
             const bool wpm = is_weak_pseudo_manifold(independence_complex(g));
             if (strong && !wpm)
                 return fail("strongly theta-prime but Ind(G) is not a weak pseudo-manifold");
             if (wpm) {
                 const int t = theta_graph(g, {.use_bounds = false});
                 if (t != alpha(g))
                     return fail("Ind(G) is a weak pseudo-manifold but theta = ", t, ", alpha = ", alpha(g));
             }
             if (!strong && !wpm)
                 return not_applicable("neither strongly theta-prime nor a weak pseudo-manifold");
             return pass();
         }},
    };
    return checks;
}

} // namespace

CheckOutcome check_theorem(const std::string& id, const Instance& instance, const CheckSettings& settings)
{
    const TheoremInfo* info = find_theorem(id);
    if (info == nullptr)
        throw InputError("unknown theorem id '" + id + "'");
    if (info->domain == Domain::kGraph) {
        const auto* g = std::get_if<Graph>(&instance.object);
        if (g == nullptr)
            return not_applicable("graph theorem on a complex");
        return graph_checks().at(id)(*g, settings);
    }
    const SimplicialComplex x = std::holds_alternative<Graph>(instance.object)
                                    ? independence_complex(std::get<Graph>(instance.object))
                                    : std::get<SimplicialComplex>(instance.object);
    ComplexValues values(settings);
    return complex_checks().at(id)(x, instance, values, settings);
}

std::string TheoremCheck::status() const
{
    if (!failures.empty())
        return "FAIL";
    return inconclusive == 0 ? "PASS" : "INCONCLUSIVE";
}

std::vector<std::filesystem::path> write_counterexample(const std::filesystem::path& dir, const std::string& theorem_id,
                                                        const Instance& instance, const std::string& detail)
{
    std::filesystem::create_directories(dir);
    std::string stem = theorem_id + "_" + instance.id;
    std::replace_if(stem.begin(), stem.end(), [](char c) { return c == ':' || c == ',' || c == '@' || c == '/'; }, '_');
    const std::string header = "# theorem: " + theorem_id + "\n# instance: " + instance.id + "\n# detail: " + detail + "\n";
    std::vector<std::filesystem::path> files;
    if (const auto* g = std::get_if<Graph>(&instance.object)) {
        files.push_back(dir / (stem + ".graph"));
        write_text_file(files.back(), header + write_graph(*g));
    } else {
        files.push_back(dir / (stem + ".cplx"));
        write_text_file(files.back(), header + write_complex(std::get<SimplicialComplex>(instance.object)));
    }
    if (instance.partner) {
        files.push_back(dir / (stem + "_partner.cplx"));
        write_text_file(files.back(), header + write_complex(*instance.partner));
    }
    return files;
}

TheoremCheck run_theorem_check(const std::string& id, const std::vector<Instance>& instances, const RunOptions& options)
{
    if (find_theorem(id) == nullptr)
        throw InputError("unknown theorem id '" + id + "'");
    std::vector<CheckOutcome> outcomes(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++)
            outcomes[i] = check_theorem(id, instances[i], options.settings);
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(instances.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    TheoremCheck out;
    out.theorem_id = id;
    out.instance_count = instances.size();
    out.seed = options.seed;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& o = outcomes[i];
        if (o.status != CheckStatus::kNotApplicable)
            ++out.applicable;
        if (o.status == CheckStatus::kInconclusive)
            ++out.inconclusive;
        if (o.status == CheckStatus::kFail) {
            Counterexample ce{instances[i].id, o.detail, {}};
            if (options.counterexample_dir)
                ce.files = write_counterexample(*options.counterexample_dir, id, instances[i], o.detail);
            out.failures.push_back(std::move(ce));
        }
    }
    return out;
}

} // namespace thetalab
