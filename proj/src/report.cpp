#include "thetalab/report.hpp"

#include "thetalab/errors.hpp"
#include "thetalab/graph_invariants.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/theta.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

namespace thetalab {

using nlohmann::ordered_json;

const std::set<std::string>& report_invariant_names()
{
    static const std::set<std::string> names = {"dim",   "theta", "ccn", "collapsibility", "leray", "lew_k", "vertex_decomposable",
                                                "order", "edges", "alpha", "im", "min_m", "gamma"};
    return names;
}

namespace {

ordered_json face_json(const FaceSet& f)
{
    return ordered_json(f);
}

ordered_json edges_json(const Graph& g, const std::vector<Edge>& edges)
{
    ordered_json out = ordered_json::array();
    for (auto [u, v] : edges)
        out.push_back({g.label(u), g.label(v)});
    return out;
}

ordered_json mask_labels(const Graph& g, Mask m)
{
    ordered_json out = ordered_json::array();
    for_each_bit(m, [&](std::size_t v) { out.push_back(g.label(static_cast<int>(v))); });
    return out;
}

std::string hex(std::uint64_t v)
{
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << v;
    return out.str();
}

/// Exact values of one canonical object persisted as a JSON file.
class ValueCache {
public:
    ValueCache(const std::optional<std::filesystem::path>& dir, const CanonicalKey& key) : key_(key.to_string())
    {
        if (!dir)
            return;
        path_ = *dir / (hex(key.digest()) + ".json");
        std::ifstream in(*path_);
        if (!in)
            return;
        try {
            auto doc = ordered_json::parse(in);
            if (doc.value("key", std::string()) == key_)
                values_ = doc.at("values");
        } catch (const std::exception&) {
            // A damaged entry is recomputed and overwritten.
        }
    }

    const ordered_json* find(const std::string& name) const
    {
        auto it = values_.find(name);
        return it == values_.end() ? nullptr : &*it;
    }

    void store(const std::string& name, ordered_json entry)
    {
        if (!path_)
            return;
        values_[name] = std::move(entry);
        dirty_ = true;
    }

    void flush()
    {
        if (!path_ || !dirty_)
            return;
        std::filesystem::create_directories(path_->parent_path());
        const auto tmp = std::filesystem::path(path_->string() + ".tmp");
        {
            std::ofstream out(tmp);
            out << ordered_json{{"key", key_}, {"values", values_}}.dump();
        }
        std::filesystem::rename(tmp, *path_);
    }

private:
    std::string key_;
    std::optional<std::filesystem::path> path_;
    ordered_json values_ = ordered_json::object();
    bool dirty_ = false;
};

class ReportBuilder {
public:
    ReportBuilder(InvariantReport& report, const ReportOptions& options, ValueCache& cache)
        : report_(report), options_(options), cache_(cache)
    {
    }

    bool wanted(const std::string& name)
    {
        if (options_.skip.count(name) == 0)
            return true;
        report_.skipped[name] = "skipped by request";
        return false;
    }

    void require_size(const std::string& name, std::size_t size, std::size_t cap)
    {
        if (size > cap)
            throw SizeError(name + ": input has " + std::to_string(size) + " vertices, cap is " + std::to_string(cap) +
                            " (raise the cap or --skip " + name + ")");
    }

    /// Runs `compute` (returning {value, witness} or a null value for "no value")
    /// unless the cache already has the entry.
    void add(const std::string& name, const std::function<ordered_json()>& compute, bool cacheable = true)
    {
        const auto start = std::chrono::steady_clock::now();
        ordered_json entry;
        if (const ordered_json* hit = cacheable ? cache_.find(name) : nullptr) {
            entry = *hit;
        } else {
            entry = compute();
            if (cacheable && !entry.at("value").is_null())
                cache_.store(name, entry);
        }
        const auto stop = std::chrono::steady_clock::now();
        report_.timing_ms[name] = std::chrono::duration<double, std::milli>(stop - start).count();
        if (entry.at("value").is_null()) {
            report_.skipped[name] = entry.value("reason", std::string("unavailable"));
            return;
        }
        report_.invariants[name] = entry.at("value");
        if (entry.contains("witness") && !entry.at("witness").is_null())
            report_.witnesses[name] = entry.at("witness");
    }

private:
    InvariantReport& report_;
    const ReportOptions& options_;
    ValueCache& cache_;
};

ordered_json value_entry(const ordered_json& value, ordered_json witness = nullptr)
{
    return {{"value", value}, {"witness", std::move(witness)}};
}

ordered_json collapse_entry(const SimplicialComplex& x, int lower_bound, const CollapseOptions& options)
{
    const auto r = collapsibility(x, lower_bound, options);
    if (!r.exact)
        return {{"value", nullptr}, {"reason", "INCONCLUSIVE: budget (C >= " + std::to_string(r.value) + ")"}};
    ordered_json steps = ordered_json::array();
    if (r.certificate) {
        for (const auto& s : r.certificate->steps)
            steps.push_back({face_json(s.free_face), face_json(s.facet)});
    }
    return value_entry(r.value, {{"k", r.value}, {"steps", steps}});
}

ordered_json leray_entry(const SimplicialComplex& x, std::size_t cap)
{
    const auto r = leray(x, cap);
    ordered_json witness = nullptr;
    if (r.witness)
        witness = {{"subset", face_json(r.witness->subset)}, {"dimension", r.witness->dimension}};
    return value_entry(r.value, witness);
}

/// ℒ, 𝒞 in that order; 𝒞 starts its search at ℒ when ℒ is known.
void add_topological(ReportBuilder& b, InvariantReport& report, const SimplicialComplex& x, const ReportOptions& options)
{
    if (b.wanted("leray")) {
        b.require_size("leray", x.ground_size(), options.leray_cap);
        b.add("leray", [&] { return leray_entry(x, options.leray_cap); });
    }
    if (b.wanted("collapsibility")) {
        b.require_size("collapsibility", x.ground_size(), options.max_vertices);
        const int lower = report.invariants.contains("leray") ? report.invariants["leray"].get<int>() : 0;
        b.add("collapsibility", [&] { return collapse_entry(x, lower, options.collapse); });
    }
}

void complex_report(InvariantReport& report, const SimplicialComplex& x, const ReportOptions& options)
{
    ValueCache cache(options.cache_dir, x.canonical_key());
    ReportBuilder b(report, options, cache);
    if (b.wanted("dim"))
        b.add("dim", [&] { return value_entry(x.dimension()); }, false);
    if (b.wanted("theta")) {
        b.require_size("theta", x.ground_size(), options.max_vertices);
        b.add("theta", [&] {
            const int t = theta(x);
            ordered_json primes = ordered_json::array();
            for (const auto& step : theta_prime_reduction(x, x.ground()).steps) {
                if (step.decision == ReductionDecision::kPrime)
                    primes.push_back(step.vertex);
            }
            return value_entry(t, {{"prime_sequence", primes}});
        });
    }
    if (b.wanted("ccn")) {
        b.require_size("ccn", x.ground_size(), options.max_vertices);
        b.add("ccn", [&] {
            const auto cc = minimum_circuit_cover(x);
            return value_entry(cc.value, {{"cover", face_json(cc.cover)}});
        });
    }
    add_topological(b, report, x, options);
    if (b.wanted("lew_k")) {
        b.require_size("lew_k", x.ground_size(), options.max_vertices);
        b.add("lew_k", [&] {
            const auto lb = lew_bound(x);
            ordered_json facets = ordered_json::array();
            for (const auto& f : lb.witness.facets)
                facets.push_back(face_json(f));
            return value_entry(lb.k, {{"vertices", lb.witness.vertices}, {"facets", facets}});
        });
    }
    if (b.wanted("vertex_decomposable")) {
        b.require_size("vertex_decomposable", x.ground_size(), options.max_vertices);
        b.add("vertex_decomposable", [&] {
            const auto trace = vertex_decomposition(x);
            ordered_json witness = nullptr;
            if (trace)
                witness = {{"shedding", *trace}};
            return value_entry(trace.has_value(), witness);
        });
    }
    cache.flush();
}

void graph_report(InvariantReport& report, const Graph& g, const ReportOptions& options)
{
    const SimplicialComplex ind = independence_complex(g);
    ValueCache cache(options.cache_dir, ind.canonical_key());
    ReportBuilder b(report, options, cache);
    const auto order = static_cast<std::size_t>(g.order());
    if (b.wanted("order"))
        b.add("order", [&] { return value_entry(g.order()); }, false);
    if (b.wanted("edges"))
        b.add("edges", [&] { return value_entry(g.edge_count()); }, false);
    if (b.wanted("theta")) {
        b.require_size("theta", order, options.max_vertices);
        b.add("theta", [&] { return value_entry(theta_graph(g)); });
    }
    if (b.wanted("alpha")) {
        b.require_size("alpha", order, options.max_vertices);
        b.add("alpha", [&] {
            const Mask m = maximum_independent_set(g, g.all());
            return value_entry(popcount(m), {{"set", mask_labels(g, m)}});
        });
    }
    if (b.wanted("im")) {
        b.require_size("im", order, options.max_vertices);
        b.add("im", [&] {
            const auto r = induced_matching(g);
            return value_entry(r.value, {{"edges", edges_json(g, r.witness.edges)}});
        });
    }
    if (b.wanted("min_m")) {
        b.require_size("min_m", order, options.max_vertices);
        b.add("min_m", [&] {
            const auto r = min_maximal_matching(g);
            return value_entry(r.value, {{"edges", edges_json(g, r.witness.edges)}});
        });
    }
    if (b.wanted("ccn")) {
        b.require_size("ccn", order, options.max_vertices);
        b.add("ccn", [&] {
            const auto cc = min_circuit_cover(g);
            return value_entry(cc.value, {{"cover", mask_labels(g, cc.cover)}});
        });
    }
    if (b.wanted("gamma")) {
        b.require_size("gamma", order, options.max_vertices);
        b.add("gamma", [&] {
            if (!g.has_edges())
                return ordered_json{{"value", nullptr}, {"reason", "undefined: no edges"}};
            return value_entry(privacy_degree(g));
        });
    }
    add_topological(b, report, ind, options);
    cache.flush();
}

} // namespace

std::optional<std::string> chain_violation(const InvariantReport& report)
{
    static const char* chain[] = {"leray", "collapsibility", "theta", "ccn"};
    const auto& inv = report.invariants;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (!inv.contains(chain[i]) || !inv.contains(chain[j]))
                continue;
            const int a = inv[chain[i]].get<int>();
            const int b = inv[chain[j]].get<int>();
            if (a > b) {
                return std::string(chain[i]) + " = " + std::to_string(a) + " exceeds " + chain[j] + " = " +
                       std::to_string(b);
            }
        }
    }
    return std::nullopt;
}

InvariantReport compute_report(const LoadedObject& object, const std::string& input_id, const ReportOptions& options)
{
    for (const auto& name : options.skip) {
        if (report_invariant_names().count(name) == 0)
            throw InputError("unknown invariant '" + name + "'");
    }
    InvariantReport report;
    report.input_id = input_id;
    if (const auto* g = std::get_if<Graph>(&object)) {
        report.kind = "GRAPH";
        graph_report(report, *g, options);
    } else {
        report.kind = "COMPLEX";
        complex_report(report, std::get<SimplicialComplex>(object), options);
    }
    if (auto broken = chain_violation(report))
        throw ChainViolation("invariant chain violated: " + *broken, to_json(report).dump(2));
    return report;
}

ordered_json to_json(const InvariantReport& report, bool with_timing)
{
    ordered_json out;
    out["schema"] = kReportSchema;
    out["tool_version"] = kToolVersion;
    out["input_id"] = report.input_id;
    out["kind"] = report.kind;
    out["invariants"] = report.invariants;
    out["skipped"] = report.skipped;
    out["witnesses"] = report.witnesses;
    if (with_timing)
        out["timing_ms"] = report.timing_ms;
    return out;
}

std::string to_tsv(const InvariantReport& report)
{
    std::ostringstream out;
    out << "input_id\t" << report.input_id << "\nkind\t" << report.kind << '\n';
    for (const auto& [name, value] : report.invariants.items())
        out << name << '\t' << (value.is_boolean() ? (value.get<bool>() ? "1" : "0") : value.dump()) << '\n';
    for (const auto& [name, reason] : report.skipped.items())
        out << name << '\t' << "NA" << '\n';
    return out.str();
}

} // namespace thetalab
