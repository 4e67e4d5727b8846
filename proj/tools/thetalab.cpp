// Command-line front end: invariant reports, generators and theorem checks.

#include "thetalab/errors.hpp"
#include "thetalab/families.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/report.hpp"
#include "thetalab/theta.hpp"
#include "thetalab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using namespace thetalab;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kSizeCap = 3, kChainViolation = 4 };

struct ReportFlags {
    std::string path;
    std::string format = "json";
    std::size_t max_vertices = 24;
    std::uint64_t budget = CollapseOptions{}.node_budget;
    std::vector<std::string> skip;
};

void add_report_flags(CLI::App* cmd, ReportFlags& f, bool with_skip)
{
    cmd->add_option("path", f.path, "input .cplx or .graph file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--max-vertices", f.max_vertices, "size cap for exhaustive invariants");
    cmd->add_option("--budget", f.budget, "collapse search node budget per k");
    if (with_skip)
        cmd->add_option("--skip", f.skip, "invariants to leave out")->delimiter(',');
}

ReportOptions report_options(const ReportFlags& f)
{
    ReportOptions opt;
    opt.max_vertices = f.max_vertices;
    opt.collapse.node_budget = f.budget;
    opt.skip.insert(f.skip.begin(), f.skip.end());
    if (const char* dir = std::getenv("THETA_LAB_CACHE_DIR"); dir != nullptr && *dir != '\0')
        opt.cache_dir = dir;
    return opt;
}

/// Runs a report restricted to `only` (all invariants when empty) and prints it.
int run_report(const ReportFlags& f, const std::set<std::string>& only)
{
    ReportOptions opt = report_options(f);
    if (!only.empty()) {
        for (const auto& name : report_invariant_names()) {
            if (only.count(name) == 0)
                opt.skip.insert(name);
        }
    }
    const LoadedObject object = load_object(f.path);
    InvariantReport report = compute_report(object, std::filesystem::path(f.path).filename().string(), opt);
    if (!only.empty()) {
        // Restricted commands do not list the invariants they never meant to compute.
        for (auto it = report.skipped.begin(); it != report.skipped.end();) {
            if (only.count(it.key()) == 0 && *it == "skipped by request")
                it = report.skipped.erase(it);
            else
                ++it;
        }
    }
    if (f.format == "tsv")
        std::cout << to_tsv(report);
    else
        std::cout << to_json(report).dump(2) << '\n';
    return kOk;
}

int run_collapse_k(const ReportFlags& f, int k)
{
    const LoadedObject object = load_object(f.path);
    const SimplicialComplex x = std::holds_alternative<Graph>(object) ? independence_complex(std::get<Graph>(object))
                                                                        : std::get<SimplicialComplex>(object);
    if (x.ground_size() > f.max_vertices)
        throw SizeError("collapse: input has " + std::to_string(x.ground_size()) + " vertices, cap is " +
                        std::to_string(f.max_vertices));
    const auto d = decide_k_collapsible(x, k, {.node_budget = f.budget});
    const char* verdict = d.verdict == Verdict::kYes ? "YES" : d.verdict == Verdict::kNo ? "NO" : "INCONCLUSIVE: budget";
    ordered_json steps = ordered_json::array();
    if (d.certificate) {
        for (const auto& s : d.certificate->steps)
            steps.push_back({s.free_face, s.facet});
    }
    if (f.format == "tsv") {
        std::cout << "k\t" << k << "\nverdict\t" << verdict << "\nnodes\t" << d.nodes << '\n';
    } else {
        ordered_json out{{"schema", kReportSchema}, {"tool_version", kToolVersion},
                         {"input_id", std::filesystem::path(f.path).filename().string()},
                         {"k", k}, {"verdict", verdict}, {"nodes", d.nodes}};
        if (d.certificate)
            out["certificate"] = steps;
        std::cout << out.dump(2) << '\n';
    }
    return d.verdict == Verdict::kInconclusive ? kSizeCap : kOk;
}

struct GenFlags {
    std::string family;
    std::optional<std::uint64_t> seed;
    std::string output;
};

int run_gen(const GenFlags& f)
{
    const LoadedObject object = generate(parse_family_spec(f.family, f.seed));
    const std::string text =
        std::holds_alternative<Graph>(object) ? write_graph(std::get<Graph>(object)) : write_complex(std::get<SimplicialComplex>(object));
    if (f.output.empty())
        std::cout << text;
    else
        write_text_file(f.output, text);
    return kOk;
}

struct VerifyFlags {
    std::string theorem;
    bool list = false;
    std::vector<std::string> families;
    std::vector<int> random;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::string out_dir;
    std::uint64_t budget = CollapseOptions{}.node_budget;
};

int run_list()
{
    for (const auto& t : theorem_catalogue())
        std::cout << t.id << '\t' << (t.domain == Domain::kGraph ? "graph" : "complex") << '\t' << t.statement << '\n';
    return kOk;
}

int run_verify(const VerifyFlags& f)
{
    if (f.list)
        return run_list();
    const TheoremInfo* info = find_theorem(f.theorem);
    if (info == nullptr) {
        std::cerr << "error: unknown theorem id '" << f.theorem << "' (see verify --list)\n";
        return kUsage;
    }
    std::vector<Instance> instances;
    for (const auto& spec : f.families)
        instances.push_back(family_instance(parse_family_spec(spec, f.seed)));
    if (!f.random.empty() || f.families.empty()) {
        RandomStreamOptions opt;
        if (!f.random.empty()) {
            opt.max_vertices = f.random.at(0);
            opt.count = f.random.at(1);
        }
        opt.seed = f.seed;
        auto stream = random_instances(info->domain, opt);
        instances.insert(instances.end(), std::make_move_iterator(stream.begin()), std::make_move_iterator(stream.end()));
    }
    RunOptions run;
    run.jobs = f.jobs;
    run.seed = f.seed;
    run.settings.collapse.node_budget = f.budget;
    if (!f.out_dir.empty())
        run.counterexample_dir = f.out_dir;
    const TheoremCheck check = run_theorem_check(f.theorem, instances, run);

    ordered_json failures = ordered_json::array();
    for (const auto& c : check.failures) {
        ordered_json files = ordered_json::array();
        for (const auto& p : c.files)
            files.push_back(p.string());
        failures.push_back({{"instance", c.instance_id}, {"detail", c.detail}, {"files", files}});
    }
    ordered_json out{{"schema", kReportSchema},
                     {"tool_version", kToolVersion},
                     {"theorem_id", check.theorem_id},
                     {"statement", info->statement},
                     {"status", check.status()},
                     {"instance_count", check.instance_count},
                     {"applicable", check.applicable},
                     {"inconclusive", check.inconclusive},
                     {"seed", f.seed},
                     {"failures", failures}};
    std::cout << out.dump(2) << '\n';
    return check.passed() ? kOk : kCheckFailed;
}

struct GapFlags {
    std::vector<std::string> families;
    std::vector<int> random;
    std::uint64_t seed = 1;
    std::uint64_t budget = CollapseOptions{}.node_budget;
    std::string out;
};

int run_gap_search(const GapFlags& f)
{
    std::vector<Instance> pool;
    for (const auto& spec : f.families)
        pool.push_back(family_instance(parse_family_spec(spec, f.seed)));
    if (!f.random.empty()) {
        RandomStreamOptions opt{.max_vertices = f.random.at(0), .count = f.random.at(1), .seed = f.seed};
        auto stream = random_complex_instances(opt);
        pool.insert(pool.end(), std::make_move_iterator(stream.begin()), std::make_move_iterator(stream.end()));
    }
    ordered_json out{{"schema", kReportSchema}, {"tool_version", kToolVersion}, {"seed", f.seed}};
    if (f.budget == 0)
        pool.clear();
    int best_gap = -1;
    std::size_t examined = 0;
    std::size_t inconclusive = 0;
    std::optional<Instance> best;
    ordered_json best_values;
    for (const auto& inst : pool) {
        const SimplicialComplex x = std::holds_alternative<Graph>(inst.object) ? independence_complex(std::get<Graph>(inst.object))
                                                                                 : std::get<SimplicialComplex>(inst.object);
        const auto c = collapsibility(x, 0, {.node_budget = f.budget});
        ++examined;
        if (!c.exact) {
            ++inconclusive;
            continue;
        }
        const int t = theta(x);
        if (t - c.value > best_gap) {
            best_gap = t - c.value;
            best = inst;
            best_values = {{"theta", t}, {"collapsibility", c.value}};
        }
    }
    out["examined"] = examined;
    out["inconclusive"] = inconclusive;
    if (best) {
        out["max_gap"] = best_gap;
        out["witness"] = best->id;
        out["values"] = best_values;
        if (!f.out.empty()) {
            const SimplicialComplex x = std::holds_alternative<Graph>(best->object) ? independence_complex(std::get<Graph>(best->object))
                                                                                      : std::get<SimplicialComplex>(best->object);
            write_text_file(f.out, "# gap witness: " + best->id + "\n" + write_complex(x));
            out["witness_file"] = f.out;
        }
    } else {
        out["max_gap"] = nullptr;
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Theta-number, collapsibility and Leray numbers of simplicial complexes and graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    ReportFlags inv_flags, theta_flags, collapse_flags, leray_flags;
    std::optional<int> collapse_k;
    auto* inv = app.add_subcommand("invariants", "report every feasible invariant of a complex or graph");
    add_report_flags(inv, inv_flags, true);
    auto* th = app.add_subcommand("theta", "theta-number with a prime-sequence witness");
    add_report_flags(th, theta_flags, false);
    auto* col = app.add_subcommand("collapse", "collapsibility number, or a k-collapsibility decision with --k");
    add_report_flags(col, collapse_flags, false);
    col->add_option("--k", collapse_k, "decide k-collapsibility only")->check(CLI::NonNegativeNumber);
    auto* ler = app.add_subcommand("leray", "Leray number with a homology witness");
    add_report_flags(ler, leray_flags, false);

    GenFlags gen_flags;
    auto* gen = app.add_subcommand("gen", "write a named object as .cplx or .graph");
    std::string families;
    for (const auto& name : family_names())
        families += (families.empty() ? "" : ", ") + name;
    gen->add_option("family", gen_flags.family, "name or name:p1,p2,... (one of " + families + ")")->required();
    gen->add_option("--seed", gen_flags.seed, "seed for random families");
    gen->add_option("-o,--output", gen_flags.output, "output file (stdout when absent)");

    VerifyFlags verify_flags;
    auto* ver = app.add_subcommand("verify", "check a theorem over a family or a seeded random stream");
    ver->add_option("theorem", verify_flags.theorem, "theorem id (see --list)");
    ver->add_flag("--list", verify_flags.list, "list theorem ids");
    ver->add_option("--family", verify_flags.families, "family instance, repeatable");
    ver->add_option("--random", verify_flags.random, "max vertices and instance count")->expected(2);
    ver->add_option("--seed", verify_flags.seed, "stream seed");
    ver->add_option("--jobs", verify_flags.jobs, "worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--out-dir", verify_flags.out_dir, "directory for counterexample files");
    ver->add_option("--budget", verify_flags.budget, "collapse search node budget per k");

    GapFlags gap_flags;
    auto* gap = app.add_subcommand("gap-search", "look for a large theta minus collapsibility gap");
    gap->add_option("--family", gap_flags.families, "family instance in the pool, repeatable");
    gap->add_option("--random", gap_flags.random, "max vertices and random complex count")->expected(2);
    gap->add_option("--seed", gap_flags.seed, "stream seed");
    gap->add_option("--budget", gap_flags.budget, "collapse search node budget per k (0: examine nothing)");
    gap->add_option("--out", gap_flags.out, "file for the best witness complex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*inv)
            return run_report(inv_flags, {});
        if (*th)
            return run_report(theta_flags, {"theta"});
        if (*col)
            return collapse_k ? run_collapse_k(collapse_flags, *collapse_k) : run_report(collapse_flags, {"collapsibility"});
        if (*ler)
            return run_report(leray_flags, {"leray"});
        if (*gen)
            return run_gen(gen_flags);
        if (*ver) {
            if (!verify_flags.list && verify_flags.theorem.empty()) {
                std::cerr << "error: verify needs a theorem id or --list\n";
                return kUsage;
            }
            return run_verify(verify_flags);
        }
        if (*gap)
            return run_gap_search(gap_flags);
    } catch (const ChainViolation& e) {
        std::cerr << "error: " << e.what() << '\n' << e.dump() << '\n';
        return kChainViolation;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSizeCap;
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSizeCap;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}
