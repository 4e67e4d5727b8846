#pragma once

#include "thetalab/collapse.hpp"
#include "thetalab/families.hpp"
#include "thetalab/io.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace thetalab {

enum class Domain { kComplex, kGraph };

struct TheoremInfo {
    std::string id;
    Domain domain;
    std::string statement;
};

/// Every checkable result, in catalogue order.
const std::vector<TheoremInfo>& theorem_catalogue();
/// nullptr for unknown ids.
const TheoremInfo* find_theorem(const std::string& id);

struct Instance {
    std::string id;
    LoadedObject object;
    /// Second operand for the join check.
    std::optional<SimplicialComplex> partner;
};

struct RandomStreamOptions {
    int max_vertices = 8;
    int count = 100;
    std::uint64_t seed = 1;
};

/// Graphs on 1..max_vertices vertices with edge probability 1/4, 1/2 or 3/4.
std::vector<Instance> random_graph_instances(const RandomStreamOptions& opt);
/// Complexes on 1..max_vertices ground vertices with 1..6 random faces of size
/// at most 4, each with a random partner on a disjoint ground.
std::vector<Instance> random_complex_instances(const RandomStreamOptions& opt);
/// The instance stream a theorem is checked on by default.
std::vector<Instance> random_instances(Domain domain, const RandomStreamOptions& opt);

Instance family_instance(const FamilySpec& spec);

enum class CheckStatus { kPass, kFail, kNotApplicable, kInconclusive };

struct CheckOutcome {
    CheckStatus status = CheckStatus::kPass;
    std::string detail;
};

struct CheckSettings {
    CollapseOptions collapse;
    std::size_t leray_cap = 18;
    /// Largest ground for checks that enumerate every vertex subset.
    std::size_t subset_cap = 12;
    /// Largest ground for the decomposition check.
    std::size_t decomposition_cap = 10;
};

/// One theorem on one instance. Graph theorems are not applicable to complexes;
/// complex theorems run on Ind(G) for a graph.
CheckOutcome check_theorem(const std::string& id, const Instance& instance, const CheckSettings& settings = {});

struct Counterexample {
    std::string instance_id;
    std::string detail;
    std::vector<std::filesystem::path> files;
};

struct TheoremCheck {
    std::string theorem_id;
    std::size_t instance_count = 0;
    std::size_t applicable = 0;
    std::size_t inconclusive = 0;
    std::optional<std::uint64_t> seed;
    std::vector<Counterexample> failures;

    bool passed() const { return failures.empty() && inconclusive == 0; }
    std::string status() const;
};

struct RunOptions {
    CheckSettings settings;
    unsigned jobs = 1;
    /// Failing instances are written here when set.
    std::optional<std::filesystem::path> counterexample_dir;
    std::optional<std::uint64_t> seed;
};

/// Checks every instance (in parallel when jobs > 1); failures are listed in instance order.
TheoremCheck run_theorem_check(const std::string& id, const std::vector<Instance>& instances, const RunOptions& options = {});

/// Writes the instance (and its partner) with the theorem and detail as comments.
std::vector<std::filesystem::path> write_counterexample(const std::filesystem::path& dir, const std::string& theorem_id,
                                                        const Instance& instance, const std::string& detail);

} // namespace thetalab
