#pragma once

#include "thetalab/collapse.hpp"
#include "thetalab/io.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace thetalab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct ReportOptions {
    /// Largest ground (complexes) or order (graphs) for θ and the graph invariants.
    std::size_t max_vertices = 24;
    std::size_t leray_cap = 18;
    CollapseOptions collapse;
    /// Invariant names left out on request.
    std::set<std::string> skip;
    /// Persistent cache of exact values, keyed by canonical form; unset disables it.
    std::optional<std::filesystem::path> cache_dir;
};

/// Names accepted by ReportOptions::skip.
const std::set<std::string>& report_invariant_names();

struct InvariantReport {
    std::string input_id;
    /// "COMPLEX" or "GRAPH".
    std::string kind;
    nlohmann::ordered_json invariants = nlohmann::ordered_json::object();
    /// Invariant name to the reason it has no value.
    nlohmann::ordered_json skipped = nlohmann::ordered_json::object();
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    nlohmann::ordered_json timing_ms = nlohmann::ordered_json::object();
};

/// Raised when a finished report breaks ℒ ≤ 𝒞 ≤ θ ≤ ccn.
class ChainViolation : public std::logic_error {
public:
    ChainViolation(const std::string& what, std::string dump) : std::logic_error(what), dump_(std::move(dump)) {}
    const std::string& dump() const { return dump_; }

private:
    std::string dump_;
};

/// Computes every requested invariant. Throws SizeError when a requested
/// invariant is over its cap (naming it), ChainViolation on a broken chain.
InvariantReport compute_report(const LoadedObject& object, const std::string& input_id, const ReportOptions& options = {});

/// The first broken link of ℒ ≤ 𝒞 ≤ θ ≤ ccn among the values present.
std::optional<std::string> chain_violation(const InvariantReport& report);

nlohmann::ordered_json to_json(const InvariantReport& report, bool with_timing = true);
/// Flat name<TAB>value lines.
std::string to_tsv(const InvariantReport& report);

} // namespace thetalab
