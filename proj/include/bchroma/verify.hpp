#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bchroma/bcolor.hpp"
#include "bchroma/graph.hpp"

namespace bchroma {

/// Every formula-style claim the harness can check, one identifier each.
enum class ClaimId {
    kProp12Complete,
    kProp12Path,
    kProp12Cycle,
    kProp12Bipartite,
    kJaco,
    kOrnated,
    kRasta,
    kChithra,
    kSunlet,
    kWheel,
    kSun,
    kHelm,
    kP3FromK1,
    kSetGraph,
    kSetGraphCliques,
    kEdgeSetStar,
    kEdgeSetBound,
    kEdgeJoint,
    kChithraDecomp,
    kJacoHopeComplete,
};

std::string to_string(ClaimId id);
std::optional<ClaimId> claim_from_string(const std::string& name);
const std::vector<ClaimId>& all_claims();

enum class ClaimStatus { kConfirmed, kRefuted, kUnsupported, kTimeout };

std::string to_string(ClaimStatus status);

/// One evaluated instance of a claim: the predicted value, the solver's
/// value, and the verdict. Instances whose hypotheses fail are UNSUPPORTED
/// (the claim promises nothing there); solver timeouts are TIMEOUT, never
/// silently treated as refutations.
struct ClaimResult {
    std::string claim;
    nlohmann::ordered_json params;
    long long formula = 0;
    std::optional<long long> solver;
    ClaimStatus status = ClaimStatus::kConfirmed;
    double seconds = 0.0;
    std::string notes;
};

struct ReportSummary {
    long long confirmed = 0;
    long long refuted = 0;
    long long unsupported = 0;
    long long timeout = 0;
};

struct Report {
    std::string suite;
    std::string version;
    std::vector<ClaimResult> results;  // sorted by (claim, params)

    ReportSummary summary() const;
};

/// Thrown when the exact solver and the exhaustive oracle disagree on an
/// instance with at most 9 vertices. This is an internal defect, not a
/// refutation, and aborts the suite.
class OracleMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SuiteConfig {
    std::vector<ClaimId> claims = all_claims();
    std::optional<int> max_n;   // cap instances whose n-style parameter exceeds this
    std::optional<int> exact_n; // keep only instances with this n-style parameter
    long long node_budget = 50'000'000;
    int workers = 1;
    bool deterministic = false;      // zero the seconds field for byte-stable output
    bool linked_definition = false;  // evaluate under the pairwise-linkage reading
};

struct EvalOptions {
    long long node_budget = 50'000'000;
    bool linked_definition = false;
};

/// Evaluates one claim instance. params must match an instance of the
/// claim's default grid, otherwise std::invalid_argument.
ClaimResult evaluate_claim(ClaimId id, const nlohmann::json& params, const EvalOptions& options = {});

/// Evaluates every grid instance of the configured claims. Every phi value
/// whose graph has at most 9 vertices is cross-checked against the
/// exhaustive oracle; a disagreement raises OracleMismatchError.
Report run_suite(const SuiteConfig& config);

enum class ReportFormat { kText, kJson };

std::string emit_report(const Report& report, ReportFormat format);

/// 0 when nothing is refuted or undecided, 10 with refutations present,
/// 20 with timeouts present (timeouts win when both occur).
int report_exit_code(const Report& report);

/// Every distinct graph the configured suite submits to the solver, labeled.
std::vector<std::pair<std::string, Graph>> suite_target_graphs(const SuiteConfig& config);

/// Seeded Erdos-Renyi sample: each pair independently an edge with
/// probability p. Identical (n, p, seed) give identical graphs everywhere.
Graph random_graph(int n, double p, uint32_t seed);

}  // namespace bchroma
