#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsg/semigroup.hpp"

namespace nsg {

using json = nlohmann::ordered_json;

enum class Status { match, mismatch, skipped_precondition };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// One checked grid point. A mismatch always carries both values.
struct VerificationRecord {
    std::string theorem;
    json params;
    json formula;
    json oracle;
    Status status = Status::match;
    std::optional<double> residual; // floating-point paths only
    std::string note;

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

/// Grid and run options for `run_verification`. Start from `defaults_for`.
struct SweepConfig {
    std::string theorem;
    i64 cases = 500;     // random corpus size
    i64 max_gen = 60;    // largest generator in the random corpus
    i64 d_min = 2;
    i64 d_max = 12;
    i64 ab_max = 60;     // bound on a, b for two-generator grids
    i64 a_min = 1;
    i64 a_max = 120;
    i64 k_max = 20;
    std::vector<i64> k_values{1, 2, 3, 5};
    i64 samples = 8;     // samples drawn per residue class
    i64 min_samples = 5;
    double tolerance = 1e-6;
    std::string format = "table";
    std::uint64_t seed = 20240101;
    int parallel = 1;
    bool inject_off_by_one = false;  // self-test: perturb every closed form by one
    bool report_noncoprime = false;  // ed2: also emit gcd(b, d) > 1 points, unasserted

    /// Throws precondition_error on an unknown theorem, empty ranges,
    /// non-positive tolerance or an unknown format.
    void validate() const;
};

const std::vector<std::string>& theorem_ids();

/// Grid sizes that complete well under a minute single-threaded.
SweepConfig defaults_for(const std::string& theorem);

struct VerificationRun {
    std::vector<VerificationRecord> records;
    i64 matches = 0;
    i64 mismatches = 0;
    i64 skipped = 0;

    int exit_code() const { return mismatches > 0 ? 1 : 0; }
};

/// Runs the grid for `config.theorem`. Records come back in grid order
/// regardless of `config.parallel`.
VerificationRun run_verification(const SweepConfig& config);

/// Seeded random semigroups with 2-4 generators drawn from [2, max_gen].
std::vector<NumericalSemigroup> random_corpus(std::uint64_t seed, i64 cases, i64 max_gen);

json to_json(const VerificationRecord& r);
VerificationRecord record_from_json(const json& j);
std::string csv_header();
std::string to_csv(const VerificationRecord& r);

} // namespace nsg
