#pragma once

#include <cstdint>

#include "ta/json_io.hpp"

namespace ta::suite {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    Json details; // deterministic for a fixed seed
};

struct SuiteReport {
    std::uint64_t seed;
    std::vector<CriterionResult> criteria;
    bool pass;
};

/// Runs one of the numbered property suites (1..7) with a seed derived
/// from the master seed.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Runs all criteria, then re-runs the batch to verify the serialized
/// report is byte-identical (criterion 8).
SuiteReport run_suite(std::uint64_t seed);

Json suite_report_to_json(const SuiteReport& report);
/// The canonical serialized form compared for determinism.
std::string render_suite_report(const SuiteReport& report);

/// TENSORAXIOM_SEED, or the fallback when unset/invalid.
std::uint64_t seed_from_env(std::uint64_t fallback = 12345);

} // namespace ta::suite
