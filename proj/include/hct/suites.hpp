#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hct/catalog.hpp"

namespace hct {

struct SuiteOptions {
    std::uint64_t seed = 42;
    std::optional<double> tol;  // per-suite default when unset
};

std::vector<std::string> suite_names();

// Runs a named verification suite. Records come back in a fixed order whatever the worker count.
std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& opt = {});

std::vector<CheckRecord> algebra_suite(const SuiteOptions& opt = {});
std::vector<CheckRecord> catalog_suite(const SuiteOptions& opt = {});
std::vector<CheckRecord> rules_suite(const SuiteOptions& opt = {});
std::vector<CheckRecord> mellin_suite(const SuiteOptions& opt = {});

// A skipped record is not a failure.
bool suite_passed(const std::vector<CheckRecord>& recs);

}  // namespace hct
