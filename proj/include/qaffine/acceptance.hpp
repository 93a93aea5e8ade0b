#pragma once
// The full verification run behind `verify all`: one record per criterion
// plus the records it was assembled from.

#include <cstdint>
#include <string>
#include <vector>

#include "qaffine/report.hpp"

namespace qaffine {

struct SuiteOptions {
    int height = 12;          // rank-2 catalog height
    int max_n = 6;            // rank bound for the imaginary-block tables
    long rmax = 6;
    int weyl_max_n = 5;
    std::uint64_t p = 0;      // 0 picks the default prime
    std::uint64_t seed = 1;
    int exact_height = 8;     // exact re-run of the catalog
    int exact_gram_height = 5;
};

struct SuiteReport {
    std::vector<CheckResult> criteria;  // "criterion.<k>.<name>", k = 1..9
    std::vector<CheckResult> parts;     // underlying records, sorted by id
};

SuiteReport acceptance_suite(const SuiteOptions& opt);

// {"checks": [{id, status, detail}, ...]} sorted by id.
std::string report_json(const std::vector<CheckResult>& records);

}  // namespace qaffine
