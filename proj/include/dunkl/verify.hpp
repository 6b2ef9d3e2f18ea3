#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dunkl/invariants.hpp"

namespace dunkl {

struct VerifyOptions {
    std::string group_spec;  // empty = suite default
    int max_degree = -1;     // -1 = suite default
    int order = -1;          // truncation order where applicable
    uint64_t seed = 42;
};

struct VerifyFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string suite;
    size_t cases = 0;
    std::vector<VerifyFailure> failures;
    std::vector<std::string> notes;  // recorded values (ratios, scalars)

    bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

// Runs one named property suite. Unknown names throw std::domain_error.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opt);

// Runs several suites (independent; executed concurrently when asked) and
// returns the reports sorted by suite name.
std::vector<VerifyReport> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt,
                                     bool parallel = true);

// All canonical invariants of one weighted degree, sharing a single Gram
// matrix across the triangular solves.
std::vector<CanonicalInvariant> canonical_slice(uint32_t weight, const GeneratorSet& gens,
                                                const DunklContext& ctx);

}  // namespace dunkl
