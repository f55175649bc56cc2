#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace zsr {

enum class Scale { kSmall, kFull };

struct SuiteOptions {
    Scale scale = Scale::kSmall;
    std::uint64_t seed = 0;
    std::size_t jobs = 0;  // 0 = hardware concurrency
};

struct BatchResult {
    std::string label;
    std::size_t instances = 0;
    std::size_t failures = 0;
    double seconds = 0;
};

struct VerificationReport {
    std::string suite;
    std::size_t instances = 0;
    std::vector<std::string> failures;  // in instance order
    std::vector<std::string> notes;
    std::vector<BatchResult> batches;
    double seconds = 0;

    bool passed() const { return failures.empty(); }
};

/// egz, olson, hall, constrained, cd, fractional, surjectivity, homology, degree.
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

/// Runs body(i) for i in [0, count) over `jobs` threads. Returned messages are
/// ordered by index; empty strings mean success.
std::vector<std::string> parallel_for(std::size_t count, std::size_t jobs,
                                      const std::function<std::string(std::size_t)>& body);

/// Generator for instance `index` of a sampled run, independent of scheduling.
std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t index);

}  // namespace zsr
