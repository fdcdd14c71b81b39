#pragma once

#include "affvar/decoder.hpp"

#include <map>
#include <optional>

namespace affvar {

struct SimulationOptions {
    double erasure_prob = 0.0;
    double error_prob = 0.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 1;
    /// When set, exactly this many erasures / errors are placed, at uniformly random positions.
    std::optional<std::size_t> exact_erasures;
    std::optional<std::size_t> exact_errors;
    bool keep_rows = false;
};

struct TrialRow {
    std::uint64_t trial = 0;
    std::size_t u = 0;
    std::size_t t = 0;
    std::string status;
};

struct SimulationReport {
    SimulationOptions options;
    std::uint64_t successes = 0;
    std::map<std::string, std::uint64_t> failures; // by status
    /// Successes whose output fails the codeword check. The decoder guarantees this stays 0.
    std::uint64_t undetected = 0;
    /// Successes that returned a codeword other than the transmitted one.
    std::uint64_t miscorrections = 0;
    /// Miscorrections where the output is not strictly closer to the received word than the transmitted codeword.
    std::uint64_t unjustified_miscorrections = 0;
    OpCounter ops;
    std::vector<TrialRow> rows;

    std::uint64_t failure_count() const;
};

/// Runs `trials` transmissions of random systematic codewords through a q-ary symmetric channel
/// with erasures. Trial i draws from std::mt19937_64 seeded with seed + i.
SimulationReport simulate(const Code& code, const SimulationOptions& options);

std::string format_simulation(const SimulationReport& report);
std::string simulation_csv(const SimulationReport& report);

/// Op counts of one decoder configuration averaged over trials, with the per-step bounds
/// n N q^N, d n^2, n^2 N, d n^2, n q^N, n N q^N, n (d = largest Groebner basis size).
struct BenchRow {
    std::size_t n = 0;
    std::uint32_t q = 0;
    int nvars = 0;
    std::size_t d = 0;
    std::size_t u = 0;
    std::size_t t = 0;
    std::array<double, 7> measured{};
    std::array<double, 7> bound{};
    double total = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    double slope = 0;            // least-squares slope of log(total) against log(n)
    std::array<double, 7> max_ratio{};
};

/// Reed-Solomon family member of length n over F_{n+1}: Psi = F_q^x, Phi = the first n/3 points.
CodeSpec rs_family_spec(std::size_t n);

/// Decodes `trials` random words with u erasures and t errors, averaging per-step counts.
BenchRow bench_code(const Code& code, std::size_t u, std::size_t t, std::uint64_t trials, std::uint64_t seed);

/// Full-radius workload per size: u = r/3 erasures and t = (r - u)/2 errors, r = n - k.
BenchReport bench_rs(const std::vector<std::size_t>& sizes, std::uint64_t trials, std::uint64_t seed);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);
std::string format_bench(const BenchReport& report);

} // namespace affvar
