#pragma once

// Workload generation, instrumented matching, and the benchmark harness
// behind the CLI.  Generation is deterministic: all randomness comes from
// mt19937_64 plus rejection sampling, so equal seeds give byte-identical
// data and comparison counts on every platform.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "opmatch/oppm1d.hpp"
#include "opmatch/oppm2d.hpp"

namespace opmatch {

enum class Algo { duel, kmp, naive, reduction2d };

const char* algo_name(Algo a);
Algo algo_from_name(const std::string& name);  // throws on unknown names

struct Workload {
    int dim = 1;  // 1 or 2
    long n = 0;   // text length (1D) or side (2D)
    long m = 0;   // pattern length or side
    long sigma = 1000;
    int trials = 1;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument on bad parameters.  m > n is rejected
    /// only for matching runs; generation allows it.
    void validate(bool for_matching = true) const;
};

/// Uniform draw from [0, bound) by rejection; stable across platforms.
std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t bound);

/// Characters uniform in [1, sigma].
Sequence gen_sequence(long n, long sigma, std::uint64_t seed);
Matrix gen_matrix(long w, long h, long sigma, std::uint64_t seed);

/// Text then pattern drawn from one stream seeded with seed + trial.
struct TrialData1D {
    Sequence text;
    Sequence pattern;
};
struct TrialData2D {
    Matrix text;
    Matrix pattern;
};
TrialData1D gen_trial_1d(const Workload& w, int trial);
TrialData2D gen_trial_2d(const Workload& w, int trial);

struct MatchReport {
    std::vector<int> positions;        // 1D
    std::vector<Pos2> positions2d;     // 2D
    std::uint64_t time_ns = 0;
    MatchStats stats;
};

MatchReport run_match_1d(Algo algo, const Sequence& text, const Sequence& pattern);
MatchReport run_match_2d(Algo algo, const Matrix& text, const Matrix& pattern);

struct BenchRow {
    Algo algo;
    int dim;
    long n, m, sigma;
    int trial;
    std::uint64_t seed;  // per-trial sub-seed
    std::uint64_t time_ns;
    std::uint64_t comparisons;
};

struct BenchConfig {
    std::vector<Algo> algos;
    int dim = 1;
    std::vector<std::pair<long, long>> sizes;  // (n, m)
    long sigma = 1000;
    int trials = 50;
    std::uint64_t seed = 1;
};

/// The two grids used by the experiments: text-length scaling at fixed m,
/// and pattern-length scaling at fixed n.  `small` caps n at 1e5 with 10
/// repetitions.
BenchConfig paper_grid(bool small);

std::vector<BenchRow> run_bench(const BenchConfig& cfg);

extern const char* const kCsvHeader;  // algo,dim,n,m,sigma,trial,seed,time_ns,comparisons
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

struct SummaryRow {
    std::string algo;
    int dim;
    long n, m, sigma;
    int trials;
    double mean_time_ns;
    double mean_comparisons;
};

/// Group benchmark CSV rows by (algo, dim, n, m, sigma) and average.
std::vector<SummaryRow> summarize_csv(std::istream& in);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace opmatch
