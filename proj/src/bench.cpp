#include "opmatch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace opmatch {

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::duel: return "duel";
        case Algo::kmp: return "kmp";
        case Algo::naive: return "naive";
        case Algo::reduction2d: return "reduction2d";
    }
    return "?";
}

Algo algo_from_name(const std::string& name) {
    if (name == "duel") return Algo::duel;
    if (name == "kmp") return Algo::kmp;
    if (name == "naive") return Algo::naive;
    if (name == "reduction2d") return Algo::reduction2d;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

void Workload::validate(bool for_matching) const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("dim must be 1 or 2");
    if (n < 1 || m < 1) throw std::invalid_argument("sizes must be >= 1");
    if (for_matching && m > n)
        throw std::invalid_argument("pattern size m must not exceed n");
    if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
}

std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do { r = g(); } while (r >= limit);
    return r % bound;
}

namespace {

Sequence draw_sequence(std::mt19937_64& g, long n, long sigma) {
    Sequence s(n);
    for (auto& v : s) v = 1 + static_cast<Value>(uniform_below(g, sigma));
    return s;
}

Matrix draw_matrix(std::mt19937_64& g, long w, long h, long sigma) {
    Matrix m(static_cast<int>(w), static_cast<int>(h));
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= w; ++x)
            m.at(x, y) = 1 + static_cast<Value>(uniform_below(g, sigma));
    return m;
}

}  // namespace

Sequence gen_sequence(long n, long sigma, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    return draw_sequence(g, n, sigma);
}

Matrix gen_matrix(long w, long h, long sigma, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    return draw_matrix(g, w, h, sigma);
}

TrialData1D gen_trial_1d(const Workload& w, int trial) {
    std::mt19937_64 g(w.seed + static_cast<std::uint64_t>(trial));
    TrialData1D d;
    d.text = draw_sequence(g, w.n, w.sigma);
    d.pattern = draw_sequence(g, w.m, w.sigma);
    return d;
}

TrialData2D gen_trial_2d(const Workload& w, int trial) {
    std::mt19937_64 g(w.seed + static_cast<std::uint64_t>(trial));
    TrialData2D d;
    d.text = draw_matrix(g, w.n, w.n, w.sigma);
    d.pattern = draw_matrix(g, w.m, w.m, w.sigma);
    return d;
}

namespace {

template <class F>
std::uint64_t timed_ns(F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

}  // namespace

MatchReport run_match_1d(Algo algo, const Sequence& text, const Sequence& pattern) {
    MatchReport r;
    switch (algo) {
        case Algo::duel:
            r.time_ns = timed_ns([&] { r.positions = match_1d(text, pattern, &r.stats); });
            break;
        case Algo::kmp:
            r.time_ns = timed_ns([&] { r.positions = kmp_match_1d(text, pattern, &r.stats); });
            break;
        case Algo::naive:
            r.time_ns = timed_ns([&] { r.positions = naive_match_1d(text, pattern, &r.stats); });
            break;
        case Algo::reduction2d:
            throw std::invalid_argument("reduction2d requires --dim 2");
    }
    return r;
}

MatchReport run_match_2d(Algo algo, const Matrix& text, const Matrix& pattern) {
    MatchReport r;
    switch (algo) {
        case Algo::duel:
            r.time_ns = timed_ns([&] { r.positions2d = match_2d(text, pattern, &r.stats); });
            break;
        case Algo::reduction2d:
            r.time_ns =
                timed_ns([&] { r.positions2d = match_2d_reduction(text, pattern, &r.stats); });
            break;
        case Algo::naive:
            r.time_ns = timed_ns([&] { r.positions2d = naive_match_2d(text, pattern, &r.stats); });
            break;
        case Algo::kmp:
            throw std::invalid_argument("kmp is 1D only");
    }
    return r;
}

BenchConfig paper_grid(bool small) {
    BenchConfig cfg;
    cfg.algos = {Algo::duel, Algo::kmp};
    cfg.dim = 1;
    cfg.sigma = 1000;
    if (small) {
        cfg.trials = 10;
        for (long n = 20000; n <= 100000; n += 20000) cfg.sizes.emplace_back(n, 10);
    } else {
        cfg.trials = 50;
        for (long n = 100000; n <= 1000000; n += 100000) cfg.sizes.emplace_back(n, 10);
    }
    const long n_top = small ? 100000 : 1000000;
    for (long m : {5L, 10L, 20L, 50L, 100L})
        if (m != 10) cfg.sizes.emplace_back(n_top, m);  // (n_top, 10) is already present
    return cfg;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    std::vector<BenchRow> rows;
    for (Algo algo : cfg.algos)
        for (auto [n, m] : cfg.sizes)
            for (int trial = 0; trial < cfg.trials; ++trial) {
                Workload w;
                w.dim = cfg.dim;
                w.n = n;
                w.m = m;
                w.sigma = cfg.sigma;
                w.trials = cfg.trials;
                w.seed = cfg.seed;
                w.validate();
                MatchReport rep;
                if (cfg.dim == 1) {
                    const TrialData1D d = gen_trial_1d(w, trial);
                    rep = run_match_1d(algo, d.text, d.pattern);
                } else {
                    const TrialData2D d = gen_trial_2d(w, trial);
                    rep = run_match_2d(algo, d.text, d.pattern);
                }
                rows.push_back({algo, cfg.dim, n, m, cfg.sigma, trial,
                                cfg.seed + static_cast<std::uint64_t>(trial), rep.time_ns,
                                rep.stats.comparisons});
            }
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.algo, a.n, a.m, a.trial) < std::tie(b.algo, b.n, b.m, b.trial);
    });
    return rows;
}

const char* const kCsvHeader = "algo,dim,n,m,sigma,trial,seed,time_ns,comparisons";

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kCsvHeader << '\n';
    for (const BenchRow& r : rows)
        out << algo_name(r.algo) << ',' << r.dim << ',' << r.n << ',' << r.m << ','
            << r.sigma << ',' << r.trial << ',' << r.seed << ',' << r.time_ns << ','
            << r.comparisons << '\n';
}

std::vector<SummaryRow> summarize_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("summarize: missing or unexpected CSV header");
    using Key = std::tuple<std::string, int, long, long, long>;
    struct Acc {
        long count = 0;
        double time = 0, cmp = 0;
    };
    std::map<Key, Acc> groups;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string fields[9];
        for (int i = 0; i < 9; ++i)
            if (!std::getline(ls, fields[i], i == 8 ? '\n' : ','))
                throw std::runtime_error("summarize: line " + std::to_string(lineno) +
                                         ": expected 9 fields");
        try {
            const Key key{fields[0], std::stoi(fields[1]), std::stol(fields[2]),
                          std::stol(fields[3]), std::stol(fields[4])};
            Acc& a = groups[key];
            ++a.count;
            a.time += std::stod(fields[7]);
            a.cmp += std::stod(fields[8]);
        } catch (const std::exception&) {
            throw std::runtime_error("summarize: line " + std::to_string(lineno) +
                                     ": malformed row");
        }
    }
    std::vector<SummaryRow> out;
    for (const auto& [key, acc] : groups)
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                       std::get<3>(key), std::get<4>(key), static_cast<int>(acc.count),
                       acc.time / acc.count, acc.cmp / acc.count});
    return out;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << "algo,dim,n,m,sigma,trials,mean_time_ns,mean_comparisons\n";
    char buf[64];
    for (const SummaryRow& r : rows) {
        out << r.algo << ',' << r.dim << ',' << r.n << ',' << r.m << ',' << r.sigma << ','
            << r.trials;
        std::snprintf(buf, sizeof buf, ",%.2f,%.2f", r.mean_time_ns, r.mean_comparisons);
        out << buf << '\n';
    }
}

}  // namespace opmatch
