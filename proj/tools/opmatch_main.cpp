// Command-line front end: generate random workloads, run the matchers, and
// benchmark them with comparison counting.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opmatch/bench.hpp"
#include "opmatch/io.hpp"

namespace {

using namespace opmatch;

int cmd_gen(int dim, long n, long m, long sigma, std::uint64_t seed, int trial,
            const std::string& text_path, const std::string& pattern_path) {
    Workload w;
    w.dim = dim;
    w.n = n;
    w.m = m;
    w.sigma = sigma;
    w.seed = seed;
    w.validate(/*for_matching=*/false);
    if (dim == 1) {
        const TrialData1D d = gen_trial_1d(w, trial);
        write_sequence(text_path, d.text);
        write_sequence(pattern_path, d.pattern);
    } else {
        const TrialData2D d = gen_trial_2d(w, trial);
        write_matrix(text_path, d.text);
        write_matrix(pattern_path, d.pattern);
    }
    return 0;
}

void print_stats(const MatchReport& rep, Algo algo) {
    std::cout << "# time_ns " << rep.time_ns << '\n';
    std::cout << "# comparisons " << rep.stats.comparisons << '\n';
    if (algo == Algo::duel || algo == Algo::reduction2d) {
        std::cout << "# duel_count " << rep.stats.duel_count << '\n';
        std::cout << "# duel_comparisons " << rep.stats.duel_comparisons << '\n';
        std::cout << "# sweep_comparisons " << rep.stats.sweep_comparisons << '\n';
        std::cout << "# sweep_verify_calls " << rep.stats.sweep_verify_calls << '\n';
        std::cout << "# surviving_candidates " << rep.stats.surviving_candidates << '\n';
    }
}

int cmd_match(int dim, const std::string& algo_str, bool stats,
              const std::string& text_path, const std::string& pattern_path) {
    const Algo algo = algo_from_name(algo_str);
    MatchReport rep;
    if (dim == 1) {
        const Sequence text = read_sequence(text_path);
        const Sequence pattern = read_sequence(pattern_path);
        if (pattern.size() > text.size())
            std::cerr << "warning: pattern longer than text, no occurrences\n";
        rep = run_match_1d(algo, text, pattern);
        for (int x : rep.positions) std::cout << x << '\n';
    } else {
        const Matrix text = read_matrix(text_path);
        const Matrix pattern = read_matrix(pattern_path);
        if (pattern.width() > text.width() || pattern.height() > text.height())
            std::cerr << "warning: pattern larger than text, no occurrences\n";
        rep = run_match_2d(algo, text, pattern);
        for (const Pos2& p : rep.positions2d) std::cout << p.x << ' ' << p.y << '\n';
    }
    if (stats) print_stats(rep, algo);
    return 0;
}

int cmd_bench(int dim, const std::vector<std::string>& algo_strs, std::vector<long> ns,
              std::vector<long> ms, long sigma, int trials, std::uint64_t seed,
              const std::string& preset, const std::string& out_path) {
    BenchConfig cfg;
    if (!preset.empty()) {
        if (preset != "paper-small" && preset != "paper")
            throw std::invalid_argument("unknown preset '" + preset + "'");
        cfg = paper_grid(preset == "paper-small");
        cfg.seed = seed;
    } else if (ns.empty() && ms.empty()) {
        cfg = paper_grid(/*small=*/false);  // default: the full experiment grid
        cfg.seed = seed;
    } else {
        cfg.dim = dim;
        cfg.sigma = sigma;
        cfg.trials = trials;
        cfg.seed = seed;
        if (ns.empty() || ms.empty())
            throw std::invalid_argument("bench needs both --n and --m (or --preset)");
        for (long n : ns)
            for (long m : ms) cfg.sizes.emplace_back(n, m);
        for (const std::string& s : algo_strs) cfg.algos.push_back(algo_from_name(s));
    }
    const std::vector<BenchRow> rows = run_bench(cfg);
    if (out_path.empty()) {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
        write_csv(out, rows);
    }
    return 0;
}

int cmd_summarize(const std::string& in_path, const std::string& out_path) {
    std::vector<SummaryRow> rows;
    if (in_path.empty() || in_path == "-") {
        rows = summarize_csv(std::cin);
    } else {
        std::ifstream in(in_path);
        if (!in) throw std::runtime_error(in_path + ": cannot open for reading");
        rows = summarize_csv(in);
    }
    if (out_path.empty()) {
        write_summary_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
        write_summary_csv(out, rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Order-preserving pattern matching (duel-and-sweep) toolkit"};
    app.require_subcommand(1);

    int dim = 1;
    long n = 1000, m = 10, sigma = 1000;
    int trials = 50, trial = 0;
    std::uint64_t seed = 1;
    bool stats = false;
    std::string algo = "duel", preset, out_path, in_path;
    std::vector<std::string> algos = {"duel", "kmp"};
    std::vector<long> n_list, m_list;
    std::string text_path, pattern_path;

    CLI::App* gen = app.add_subcommand("gen", "Generate a random text/pattern pair");
    gen->add_option("--dim", dim, "1 or 2")->check(CLI::Range(1, 2));
    gen->add_option("--n", n, "text length (1D) or side (2D)");
    gen->add_option("--m", m, "pattern length (1D) or side (2D)");
    gen->add_option("--sigma", sigma, "alphabet size");
    gen->add_option("--seed", seed, "base seed");
    gen->add_option("--trial", trial, "trial index; the stream is seeded with seed + trial");
    gen->add_option("text", text_path, "output text file")->required();
    gen->add_option("pattern", pattern_path, "output pattern file")->required();

    CLI::App* match = app.add_subcommand("match", "Report all occurrences of the pattern");
    match->add_option("--dim", dim, "1 or 2")->check(CLI::Range(1, 2));
    match->add_option("--algo", algo, "duel | kmp | naive | reduction2d");
    match->add_flag("--stats", stats, "print instrumentation after the positions");
    match->add_option("text", text_path, "text file")->required();
    match->add_option("pattern", pattern_path, "pattern file")->required();

    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark grid, emit CSV");
    bench->add_option("--dim", dim, "1 or 2")->check(CLI::Range(1, 2));
    bench->add_option("--algos", algos, "algorithms to compare")->delimiter(',');
    bench->add_option("--n", n_list, "text sizes")->delimiter(',');
    bench->add_option("--m", m_list, "pattern sizes")->delimiter(',');
    bench->add_option("--sigma", sigma, "alphabet size");
    bench->add_option("--trials", trials, "repetitions per configuration");
    bench->add_option("--seed", seed, "base seed; trial t uses seed + t");
    bench->add_option("--preset", preset, "paper | paper-small");
    bench->add_option("--out", out_path, "CSV output file (default stdout)");

    CLI::App* summarize = app.add_subcommand("summarize", "Average a benchmark CSV per config");
    summarize->add_option("input", in_path, "benchmark CSV ('-' for stdin)");
    summarize->add_option("--out", out_path, "summary CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(dim, n, m, sigma, seed, trial, text_path, pattern_path);
        if (match->parsed()) return cmd_match(dim, algo, stats, text_path, pattern_path);
        if (bench->parsed())
            return cmd_bench(dim, algos, n_list, m_list, sigma, trials, seed, preset, out_path);
        if (summarize->parsed()) return cmd_summarize(in_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
