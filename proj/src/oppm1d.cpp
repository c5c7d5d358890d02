#include "opmatch/oppm1d.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace opmatch {

WitnessTable1D witness_table(const Sequence& p, const PrevNext& pn,
                             const std::vector<int>& z) {
    const int m = static_cast<int>(p.size());
    WitnessTable1D wit(m);
    for (int k = 2; k <= m; ++k) {
        if (z[k - 1] == m - k + 1) continue;  // self-overlap isomorphic
        const int j = z[k - 1] + 1;           // first mismatching prefix length
        const int imax = pn.prev[j - 1];
        const int imin = pn.next[j - 1];
        WitnessPair1D wp{0, j};
        if (imax == 0) {
            wp.i = imin;
        } else if (imin == 0) {
            wp.i = imax;
        } else if (p[imax - 1] == p[j - 1]) {
            // Tie at j: one of the shifted equalities must break.
            wp.i = (p[k + j - 2] != p[k + imax - 2]) ? imax : imin;
        } else {
            wp.i = (p[k + j - 2] <= p[k + imax - 2]) ? imax : imin;
        }
        assert(wp.i >= 1 && wp.i < j);
        assert(cmp3(p[wp.i - 1], p[j - 1]) !=
               cmp3(p[wp.i + k - 2], p[j + k - 2]));
        wit.at(k - 1) = wp;
    }
    return wit;
}

WitnessTable1D witness_table(const Sequence& p) {
    const PrevNext pn = prev_next(p);
    return witness_table(p, pn, z_array(p, pn));
}

int duel(const Sequence& t, int x, int a, const Sequence& p,
         const WitnessTable1D& wit, MatchStats* stats) {
    const WitnessPair1D& wp = *wit.at(a);
    const int r1 = cmp3(p[wp.i - 1], p[wp.j - 1]);
    const int rt = cmp3(t[x + a + wp.i - 2], t[x + a + wp.j - 2]);
    if (stats) {
        ++stats->duel_count;
        ++stats->duel_comparisons;
    }
    // The shared text cells are candidate x+a's positions (i, j) and
    // candidate x's positions (i+a, j+a); exactly one of the two required
    // relations can hold.
    return rt != r1 ? x + a : x;
}

std::vector<int> dueling_stage(const Sequence& t, const Sequence& p,
                               const WitnessTable1D& wit, MatchStats* stats) {
    const int n = static_cast<int>(t.size());
    const int m = static_cast<int>(p.size());
    std::vector<int> stack;
    if (m > n || m == 0) return stack;
    stack.reserve(64);
    for (int x = 1; x <= n - m + 1; ++x) {
        bool alive = true;
        while (alive && !stack.empty()) {
            const int y = stack.back();
            const int a = x - y;
            if (a >= m) break;          // no overlap, trivially consistent
            if (!wit.at(a)) break;      // consistent with top, hence with all below
            if (duel(t, y, a, p, wit, stats) == x)
                alive = false;
            else
                stack.pop_back();
        }
        if (alive) stack.push_back(x);
    }
    if (stats) stats->surviving_candidates += stack.size();
    return stack;
}

std::vector<int> sweeping_stage(std::span<const Value> t, const Sequence& p,
                                const PrevNext& pn, const std::vector<int>& candidates,
                                MatchStats* stats) {
    const int m = static_cast<int>(p.size());
    std::vector<int> matches;
    std::uint64_t* cmp = stats ? &stats->sweep_comparisons : nullptr;
    int start = 1;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        const int x = candidates[idx];
        const std::span<const Value> w = t.subspan(x - 1);
        int j = start;
        bool ok = true;
        while (j <= m) {
            if (stats) ++stats->sweep_verify_calls;
            if (!verify_step(p, pn, w, j, cmp)) {
                ok = false;
                break;
            }
            ++j;
        }
        if (ok) matches.push_back(x);
        if (idx + 1 < candidates.size()) {
            const int a = candidates[idx + 1] - x;
            if (a >= m)
                start = 1;
            else if (ok)
                start = m - a + 1;
            else
                start = std::max(1, j - a);  // prefix before the mismatch is
                                             // shared through consistency
        }
    }
    return matches;
}

std::vector<int> sweeping_stage(const Sequence& t, const Sequence& p,
                                const std::vector<int>& candidates,
                                MatchStats* stats) {
    return sweeping_stage(std::span<const Value>(t), p, prev_next(p), candidates, stats);
}

Pattern1D preprocess_1d(Sequence p) {
    Pattern1D pat;
    pat.p = std::move(p);
    pat.pn = prev_next(pat.p);
    pat.z = z_array(pat.p, pat.pn);
    pat.wit = witness_table(pat.p, pat.pn, pat.z);
    return pat;
}

std::vector<int> match_1d(const Pattern1D& pat, const Sequence& t, MatchStats* stats) {
    if (pat.p.empty()) throw std::invalid_argument("match_1d: empty pattern");
    if (pat.p.size() > t.size()) return {};
    const std::vector<int> cands = dueling_stage(t, pat.p, pat.wit, stats);
    std::vector<int> out =
        sweeping_stage(std::span<const Value>(t), pat.p, pat.pn, cands, stats);
    if (stats) stats->finish_duel_sweep();
    return out;
}

std::vector<int> match_1d(const Sequence& t, const Sequence& p, MatchStats* stats) {
    return match_1d(preprocess_1d(p), t, stats);
}

std::vector<int> naive_match_1d(const Sequence& t, const Sequence& p, MatchStats* stats) {
    if (p.empty()) throw std::invalid_argument("naive_match_1d: empty pattern");
    const int n = static_cast<int>(t.size());
    const int m = static_cast<int>(p.size());
    std::vector<int> out;
    for (int x = 1; x + m - 1 <= n; ++x) {
        bool ok = true;
        for (int j = 2; ok && j <= m; ++j)
            for (int i = 1; i < j; ++i) {
                if (stats) ++stats->comparisons;
                if (cmp3(t[x + i - 2], t[x + j - 2]) != cmp3(p[i - 1], p[j - 1])) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<int> kmp_match_1d(const Sequence& t, const Sequence& p, MatchStats* stats) {
    if (p.empty()) throw std::invalid_argument("kmp_match_1d: empty pattern");
    const int n = static_cast<int>(t.size());
    const int m = static_cast<int>(p.size());
    std::vector<int> out;
    if (m > n) return out;

    const PrevNext pn = prev_next(p);
    const std::span<const Value> ps(p);

    // fail[i] = longest proper b < i with p[1:b] ~ p[i-b+1:i]; extending a
    // border by one character is a single verify_step on the border window.
    std::vector<int> fail(m + 1, 0);
    for (int i = 2; i <= m; ++i) {
        int b = fail[i - 1];
        for (;;) {
            if (verify_step(p, pn, ps.subspan(i - b - 1), b + 1)) {
                fail[i] = b + 1;
                break;
            }
            if (b == 0) {
                fail[i] = 0;
                break;
            }
            b = fail[b];
        }
    }

    std::uint64_t* cmp = stats ? &stats->comparisons : nullptr;
    const std::span<const Value> ts(t);
    int q = 0;  // matched prefix length
    for (int pos = 1; pos <= n; ++pos) {
        for (;;) {
            if (verify_step(p, pn, ts.subspan(pos - q - 1), q + 1, cmp)) {
                ++q;
                break;
            }
            q = fail[q];
        }
        if (q == m) {
            out.push_back(pos - m + 1);
            q = fail[m];
        }
    }
    return out;
}

}  // namespace opmatch
