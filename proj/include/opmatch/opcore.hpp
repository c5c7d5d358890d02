#pragma once

// Order-isomorphism primitives: nearest smaller/larger predecessor arrays,
// isomorphism checks, and the order-preserving variant of the Z-array.
//
// Conventions used across the library:
//  - A Sequence is a string of signed integer characters; only the relative
//    order of characters matters, never their absolute values.
//  - Published positions are 1-based, with 0 meaning "none".  Storage is
//    0-based: arr[k] holds the value for position k+1.
//  - Two equal-length sequences S, T are order-isomorphic (S ~ T) when
//    S[i] <= S[j] iff T[i] <= T[j] for all position pairs (i, j).

#include <cstdint>
#include <span>
#include <vector>

namespace opmatch {

using Value = std::int64_t;
using Sequence = std::vector<Value>;

/// Three-way comparison: -1, 0, +1.
inline int cmp3(Value a, Value b) { return a < b ? -1 : (a == b ? 0 : 1); }

/// Instrumentation for one matcher run.  `comparisons` counts three-way
/// comparisons performed on text characters; pattern preprocessing is
/// excluded from all counters.
struct MatchStats {
    std::uint64_t comparisons = 0;
    std::uint64_t duel_count = 0;
    std::uint64_t duel_comparisons = 0;
    std::uint64_t sweep_comparisons = 0;
    std::uint64_t sweep_verify_calls = 0;
    std::uint64_t surviving_candidates = 0;

    void finish_duel_sweep() { comparisons = duel_comparisons + sweep_comparisons; }
};

// Nearest-predecessor arrays.  For position i (1-based),
//   prev[i] = rightmost j < i maximizing S[j] among S[j] <= S[i],
//   next[i] = rightmost j < i minimizing S[j] among S[j] >= S[i],
// 0 when no such j exists.
struct PrevNext {
    std::vector<int> prev;
    std::vector<int> next;
};

/// Positions 0..n-1 sorted by (character value, position).  Uses an LSD
/// radix sort when the character magnitudes are bounded by n^3, otherwise
/// falls back to comparison sorting.
std::vector<int> sorted_positions(const Sequence& s);

/// Build the Prev/Next arrays in O(sort(S) + |S|) time.
PrevNext prev_next(const Sequence& s);

/// Incremental isomorphism check.  Given that p[1:i-1] ~ w[1:i-1] already
/// holds, decides whether p[1:i] ~ w[1:i] with at most two three-way
/// comparisons on w (counted into *cmp when given).  `pn` must be
/// prev_next(p) and w must span at least i characters.
bool verify_step(const Sequence& p, const PrevNext& pn, std::span<const Value> w,
                 int i, std::uint64_t* cmp = nullptr);

/// Whole-string order-isomorphism via chained verify_step.
/// Throws std::invalid_argument when lengths differ.
bool order_isomorphic(const Sequence& s, const Sequence& t);

/// Modified Z-array: z[i] = length of the longest substring starting at i
/// that is order-isomorphic with a prefix of s.  z[1] = |s|.  Linear time
/// given pn = prev_next(s); duplicate characters are handled by re-running
/// verify_step from the copied box edge.
std::vector<int> z_array(const Sequence& s, const PrevNext& pn);

/// Z-array of pattern `p` against another string `t`:
/// result[i] = max j such that p[1:j] ~ t[i:i+j-1].  `pn`/`zp` are the
/// Prev/Next and self Z-array of p.
std::vector<int> z_match(const Sequence& p, const PrevNext& pn,
                         const std::vector<int>& zp, const Sequence& t);

}  // namespace opmatch
