#pragma once

// One-dimensional order-preserving matching with the duel-and-sweep scheme,
// plus a KMP-style baseline and an all-pairs naive scan.
//
// A candidate is a length-m window of the text, named by its 1-based start.
// Two overlapping candidates x and x+a are consistent when the pattern's
// self-overlap at offset a is order-isomorphic; a witness pair is a pair of
// positions proving it is not.

#include <optional>
#include <vector>

#include "opmatch/opcore.hpp"

namespace opmatch {

/// Positions i < j inside the pattern whose comparison relation flips under
/// the table's offset: cmp(P[i], P[j]) != cmp(P[i+a], P[j+a]).
struct WitnessPair1D {
    int i = 0;
    int j = 0;
    friend bool operator==(const WitnessPair1D&, const WitnessPair1D&) = default;
};

/// Witness pairs for every offset a in [1, m-1]; std::nullopt marks offsets
/// whose self-overlap is order-isomorphic (no witness exists).
class WitnessTable1D {
  public:
    WitnessTable1D() = default;
    explicit WitnessTable1D(int m) : entries_(m >= 1 ? m - 1 : 0) {}

    const std::optional<WitnessPair1D>& at(int a) const { return entries_[a - 1]; }
    std::optional<WitnessPair1D>& at(int a) { return entries_[a - 1]; }
    int offsets() const { return static_cast<int>(entries_.size()); }

  private:
    std::vector<std::optional<WitnessPair1D>> entries_;
};

/// Build the witness table in O(m) given the pattern's Prev/Next and Z-array.
WitnessTable1D witness_table(const Sequence& p, const PrevNext& pn,
                             const std::vector<int>& z);

/// Convenience overload computing the prerequisites itself.
WitnessTable1D witness_table(const Sequence& p);

/// One duel between overlapping candidates x and x+a (wit.at(a) must hold a
/// witness).  Returns the eliminated candidate; the loser provably cannot be
/// order-isomorphic with p.  Costs one three-way comparison on t.
int duel(const Sequence& t, int x, int a, const Sequence& p,
         const WitnessTable1D& wit, MatchStats* stats = nullptr);

/// Left-to-right stack scan: survivors are pairwise consistent and every
/// true occurrence survives.  O(n) duels.
std::vector<int> dueling_stage(const Sequence& t, const Sequence& p,
                               const WitnessTable1D& wit, MatchStats* stats = nullptr);

/// Verify pairwise-consistent candidates left to right, reusing the verified
/// overlap so that total work stays linear.  Returns the candidates that are
/// order-isomorphic with p.
std::vector<int> sweeping_stage(const Sequence& t, const Sequence& p,
                                const std::vector<int>& candidates,
                                MatchStats* stats = nullptr);

/// Sweeping with the pattern's Prev/Next supplied by the caller.
std::vector<int> sweeping_stage(std::span<const Value> t, const Sequence& p,
                                const PrevNext& pn, const std::vector<int>& candidates,
                                MatchStats* stats = nullptr);

/// Pattern artifacts shared by the duel-and-sweep pipeline; immutable after
/// construction, safe to reuse across texts.
struct Pattern1D {
    Sequence p;
    PrevNext pn;
    std::vector<int> z;
    WitnessTable1D wit;
};

Pattern1D preprocess_1d(Sequence p);

/// Duel-and-sweep matching with a preprocessed pattern.
std::vector<int> match_1d(const Pattern1D& pat, const Sequence& t,
                          MatchStats* stats = nullptr);

/// All start positions x with t[x:x+m-1] order-isomorphic to p, ascending.
/// O(n + m log m).  Throws std::invalid_argument when p is empty.
std::vector<int> match_1d(const Sequence& t, const Sequence& p,
                          MatchStats* stats = nullptr);

/// All-pairs reference scan, O(n * m^2); correctness baseline.
std::vector<int> naive_match_1d(const Sequence& t, const Sequence& p,
                                MatchStats* stats = nullptr);

/// KMP-style baseline driven by an order-border failure table.
std::vector<int> kmp_match_1d(const Sequence& t, const Sequence& p,
                              MatchStats* stats = nullptr);

}  // namespace opmatch
