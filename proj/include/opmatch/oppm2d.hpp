#pragma once

// Two-dimensional order-preserving matching: reduction to 1D over vertical
// strips, and the direct pipeline (strip Z-arrays, 2D witness table, dueling,
// per-column sweeping).
//
// Matrices use (x, y) with x horizontal (left to right) and y vertical (top
// to bottom), both 1-based at the API surface; cells are stored row-major.

#include <optional>
#include <utility>
#include <vector>

#include "opmatch/opcore.hpp"

namespace opmatch {

class Matrix {
  public:
    Matrix() = default;
    Matrix(int w, int h, Value fill = 0)
        : width_(w), height_(h),
          cells_(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    /// Rows listed top to bottom, every row the same length.
    static Matrix from_rows(const std::vector<std::vector<Value>>& rows);

    Value at(int x, int y) const { return cells_[index(x, y)]; }
    Value& at(int x, int y) { return cells_[index(x, y)]; }

    int width() const { return width_; }
    int height() const { return height_; }
    const std::vector<Value>& cells() const { return cells_; }

  private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y - 1) * width_ + (x - 1);
    }
    int width_ = 0;
    int height_ = 0;
    std::vector<Value> cells_;
};

struct Pos2 {
    int x = 0;
    int y = 0;
    friend bool operator==(const Pos2&, const Pos2&) = default;
    friend bool operator<(const Pos2& a, const Pos2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

/// Left-to-right/top-to-bottom flattening; preserves and reflects 2D
/// order-isomorphism.
Sequence serialize(const Matrix& m);

/// Positions in the pattern whose relation flips when the pattern is
/// superimposed on itself at the table's offset (a, b).
struct WitnessPair2D {
    Pos2 first;
    Pos2 second;
    friend bool operator==(const WitnessPair2D&, const WitnessPair2D&) = default;
};

/// Witness pairs for offsets a in [0, w-1], b in (-h, h); std::nullopt marks
/// order-isomorphic self-overlaps.  Entry (0, 0) is always empty.
class WitnessTable2D {
  public:
    WitnessTable2D() = default;
    WitnessTable2D(int w, int h)
        : w_(w), h_(h),
          entries_(static_cast<std::size_t>(w) * (2 * h - 1)) {}

    const std::optional<WitnessPair2D>& at(int a, int b) const {
        return entries_[index(a, b)];
    }
    std::optional<WitnessPair2D>& at(int a, int b) { return entries_[index(a, b)]; }

    int pattern_width() const { return w_; }
    int pattern_height() const { return h_; }

  private:
    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * (2 * h_ - 1) + (b + h_ - 1);
    }
    int w_ = 0;
    int h_ = 0;
    std::vector<std::optional<WitnessPair2D>> entries_;
};

/// Z-array of the left strip P[1:w-a, 1:h] against the right strip
/// P[a+1:w, 1:h], both serialized row by row (bottom_up reverses the row
/// order and serves the negative vertical offsets).
struct StripZ {
    int a = 0;            // horizontal offset
    int strip_width = 0;  // pattern width - a
    int height = 0;       // pattern height
    bool bottom_up = false;
    Sequence p1, p2;      // serialized left / right strips
    PrevNext pn1;         // Prev/Next of p1
    std::vector<int> z;   // z[i] = max j with p1[1:j] ~ p2[i:i+j-1]
};

StripZ strip_z(const Matrix& p, int a, bool bottom_up = false);

/// Witness for offset (strip.a, b), derived in O(1) from the strip arrays.
/// b >= 0 requires a top-down strip, b < 0 a bottom-up one.
std::optional<WitnessPair2D> witness_at(const StripZ& strip, int b);

/// Full witness table in O(w * h * min(w, h) ...) ~ O(m^3) for square
/// patterns: one rank pass over the cells, then per-offset strip arrays.
WitnessTable2D witness_table_2d(const Matrix& p);

/// Candidate pruning: survivors are pairwise consistent and contain every
/// true occurrence.  Realized as per-column stack dueling plus one pass over
/// cross-column candidate pairs; worst case O(n^2 m^2) table lookups with at
/// most one text comparison per elimination.
std::vector<Pos2> dueling_stage_2d(const Matrix& t, const Matrix& p,
                                   const WitnessTable2D& wit,
                                   MatchStats* stats = nullptr);

/// Verify pairwise-consistent candidates column by column over the
/// serialized width-w strip, reusing vertical overlap; O(n^2 m) total.
std::vector<Pos2> sweeping_stage_2d(const Matrix& t, const Matrix& p,
                                    const std::vector<Pos2>& candidates,
                                    MatchStats* stats = nullptr);

/// Direct 2D duel-and-sweep; equals match_2d_reduction and naive_match_2d.
std::vector<Pos2> match_2d(const Matrix& t, const Matrix& p,
                           MatchStats* stats = nullptr);

/// Reduction to 1D: match the serialized pattern inside every serialized
/// vertical strip of the text, keeping row-aligned hits only.
std::vector<Pos2> match_2d_reduction(const Matrix& t, const Matrix& p,
                                     MatchStats* stats = nullptr);

/// All-pairs reference scan over every window; correctness baseline.
std::vector<Pos2> naive_match_2d(const Matrix& t, const Matrix& p,
                                 MatchStats* stats = nullptr);

}  // namespace opmatch
