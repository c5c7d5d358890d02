#include "opmatch/oppm2d.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "opmatch/oppm1d.hpp"

namespace opmatch {

Matrix Matrix::from_rows(const std::vector<std::vector<Value>>& rows) {
    const int h = static_cast<int>(rows.size());
    const int w = h > 0 ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(w, h);
    for (int y = 1; y <= h; ++y) {
        if (static_cast<int>(rows[y - 1].size()) != w)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (int x = 1; x <= w; ++x) m.at(x, y) = rows[y - 1][x - 1];
    }
    return m;
}

Sequence serialize(const Matrix& m) { return m.cells(); }

namespace {

// Serialized strips of width sw: position t (1-based) sits in row r, column
// c of the strip; bottom_up strips list rows last-to-first.
struct StripGeometry {
    int strip_width;
    int height;
    bool bottom_up;

    Pos2 left_cell(int t) const {
        const int r = (t - 1) / strip_width + 1;
        const int c = (t - 1) % strip_width + 1;
        return {c, bottom_up ? height - r + 1 : r};
    }
};

// Dense ranks of the cells (equal values share a rank); substituting ranks
// for values preserves every three-way comparison while keeping the strip
// alphabets small enough for the linear prev/next path.
Matrix rank_matrix(const Matrix& m) {
    const Sequence cells = m.cells();
    const std::vector<int> order = sorted_positions(cells);
    Matrix r(m.width(), m.height());
    std::vector<Value> rank(cells.size());
    Value next_rank = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k == 0 || cells[order[k]] != cells[order[k - 1]]) ++next_rank;
        rank[order[k]] = next_rank;
    }
    for (int y = 1; y <= m.height(); ++y)
        for (int x = 1; x <= m.width(); ++x)
            r.at(x, y) = rank[static_cast<std::size_t>(y - 1) * m.width() + (x - 1)];
    return r;
}

}  // namespace

StripZ strip_z(const Matrix& p, int a, bool bottom_up) {
    if (a < 0 || a >= p.width()) throw std::invalid_argument("strip_z: offset out of range");
    StripZ s;
    s.a = a;
    s.strip_width = p.width() - a;
    s.height = p.height();
    s.bottom_up = bottom_up;
    const std::size_t len =
        static_cast<std::size_t>(s.strip_width) * static_cast<std::size_t>(s.height);
    s.p1.reserve(len);
    s.p2.reserve(len);
    for (int r = 1; r <= s.height; ++r) {
        const int y = bottom_up ? s.height - r + 1 : r;
        for (int c = 1; c <= s.strip_width; ++c) {
            s.p1.push_back(p.at(c, y));
            s.p2.push_back(p.at(a + c, y));
        }
    }
    s.pn1 = prev_next(s.p1);
    s.z = z_match(s.p1, s.pn1, z_array(s.p1, s.pn1), s.p2);
    return s;
}

std::optional<WitnessPair2D> witness_at(const StripZ& strip, int b) {
    assert(strip.bottom_up == (b < 0));
    const int bb = b < 0 ? -b : b;
    const int sw = strip.strip_width;
    const int i0 = bb * sw + 1;  // start of the overlap inside p2
    const int z = strip.z[i0 - 1];
    if (z == sw * (strip.height - bb)) return std::nullopt;

    const StripGeometry geo{sw, strip.height, strip.bottom_up};
    const int j = z + 1;  // first serial position of p1 that fails
    const int imax = strip.pn1.prev[j - 1];
    const int imin = strip.pn1.next[j - 1];
    const Sequence& p1 = strip.p1;
    const Sequence& p2 = strip.p2;
    int i;
    if (imax == 0) {
        i = imin;
    } else if (imin == 0) {
        i = imax;
    } else if (p1[imax - 1] == p1[j - 1]) {
        i = (p2[i0 + j - 2] != p2[i0 + imax - 2]) ? imax : imin;
    } else {
        i = (p2[i0 + j - 2] <= p2[i0 + imax - 2]) ? imax : imin;
    }
    assert(i >= 1 && i < j);
    return WitnessPair2D{geo.left_cell(i), geo.left_cell(j)};
}

WitnessTable2D witness_table_2d(const Matrix& p) {
    const int w = p.width(), h = p.height();
    WitnessTable2D wit(w, h);
    const Matrix ranks = rank_matrix(p);
    for (int a = 0; a < w; ++a) {
        const StripZ down = strip_z(ranks, a, /*bottom_up=*/false);
        for (int b = 0; b < h; ++b) wit.at(a, b) = witness_at(down, b);
        if (h > 1) {
            const StripZ up = strip_z(ranks, a, /*bottom_up=*/true);
            for (int b = 1; b < h; ++b) wit.at(a, -b) = witness_at(up, -b);
        }
    }
    return wit;
}

namespace {

// Duel between candidates c1 and c2 = c1 + (a, b); returns the eliminated
// one.  One three-way comparison on t.
Pos2 duel_2d(const Matrix& t, const Matrix& p, Pos2 c1, int a, int b,
             const WitnessPair2D& wp, MatchStats* stats) {
    const int r1 = cmp3(p.at(wp.first.x, wp.first.y), p.at(wp.second.x, wp.second.y));
    const int rt = cmp3(t.at(c1.x + a + wp.first.x - 1, c1.y + b + wp.first.y - 1),
                        t.at(c1.x + a + wp.second.x - 1, c1.y + b + wp.second.y - 1));
    if (stats) {
        ++stats->duel_count;
        ++stats->duel_comparisons;
    }
    return rt != r1 ? Pos2{c1.x + a, c1.y + b} : c1;
}

}  // namespace

std::vector<Pos2> dueling_stage_2d(const Matrix& t, const Matrix& p,
                                   const WitnessTable2D& wit, MatchStats* stats) {
    const int w = p.width(), h = p.height();
    const int cw = t.width() - w + 1;   // candidate grid width
    const int ch = t.height() - h + 1;  // candidate grid height
    std::vector<Pos2> out;
    if (cw <= 0 || ch <= 0) return out;

    std::vector<char> alive(static_cast<std::size_t>(cw) * ch, 0);
    auto alive_at = [&](int x, int y) -> char& {
        return alive[static_cast<std::size_t>(x - 1) * ch + (y - 1)];
    };

    // Stack dueling down each column; vertical offsets chain transitively.
    std::vector<int> stack;
    for (int x = 1; x <= cw; ++x) {
        stack.clear();
        for (int y = 1; y <= ch; ++y) {
            bool ok = true;
            while (ok && !stack.empty()) {
                const int y0 = stack.back();
                const int dy = y - y0;
                if (dy >= h) break;
                const auto& wp = wit.at(0, dy);
                if (!wp) break;
                const Pos2 loser = duel_2d(t, p, {x, y0}, 0, dy, *wp, stats);
                if (loser.y == y)
                    ok = false;
                else
                    stack.pop_back();
            }
            if (ok) stack.push_back(y);
        }
        for (int y : stack) alive_at(x, y) = 1;
    }

    // One pass over cross-column pairs: any pair both alive at the end was
    // examined while both were alive, so survivors are pairwise consistent.
    for (int x2 = 1; x2 <= cw; ++x2) {
        for (int y2 = 1; y2 <= ch; ++y2) {
            if (!alive_at(x2, y2)) continue;
            const Pos2 c2{x2, y2};
            for (int x1 = std::max(1, x2 - w + 1); x1 < x2 && alive_at(x2, y2); ++x1) {
                const int ylo = std::max(1, y2 - h + 1);
                const int yhi = std::min(ch, y2 + h - 1);
                for (int y1 = ylo; y1 <= yhi; ++y1) {
                    if (!alive_at(x1, y1)) continue;
                    const auto& wp = wit.at(x2 - x1, y2 - y1);
                    if (!wp) continue;
                    const Pos2 loser = duel_2d(t, p, {x1, y1}, x2 - x1, y2 - y1, *wp, stats);
                    if (loser == c2) {
                        alive_at(x2, y2) = 0;
                        break;
                    }
                    alive_at(x1, y1) = 0;
                }
            }
        }
    }

    for (int x = 1; x <= cw; ++x)
        for (int y = 1; y <= ch; ++y)
            if (alive_at(x, y)) out.push_back({x, y});
    if (stats) stats->surviving_candidates += out.size();
    return out;
}

std::vector<Pos2> sweeping_stage_2d(const Matrix& t, const Matrix& p,
                                    const std::vector<Pos2>& candidates,
                                    MatchStats* stats) {
    std::vector<Pos2> out;
    if (candidates.empty()) return out;
    const Sequence sp = serialize(p);
    const PrevNext pn = prev_next(sp);
    const int w = p.width();

    Sequence strip;
    strip.reserve(static_cast<std::size_t>(w) * t.height());
    std::vector<int> pos1d;
    std::size_t i = 0;
    while (i < candidates.size()) {  // candidates arrive sorted by (x, y)
        const int x = candidates[i].x;
        pos1d.clear();
        while (i < candidates.size() && candidates[i].x == x) {
            pos1d.push_back(w * (candidates[i].y - 1) + 1);
            ++i;
        }
        strip.clear();
        for (int y = 1; y <= t.height(); ++y)
            for (int xx = x; xx < x + w; ++xx) strip.push_back(t.at(xx, y));
        for (int s : sweeping_stage(std::span<const Value>(strip), sp, pn, pos1d, stats))
            out.push_back({x, (s - 1) / w + 1});
    }
    return out;
}

std::vector<Pos2> match_2d(const Matrix& t, const Matrix& p, MatchStats* stats) {
    if (p.width() == 0 || p.height() == 0)
        throw std::invalid_argument("match_2d: empty pattern");
    if (p.width() > t.width() || p.height() > t.height()) return {};
    const WitnessTable2D wit = witness_table_2d(p);
    const std::vector<Pos2> cands = dueling_stage_2d(t, p, wit, stats);
    std::vector<Pos2> out = sweeping_stage_2d(t, p, cands, stats);
    if (stats) stats->finish_duel_sweep();
    return out;
}

std::vector<Pos2> match_2d_reduction(const Matrix& t, const Matrix& p,
                                     MatchStats* stats) {
    if (p.width() == 0 || p.height() == 0)
        throw std::invalid_argument("match_2d_reduction: empty pattern");
    std::vector<Pos2> out;
    if (p.width() > t.width() || p.height() > t.height()) return out;
    const int w = p.width(), h = p.height();
    const Pattern1D pat = preprocess_1d(serialize(p));

    Sequence strip;
    strip.reserve(static_cast<std::size_t>(w) * t.height());
    for (int x = 1; x + w - 1 <= t.width(); ++x) {
        strip.clear();
        for (int y = 1; y <= t.height(); ++y)
            for (int xx = x; xx < x + w; ++xx) strip.push_back(t.at(xx, y));
        const std::vector<int> cands = dueling_stage(strip, pat.p, pat.wit, stats);
        for (int s : sweeping_stage(std::span<const Value>(strip), pat.p, pat.pn,
                                    cands, stats)) {
            // Keep hits aligned to a row start; others straddle two rows.
            if ((s - 1) % w != 0) continue;
            const int y = (s - 1) / w + 1;
            if (y + h - 1 <= t.height()) out.push_back({x, y});
        }
    }
    if (stats) stats->finish_duel_sweep();
    return out;
}

std::vector<Pos2> naive_match_2d(const Matrix& t, const Matrix& p, MatchStats* stats) {
    if (p.width() == 0 || p.height() == 0)
        throw std::invalid_argument("naive_match_2d: empty pattern");
    std::vector<Pos2> out;
    const int w = p.width(), h = p.height();
    const Sequence ps = serialize(p);
    const int len = static_cast<int>(ps.size());
    Sequence win(ps.size());
    for (int x = 1; x + w - 1 <= t.width(); ++x)
        for (int y = 1; y + h - 1 <= t.height(); ++y) {
            int k = 0;
            for (int yy = y; yy < y + h; ++yy)
                for (int xx = x; xx < x + w; ++xx) win[k++] = t.at(xx, yy);
            bool ok = true;
            for (int j = 2; ok && j <= len; ++j)
                for (int i = 1; i < j; ++i) {
                    if (stats) ++stats->comparisons;
                    if (cmp3(win[i - 1], win[j - 1]) != cmp3(ps[i - 1], ps[j - 1])) {
                        ok = false;
                        break;
                    }
                }
            if (ok) out.push_back({x, y});
        }
    // Column-major output to match the pipeline ordering.
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace opmatch
