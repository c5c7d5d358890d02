#include "opmatch/opcore.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace opmatch {

namespace {

bool magnitude_fits_cube(const Sequence& s) {
    const auto n = static_cast<std::uint64_t>(s.size());
    if (n >= (1ull << 21)) return true;  // n^3 >= 2^63 covers any int64
    auto [mn, mx] = std::minmax_element(s.begin(), s.end());
    std::uint64_t mag = std::max<std::uint64_t>(
        *mx < 0 ? 0 : static_cast<std::uint64_t>(*mx),
        *mn > 0 ? 0 : static_cast<std::uint64_t>(-(*mn + 1)) + 1);
    return mag <= n * n * n;
}

std::vector<int> radix_sorted_positions(const Sequence& s) {
    const int n = static_cast<int>(s.size());
    const Value mn = *std::min_element(s.begin(), s.end());
    std::vector<std::uint64_t> key(n);
    std::uint64_t range = 0;
    for (int i = 0; i < n; ++i) {
        key[i] = static_cast<std::uint64_t>(s[i]) - static_cast<std::uint64_t>(mn);
        range = std::max(range, key[i]);
    }
    const std::uint64_t base = std::max<std::uint64_t>(static_cast<std::uint64_t>(n), 2);
    std::vector<int> order(n), tmp(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint32_t> count(base + 1);
    std::uint64_t shift = 1;  // current digit weight
    while (true) {
        std::fill(count.begin(), count.end(), 0);
        for (int i = 0; i < n; ++i) ++count[key[order[i]] / shift % base + 1];
        for (std::uint64_t d = 0; d < base; ++d) count[d + 1] += count[d];
        for (int i = 0; i < n; ++i) tmp[count[key[order[i]] / shift % base]++] = order[i];
        order.swap(tmp);
        if (range / shift < base) break;
        shift *= base;
    }
    return order;
}

// Removing positions in decreasing index order from a doubly linked list
// over `order` leaves, at each step, exactly the earlier positions; the
// neighbor of the removed node is its nearest predecessor in sort order.
std::vector<int> neighbor_pass(const std::vector<int>& order, bool take_left) {
    const int n = static_cast<int>(order.size());
    std::vector<int> slot_of(n), left(n), right(n), out(n, 0);
    for (int k = 0; k < n; ++k) {
        slot_of[order[k]] = k;
        left[k] = k - 1;
        right[k] = k + 1;
    }
    for (int pos = n - 1; pos >= 0; --pos) {
        const int s = slot_of[pos];
        const int nb = take_left ? left[s] : right[s];
        if (nb >= 0 && nb < n) out[pos] = order[nb] + 1;  // 1-based, 0 = none
        if (left[s] >= 0) right[left[s]] = right[s];
        if (right[s] < n) left[right[s]] = left[s];
    }
    return out;
}

}  // namespace

std::vector<int> sorted_positions(const Sequence& s) {
    const int n = static_cast<int>(s.size());
    if (n <= 1) return n == 1 ? std::vector<int>{0} : std::vector<int>{};
    if (magnitude_fits_cube(s)) return radix_sorted_positions(s);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&s](int a, int b) { return s[a] < s[b] || (s[a] == s[b] && a < b); });
    return order;
}

PrevNext prev_next(const Sequence& s) {
    const int n = static_cast<int>(s.size());
    PrevNext pn;
    if (n == 0) return pn;
    std::vector<int> order = sorted_positions(s);
    pn.prev = neighbor_pass(order, /*take_left=*/true);
    // For next we need ties ordered by descending position: reverse each
    // run of equal characters.
    for (int k = 0; k < n;) {
        int e = k + 1;
        while (e < n && s[order[e]] == s[order[k]]) ++e;
        std::reverse(order.begin() + k, order.begin() + e);
        k = e;
    }
    pn.next = neighbor_pass(order, /*take_left=*/false);
    return pn;
}

bool verify_step(const Sequence& p, const PrevNext& pn, std::span<const Value> w,
                 int i, std::uint64_t* cmp) {
    assert(i >= 1 && i <= static_cast<int>(p.size()));
    assert(static_cast<int>(w.size()) >= i);
    const int imax = pn.prev[i - 1];
    const int imin = pn.next[i - 1];
    if (imax == 0 && imin == 0) return true;
    const bool tie = (imax != 0 && p[imax - 1] == p[i - 1]) ||
                     (imin != 0 && p[imin - 1] == p[i - 1]);
    if (tie) {
        if (imax != 0) {
            if (cmp) ++*cmp;
            if (w[imax - 1] != w[i - 1]) return false;
        }
        if (imin != 0) {
            if (cmp) ++*cmp;
            if (w[i - 1] != w[imin - 1]) return false;
        }
    } else {
        if (imax != 0) {
            if (cmp) ++*cmp;
            if (!(w[imax - 1] < w[i - 1])) return false;
        }
        if (imin != 0) {
            if (cmp) ++*cmp;
            if (!(w[i - 1] < w[imin - 1])) return false;
        }
    }
    return true;
}

bool order_isomorphic(const Sequence& s, const Sequence& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("order_isomorphic: length mismatch");
    const PrevNext pn = prev_next(s);
    const std::span<const Value> w(t);
    for (int i = 1; i <= static_cast<int>(s.size()); ++i)
        if (!verify_step(s, pn, w, i)) return false;
    return true;
}

std::vector<int> z_array(const Sequence& s, const PrevNext& pn) {
    const int n = static_cast<int>(s.size());
    std::vector<int> z(n);
    if (n == 0) return z;
    z[0] = n;
    int l = 0, r = 0;  // current box [l, r], 1-based; 0 = none
    for (int i = 2; i <= n; ++i) {
        int j = 0;
        if (i <= r) {
            const int k = i - l + 1;
            const int rem = r - i + 1;
            if (z[k - 1] < rem) {
                // Entirely inside the box; the mismatch carries over by
                // transitivity, no re-check needed.
                z[i - 1] = z[k - 1];
                continue;
            }
            j = rem;
        }
        const std::span<const Value> w(s.data() + (i - 1), s.size() - (i - 1));
        while (i + j <= n && verify_step(s, pn, w, j + 1)) ++j;
        z[i - 1] = j;
        if (j > 0 && i + j - 1 > r) {
            l = i;
            r = i + j - 1;
        }
    }
    return z;
}

std::vector<int> z_match(const Sequence& p, const PrevNext& pn,
                         const std::vector<int>& zp, const Sequence& t) {
    const int np = static_cast<int>(p.size());
    const int nt = static_cast<int>(t.size());
    std::vector<int> z(nt);
    int l = 0, r = 0;
    for (int i = 1; i <= nt; ++i) {
        int j = 0;
        if (i <= r) {
            const int k = i - l + 1;
            const int rem = r - i + 1;
            if (zp[k - 1] < rem) {
                z[i - 1] = zp[k - 1];
                continue;
            }
            j = rem;
        }
        const std::span<const Value> w(t.data() + (i - 1), t.size() - (i - 1));
        while (i + j <= nt && j < np && verify_step(p, pn, w, j + 1)) ++j;
        z[i - 1] = j;
        if (j > 0 && i + j - 1 > r) {
            l = i;
            r = i + j - 1;
        }
    }
    return z;
}

}  // namespace opmatch
