#pragma once

// Exact continued fractions of quadratic irrationalities (P + sqrt(D))/Q.
//
// A value is kept canonical: Q | D - P^2.  Canonical states make the
// expansion recurrence purely integral,
//     digit = floor(x),  P' = digit*Q - P,  Q' = (D - P'^2)/Q,
// and periodicity detection is a repeat of the (P, Q) pair.  Floors and
// order comparisons are done against isqrt(D), never through doubles.

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "caliber/arith.hpp"

namespace caliber {

// Canonical radicand cap after make_qi rescaling; keeps P + isqrt(D) and
// digit*Q inside i64 for every reachable state.
inline constexpr i64 kMaxRadicand = i64{4'000'000'000'000'000'000};

/// (p + sqrt(d)) / q with q | d - p^2 and d positive non-square.
struct QuadraticIrrational {
    i64 p;
    i64 q;
    i64 d;

    friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;
};

inline QuadraticIrrational make_qi(i64 p, i64 q, i64 d) {
    if (q == 0) throw std::invalid_argument("make_qi: q must be nonzero");
    if (d <= 0 || is_perfect_square(d))
        throw std::invalid_argument("make_qi: d must be positive and not a perfect square");
    if ((d - static_cast<i128>(p) * p) % q != 0) {
        // Multiply numerator and denominator by |q|; the radicand scales by q^2.
        i128 d2 = static_cast<i128>(d) * q * q;
        i128 p2 = static_cast<i128>(p) * (q < 0 ? -q : q);
        if (d2 > kMaxRadicand || p2 > kMaxRadicand || p2 < -kMaxRadicand)
            throw std::invalid_argument("make_qi: canonical rescaling overflows supported range");
        p = static_cast<i64>(p2);
        d = static_cast<i64>(d2);
        q = q * (q < 0 ? -q : q);
    }
    if (d > kMaxRadicand || p > kMaxRadicand || p < -kMaxRadicand)
        throw std::invalid_argument("make_qi: value exceeds supported range");
    return QuadraticIrrational{p, q, d};
}

namespace detail {

// Sign of (p + e*sqrt(d)) - t for e in {+1,-1}; d positive non-square.
inline int sign_plus_sqrt(i64 p, int e, i64 d, i64 t) {
    if (e > 0) {
        i64 u = t - p;  // compare sqrt(d) with u
        if (u <= 0) return 1;
        i128 uu = static_cast<i128>(u) * u;
        return uu < d ? 1 : -1;  // equality impossible, d non-square
    }
    i64 v = p - t;  // compare v with sqrt(d)
    if (v <= 0) return -1;
    i128 vv = static_cast<i128>(v) * v;
    return vv > d ? 1 : -1;
}

// Sign of (p + e*sqrt(d))/q - t.
inline int sign_qi_minus(const QuadraticIrrational& x, int e, i64 t) {
    int s = sign_plus_sqrt(x.p, e, x.d, t * x.q);
    return x.q > 0 ? s : -s;
}

}  // namespace detail

/// Exact test of x > 1 and -1 < x' < 0 (x' the algebraic conjugate).
inline bool is_reduced_qi(const QuadraticIrrational& x) {
    return detail::sign_qi_minus(x, +1, 1) > 0      // x > 1
        && detail::sign_qi_minus(x, -1, 0) < 0      // x' < 0
        && detail::sign_qi_minus(x, -1, -1) > 0;    // x' > -1
}

/// Exact floor of (p + sqrt(d))/q.
inline i64 qi_floor(const QuadraticIrrational& x) {
    i64 r = isqrt(x.d);
    // sqrt(d) lies strictly between r and r+1, so for integer bounds the
    // floor only sees the integer part r (or -r-1 on the negated side).
    if (x.q > 0) return floor_div(x.p + r, x.q);
    return floor_div(-x.p - r - 1, -x.q);
}

/// One expansion step: digit = floor(x), next = 1/(x - digit).
inline std::pair<i64, QuadraticIrrational> cf_step(const QuadraticIrrational& x) {
    i64 digit = qi_floor(x);
    i128 p1 = static_cast<i128>(digit) * x.q - x.p;
    i128 num = static_cast<i128>(x.d) - p1 * p1;
    if (num % x.q != 0) throw std::logic_error("cf_step: canonical invariant violated");
    i128 q1 = num / x.q;
    if (q1 == 0) throw std::logic_error("cf_step: square radicand slipped through");
    if (p1 > kMaxRadicand || p1 < -kMaxRadicand || q1 > kMaxRadicand || q1 < -kMaxRadicand)
        throw std::invalid_argument("cf_step: state exceeds supported range");
    return {digit, QuadraticIrrational{static_cast<i64>(p1), static_cast<i64>(q1), x.d}};
}

struct CFExpansion {
    std::vector<i64> preperiod;
    std::vector<i64> period;  // minimal repeating block, nonempty
};

/// Full expansion with minimal preperiod and minimal period, found as the
/// first repeated canonical state (finite by Lagrange).
inline CFExpansion expand(const QuadraticIrrational& x) {
    struct PairHash {
        size_t operator()(const std::pair<i64, i64>& s) const {
            return std::hash<i64>{}(s.first) * 0x9e3779b97f4a7c15ULL + std::hash<i64>{}(s.second);
        }
    };
    std::unordered_map<std::pair<i64, i64>, size_t, PairHash> seen;
    std::vector<i64> digits;
    QuadraticIrrational cur = x;
    while (true) {
        auto key = std::make_pair(cur.p, cur.q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            size_t start = it->second;
            return CFExpansion{{digits.begin(), digits.begin() + static_cast<long>(start)},
                               {digits.begin() + static_cast<long>(start), digits.end()}};
        }
        seen.emplace(key, digits.size());
        auto [digit, next] = cf_step(cur);
        digits.push_back(digit);
        cur = next;
    }
}

/// m(x): length of the periodic part.
inline i64 caliber_of(const QuadraticIrrational& x) {
    return static_cast<i64>(expand(x).period.size());
}

/// Canonical generator omega_D: sqrt(D)/2 for D == 0 (4), (1+sqrt(D))/2 for D == 1 (4).
inline QuadraticIrrational omega(const FieldSpec& spec) {
    i64 p = spec.omega_parity == OmegaParity::HalfOnePlusSqrt ? 1 : 0;
    return make_qi(p, 2, spec.D);
}

}  // namespace caliber
