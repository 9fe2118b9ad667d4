#pragma once

// Reduced indefinite binary quadratic forms [A, B, C] of discriminant
// D = B^2 - 4AC, in the sign convention
//     A > 0, B < 0, C < 0, B^2 < D, sqrt(D) - |B| < 2A < sqrt(D) + |B|.
//
// The right neighbor of a reduced form is obtained from one continued
// fraction step of its first root (-B + sqrt(D)) / (2A); iterating the
// neighbor map partitions the reduced forms into disjoint cycles.  The
// number of reduced forms (the caliber) and the number of cycles (the
// class count) are the two sizes everything else in this library keeps
// comparing.  All inequalities are decided in exact integer arithmetic.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "caliber/arith.hpp"
#include "caliber/contfrac.hpp"

namespace caliber {

struct QuadForm {
    i64 a;
    i64 b;
    i64 c;

    i64 discriminant() const {
        i128 d = static_cast<i128>(b) * b - static_cast<i128>(4) * a * c;
        if (d > kMaxDiscriminant || d < -kMaxDiscriminant)
            throw std::invalid_argument("QuadForm: discriminant exceeds supported range");
        return static_cast<i64>(d);
    }

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend auto operator<=>(const QuadForm& x, const QuadForm& y) {
        return std::pair(x.a, x.b) <=> std::pair(y.a, y.b);
    }
};

/// Exact reducedness test against the sign convention above.
inline bool is_reduced(const QuadForm& f, i64 D) {
    if (D <= 0 || is_perfect_square(D)) return false;
    if (f.discriminant() != D) return false;
    if (f.a <= 0 || f.b >= 0 || f.c >= 0) return false;
    i64 m = -f.b;
    if (static_cast<i128>(m) * m >= D) return false;
    // sqrt(D) - m < 2a  <=>  2a + m > sqrt(D); both sides positive here.
    i64 lo = 2 * f.a + f.b;  // 2a - m, sign unknown
    i64 hi = 2 * f.a + m;
    if (static_cast<i128>(hi) * hi <= D) return false;
    if (lo > 0 && static_cast<i128>(lo) * lo >= D) return false;
    return true;
}

/// All reduced forms of fundamental discriminant D, sorted by (A, B).
inline std::vector<QuadForm> enumerate_reduced(i64 D) {
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument("enumerate_reduced: D must be a fundamental discriminant >= 5");
    std::vector<QuadForm> out;
    i64 s = isqrt(D);
    for (i64 m = (D & 1) ? 1 : 2; m <= s; m += 2) {
        // sqrt(D) - m < 2A < sqrt(D) + m with sqrt(D) irrational gives the
        // integer window ceil((s + 1 - m) / 2) <= A <= floor((s + m) / 2).
        i64 alo = std::max<i64>(1, ceil_div(s + 1 - m, 2));
        i64 ahi = floor_div(s + m, 2);
        for (i64 a = alo; a <= ahi; ++a) {
            i64 num = D - m * m;  // = -4AC > 0
            if (num % (4 * a) != 0) continue;
            i64 c = -(num / (4 * a));
            if (std::gcd(a, std::gcd(m, -c)) != 1) continue;
            out.push_back(QuadForm{a, -m, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// kappa(D): number of reduced forms.
inline i64 caliber(i64 D) {
    return static_cast<i64>(enumerate_reduced(D).size());
}

/// The unique reduced form with leading coefficient A and B == b0 (mod 2A),
/// defined for 4A^2 < D; picks the smallest admissible B >= -floor(sqrt(D)).
inline QuadForm lift_to_reduced(i64 A, i64 b0, i64 D) {
    if (D <= 0 || is_perfect_square(D))
        throw std::invalid_argument("lift_to_reduced: D must be positive and not a square");
    if (A <= 0 || static_cast<i128>(4) * A * A >= D)
        throw std::invalid_argument("lift_to_reduced: need 0 < 2A < sqrt(D)");
    if (mod_floor128(static_cast<i128>(b0) * b0 - D, 4 * A) != 0)
        throw std::invalid_argument("lift_to_reduced: b0^2 != D (mod 4A)");
    i64 s = isqrt(D);
    i64 B = -s + mod_floor(b0 + s, 2 * A);
    i64 C = static_cast<i64>((static_cast<i128>(B) * B - D) / (4 * A));
    QuadForm f{A, B, C};
    if (!is_reduced(f, D)) throw std::logic_error("lift_to_reduced: lift left the reduced window");
    return f;
}

/// First root (-B + sqrt(D)) / (2A); canonical because 2A | D - B^2.
inline QuadraticIrrational first_root(const QuadForm& f, i64 D) {
    if (!is_reduced(f, D)) throw std::invalid_argument("first_root: form is not reduced");
    QuadraticIrrational w{-f.b, 2 * f.a, D};
    if ((D - static_cast<i128>(f.b) * f.b) % (2 * f.a) != 0)
        throw std::logic_error("first_root: root state is not canonical");
    if (!is_reduced_qi(w)) throw std::logic_error("first_root: root of reduced form must be reduced");
    return w;
}

/// Right neighbor: apply one continued fraction step to the first root and
/// read the successor form off the new state.
inline QuadForm neighbor(const QuadForm& f, i64 D) {
    auto [digit, next] = cf_step(first_root(f, D));
    (void)digit;
    if (next.q <= 0 || next.q % 2 != 0)
        throw std::logic_error("neighbor: successor denominator must be positive and even");
    i64 a1 = next.q / 2;
    i64 b1 = -next.p;
    i64 c1 = static_cast<i64>((static_cast<i128>(b1) * b1 - D) / (4 * a1));
    QuadForm g{a1, b1, c1};
    if (!is_reduced(g, D)) throw std::logic_error("neighbor: successor form is not reduced");
    return g;
}

/// The reduced forms of D grouped into neighbor cycles.  Cycles are listed
/// by their smallest member in (A, B) order and start at that member; the
/// principal cycle is the one through the lift of A = 1.
struct CycleDecomposition {
    i64 D = 0;
    std::vector<std::vector<QuadForm>> cycles;
    std::size_t principal = 0;

    i64 class_count() const { return static_cast<i64>(cycles.size()); }
    i64 caliber() const {
        i64 n = 0;
        for (const auto& cyc : cycles) n += static_cast<i64>(cyc.size());
        return n;
    }
    std::vector<i64> cycle_sizes() const {
        std::vector<i64> out;
        out.reserve(cycles.size());
        for (const auto& cyc : cycles) out.push_back(static_cast<i64>(cyc.size()));
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Decompose an already-enumerated, (A, B)-sorted reduced set into cycles.
inline CycleDecomposition cycle_decomposition_of(std::vector<QuadForm> forms, i64 D) {
    std::map<std::pair<i64, i64>, std::size_t> index;
    for (std::size_t i = 0; i < forms.size(); ++i) index.emplace(std::pair(forms[i].a, forms[i].b), i);

    CycleDecomposition out;
    out.D = D;
    std::vector<char> used(forms.size(), 0);
    std::vector<std::size_t> cycle_of(forms.size(), 0);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (used[i]) continue;
        std::vector<QuadForm> cyc;
        QuadForm cur = forms[i];
        while (true) {
            auto it = index.find(std::pair(cur.a, cur.b));
            if (it == index.end())
                throw std::logic_error("cycle_decomposition: neighbor left the reduced set");
            std::size_t j = it->second;
            if (used[j]) {
                if (j != i || cyc.empty())
                    throw std::logic_error("cycle_decomposition: neighbor map is not a permutation");
                break;
            }
            used[j] = 1;
            cycle_of[j] = out.cycles.size();
            cyc.push_back(cur);
            cur = neighbor(cur, D);
        }
        out.cycles.push_back(std::move(cyc));
    }

    QuadForm seed = lift_to_reduced(1, D & 1, D);
    auto it = index.find(std::pair(seed.a, seed.b));
    if (it == index.end()) throw std::logic_error("cycle_decomposition: principal lift missing");
    out.principal = cycle_of[it->second];
    return out;
}

inline CycleDecomposition cycle_decomposition(i64 D) {
    return cycle_decomposition_of(enumerate_reduced(D), D);
}

}  // namespace caliber
