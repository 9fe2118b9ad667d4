#pragma once

// Ideal-side counting in the order of discriminant D.
//
// A primitive ideal of norm A corresponds to a residue B mod 2A with
// B^2 == D (mod 4A), so rho_D(A) = #solutions counts primitive ideals and
// r_K(n) counts all ideals of norm n.  rho has two independent routes: a
// direct residue scan and the multiplicative formula through the Kronecker
// character; the library keeps both so they can be checked against each
// other.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "caliber/arith.hpp"

namespace caliber {

/// Solutions B mod 2A of B^2 == D (mod 4A), listed increasing in [0, 2A).
struct ResidueSolutionSet {
    i64 a = 0;
    i64 D = 0;
    std::vector<i64> residues;

    i64 rho() const { return static_cast<i64>(residues.size()); }
};

inline ResidueSolutionSet solve_sd(i64 A, i64 D) {
    if (A <= 0) throw std::invalid_argument("solve_sd: A must be positive");
    if (D % 4 != 0 && mod_floor(D, 4) != 1)
        throw std::invalid_argument("solve_sd: D must be 0 or 1 mod 4");
    ResidueSolutionSet out;
    out.a = A;
    out.D = D;
    i64 mod = 4 * A;
    for (i64 b = mod_floor(D, 2); b < 2 * A; b += 2) {
        if ((static_cast<i128>(b) * b - D) % mod == 0) out.residues.push_back(b);
    }
    return out;
}

/// rho_D(A) by direct residue scan.
inline i64 rho(i64 A, i64 D) { return solve_sd(A, D).rho(); }

/// rho_D(A) through the factorization of A:
///   p | D contributes 1 when p || A and 0 when p^2 | A,
///   p coprime to D contributes 1 + chi_D(p) regardless of the exponent.
inline i64 rho_by_formula(i64 A, i64 D) {
    if (A <= 0) throw std::invalid_argument("rho_by_formula: A must be positive");
    i64 result = 1;
    i64 n = A;
    for (i64 p = 2; static_cast<i128>(p) * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (D % p == 0) {
            if (e > 1) return 0;
            // factor 1
        } else {
            i64 f = 1 + kronecker_chi(D, p);
            if (f == 0) return 0;
            result *= f;
        }
    }
    if (n > 1) {
        if (D % n == 0) {
            // exponent 1, factor 1
        } else {
            i64 f = 1 + kronecker_chi(D, n);
            if (f == 0) return 0;
            result *= f;
        }
    }
    return result;
}

/// Primitive ideal of norm a, encoded as [a, (b + sqrt(D))/2] with
/// 0 <= b < 2a and b^2 == D (mod 4a).
struct PrimitiveIdeal {
    i64 a;
    i64 b;

    friend bool operator==(const PrimitiveIdeal&, const PrimitiveIdeal&) = default;
    friend auto operator<=>(const PrimitiveIdeal&, const PrimitiveIdeal&) = default;
};

inline std::vector<PrimitiveIdeal> primitive_ideals_with_norm(i64 A, i64 D) {
    ResidueSolutionSet s = solve_sd(A, D);
    std::vector<PrimitiveIdeal> out;
    out.reserve(s.residues.size());
    for (i64 b : s.residues) out.push_back(PrimitiveIdeal{A, b});
    return out;
}

/// Rewrite the module Z a + Z (b + c omega) as f * [A, (B + sqrt(D))/2]
/// with f = c the content and A = a / c, and return (f, primitive part).
/// Requires c | a, c | b and a c | N(b + c omega), the divisibilities that
/// make the module an ideal of the order.
inline std::pair<i64, PrimitiveIdeal> canonicalize_ideal(i64 a, i64 b, i64 c, i64 D) {
    if (a <= 0 || c <= 0) throw std::invalid_argument("canonicalize_ideal: a and c must be positive");
    if (b < 0) throw std::invalid_argument("canonicalize_ideal: b must be non-negative");
    if (D % 4 != 0 && mod_floor(D, 4) != 1)
        throw std::invalid_argument("canonicalize_ideal: D must be 0 or 1 mod 4");
    if (a % c != 0 || b % c != 0)
        throw std::invalid_argument("canonicalize_ideal: c must divide a and b");
    if (a > kMaxSquareFree || b > kMaxSquareFree || c > kMaxSquareFree)
        throw std::invalid_argument("canonicalize_ideal: coefficients exceed supported range");
    i64 t = mod_floor(D, 2);  // omega = (t + sqrt(D)) / 2
    // a c | N(b + c omega) restated over 4ac: (2b + ct)^2 == c^2 D (mod 4ac).
    i128 u = 2 * static_cast<i128>(b) + static_cast<i128>(c) * t;
    i128 lhs = u * u - static_cast<i128>(c) * c * D;
    if (mod_floor128(lhs, 4 * static_cast<i128>(a) * c) != 0)
        throw std::invalid_argument("canonicalize_ideal: module is not an ideal of the order");
    i64 A = a / c;
    i64 beta = b / c;
    i64 B = mod_floor(2 * beta + t, 2 * A);
    if (mod_floor128(static_cast<i128>(B) * B - D, 4 * A) != 0)
        throw std::logic_error("canonicalize_ideal: canonical residue fails the ideal congruence");
    return {c, PrimitiveIdeal{A, B}};
}

/// r_K(n): ideals of norm n, via the splitting type of each prime power.
inline i64 ideal_count(i64 n, i64 D) {
    if (n <= 0) throw std::invalid_argument("ideal_count: n must be positive");
    i64 result = 1;
    auto contribution = [&](i64 p, int e) -> i64 {
        i64 chi = kronecker_chi(D, p);
        if (chi == 1) return e + 1;
        if (chi == -1) return e % 2 == 0 ? 1 : 0;
        return 1;
    };
    for (i64 p = 2; static_cast<i128>(p) * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        i64 f = contribution(p, e);
        if (f == 0) return 0;
        result *= f;
    }
    if (n > 1) {
        i64 f = contribution(n, 1);
        if (f == 0) return 0;
        result *= f;
    }
    return result;
}

}  // namespace caliber
