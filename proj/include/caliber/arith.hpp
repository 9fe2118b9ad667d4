#pragma once

// Exact integer utilities shared by every other header: integer square
// roots, square-free tests, fundamental discriminants, primes and the
// Kronecker character.  No floating point is used in any predicate; every
// comparison against sqrt(D) elsewhere reduces to an integer comparison
// built from isqrt() or a squared inequality evaluated in 128-bit.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace caliber {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Documented input limits.  Up to kMaxSquareFree every intermediate value of
// every single-field operation fits in i64 (quadratics in the coefficients
// stay below ~1e14) and every product of two such values fits in i128.  The
// scanner caps its range separately; see scan.hpp.
inline constexpr i64 kMaxSquareFree = 1'000'000'000'000;  // largest accepted d
inline constexpr i64 kMaxDiscriminant = 4 * kMaxSquareFree;

inline i64 sq(i64 x) { return x * x; }

/// Largest t >= 0 with t*t <= n.  Exact for the full i64 range.
inline i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > static_cast<u64>(n)) --r;
    while ((r + 1) * (r + 1) <= static_cast<u64>(n)) ++r;
    return static_cast<i64>(r);
}

inline bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

/// Floor division (round toward -infinity), any sign of a, b != 0.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Ceiling division (round toward +infinity), any sign of a, b != 0.
inline i64 ceil_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

/// Non-negative remainder in [0, m) for m > 0.
inline i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

/// mod_floor on 128-bit intermediates.
inline i128 mod_floor128(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

/// True iff no prime square divides n.  Trial division up to isqrt(n);
/// range scans use a sieve instead (scan.hpp).
inline bool is_square_free(i64 n) {
    if (n < 1) throw std::invalid_argument("is_square_free: n must be positive");
    if (n % 4 == 0) return false;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

/// Deterministic trial-division primality test, adequate at desk scale.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (i64 p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

enum class OmegaParity {
    HalfSqrt,         // D == 0 (mod 4): omega = sqrt(D)/2
    HalfOnePlusSqrt,  // D == 1 (mod 4): omega = (1+sqrt(D))/2
};

/// A real quadratic field given by its square-free radicand d, carrying the
/// fundamental discriminant D and the shape of the canonical generator.
struct FieldSpec {
    i64 d;
    i64 D;
    OmegaParity omega_parity;
};

inline FieldSpec field_spec(i64 d) {
    if (d < 2) throw std::invalid_argument("field_spec: d must be >= 2, got " + std::to_string(d));
    if (d > kMaxSquareFree)
        throw std::invalid_argument("field_spec: d exceeds the supported limit " +
                                    std::to_string(kMaxSquareFree));
    if (!is_square_free(d))
        throw std::invalid_argument("field_spec: d must be square-free, got " + std::to_string(d));
    const bool one_mod_4 = (d % 4 == 1);
    return FieldSpec{d, one_mod_4 ? d : 4 * d,
                     one_mod_4 ? OmegaParity::HalfOnePlusSqrt : OmegaParity::HalfSqrt};
}

/// True iff D arises as field_spec(d).D for some square-free d >= 2.
inline bool is_fundamental_discriminant(i64 D) {
    if (D < 5) return false;
    if (D % 4 == 1) return is_square_free(D);
    if (D % 4 == 0) {
        i64 d = D / 4;
        return (d % 4 == 2 || d % 4 == 3) && is_square_free(d);
    }
    return false;
}

/// Kronecker symbol (a|n) for n >= 1, computed by the standard
/// reciprocity algorithm.  Completely multiplicative in n.
inline int kronecker(i64 a, i64 n) {
    if (n <= 0) throw std::invalid_argument("kronecker: n must be positive");
    int t = 1;
    // Factors of 2 in n: (a|2) is 0 for even a, +1 for a = +-1 (8), -1 for a = +-3 (8).
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        i64 r = mod_floor(a, 8);
        if (r == 3 || r == 5) t = -t;
    }
    // The odd-part symbol depends only on a mod n; floored reduction also
    // absorbs the sign of a, so no separate (-1|n) factor may be applied.
    a = mod_floor(a, n);
    // Jacobi loop on the odd part.
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

/// chi_D(n) = (D|n), the Kronecker character of the field of discriminant D.
inline int kronecker_chi(i64 D, i64 n) { return kronecker(D, n); }

/// Smallest prime p <= bound with chi_D(p) = 1, if any.
inline std::optional<i64> smallest_split_prime(const FieldSpec& spec, i64 bound) {
    if (bound < 2) throw std::invalid_argument("smallest_split_prime: bound must be >= 2");
    for (i64 p = 2; p <= bound; p = (p == 2 ? 3 : p + 2))
        if (is_prime(p) && kronecker_chi(spec.D, p) == 1) return p;
    return std::nullopt;
}

/// All primes <= n by Eratosthenes.
inline std::vector<i64> primes_up_to(i64 n) {
    std::vector<i64> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
    for (i64 p = 2; p <= n; ++p) {
        if (comp[static_cast<size_t>(p)]) continue;
        out.push_back(p);
        for (i64 q = p * p; q <= n; q += p) comp[static_cast<size_t>(q)] = true;
    }
    return out;
}

/// Smallest-prime-factor table for 0..n (spf[0] = spf[1] = 0).
inline std::vector<i64> spf_table(i64 n) {
    std::vector<i64> spf(static_cast<size_t>(n) + 1, 0);
    for (i64 i = 2; i <= n; ++i) {
        if (spf[static_cast<size_t>(i)] != 0) continue;
        for (i64 j = i; j <= n; j += i)
            if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = i;
    }
    return spf;
}

/// Square-free flags for the block [lo, hi]: flags[i] says lo+i is square-free.
/// `primes` must contain every prime p with p*p <= hi.
inline std::vector<std::uint8_t> squarefree_block(i64 lo, i64 hi,
                                                  const std::vector<i64>& primes) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("squarefree_block: bad range");
    std::vector<std::uint8_t> flags(static_cast<size_t>(hi - lo + 1), 1);
    for (i64 p : primes) {
        i64 pp = p * p;
        if (pp > hi) break;
        for (i64 m = ceil_div(lo, pp) * pp; m <= hi; m += pp)
            flags[static_cast<size_t>(m - lo)] = 0;
    }
    return flags;
}

}  // namespace caliber
