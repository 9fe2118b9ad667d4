// Brute-force reference implementations used only by the tests.  Each oracle
// recomputes a quantity from its definition, avoiding the library's code
// paths, so agreement is evidence rather than tautology.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "caliber/arith.hpp"
#include "caliber/forms.hpp"

namespace oracle {

using caliber::i64;

// Legendre symbol by scanning for square roots mod an odd prime.
inline int legendre_scan(i64 a, i64 p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    for (i64 x = 1; x <= p / 2; ++x)
        if (x * x % p == a) return 1;
    return -1;
}

// chi_D at a prime, from first principles.  At 2 the symbol is +1 for
// D = +-1 (mod 8) and -1 for D = +-3 (mod 8), the Kronecker convention.
inline int chi_prime(i64 D, i64 p) {
    if (p == 2) {
        if (D % 2 == 0) return 0;
        i64 r = ((D % 8) + 8) % 8;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    return legendre_scan(D, p);
}

// chi_D at any n >= 1 by complete multiplicativity over the factorization.
inline int chi(i64 D, i64 n) {
    int result = 1;
    for (i64 p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            n /= p;
            result *= chi_prime(D, p);
            if (result == 0) return 0;
        }
    }
    if (n > 1) result *= chi_prime(D, n);
    return result;
}

// Number of ideals of norm n as the divisor sum of the character,
// the Dirichlet-series identity zeta_K = zeta * L(chi).
inline i64 ideal_count_divisor_sum(i64 n, i64 D) {
    i64 sum = 0;
    for (i64 m = 1; m <= n; ++m)
        if (n % m == 0) sum += chi(D, m);
    return sum;
}

// rho_D(A): residues B mod 2A with B^2 = D (mod 4A), by full scan.
inline std::vector<i64> rho_residues_scan(i64 A, i64 D) {
    std::vector<i64> out;
    for (i64 B = 0; B < 2 * A; ++B)
        if ((((B * B - D) % (4 * A)) + 4 * A) % (4 * A) == 0) out.push_back(B);
    return out;
}

// Every reduced form of discriminant D by scanning the (A, B) box, with the
// inequalities written as squared comparisons distinct from the library's.
inline std::vector<caliber::QuadForm> reduced_forms_scan(i64 D) {
    std::vector<caliber::QuadForm> out;
    i64 s = caliber::isqrt(D);
    for (i64 A = 1; A <= s; ++A) {  // 2A < sqrt(D)+|B| < 2 sqrt(D)+1 forces A <= s
        for (i64 B = -s; B < 0; ++B) {
            if (B * B >= D) continue;
            if ((B * B - D) % (4 * A) != 0) continue;
            i64 C = (B * B - D) / (4 * A);
            if (C >= 0) continue;
            i64 nb = -B;
            // sqrt(D) < 2A + |B|  and  2A < sqrt(D) + |B|.
            if (D >= (2 * A + nb) * (2 * A + nb)) continue;
            if (2 * A - nb >= 0 && (2 * A - nb) * (2 * A - nb) >= D) continue;
            i64 g = std::gcd(std::gcd(A, nb), -C);
            if (g != 1) continue;
            out.push_back(caliber::QuadForm{A, B, C});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All representations d = n^2 + r with r != 0 and r | 4n, scanning far past
// the window the library proves sufficient.  |r| <= 4n bounds n to this range.
inline std::vector<std::pair<i64, i64>> rd_scan(i64 d) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 n = 1; n <= caliber::isqrt(d) + 5; ++n) {
        i64 r = d - n * n;
        if (r == 0) continue;
        if ((4 * n) % r != 0) continue;
        out.emplace_back(n, r);
    }
    return out;
}

// Textbook continued-fraction driver for x = (P + sqrt(d))/Q with the
// invariant Q | d - P^2.  States are ground truth for minimal (preperiod,
// period): within one expansion the state determines the value and vice versa.
struct CFOracle {
    std::vector<i64> digits;
    i64 preperiod = 0;
    i64 period = 0;

    CFOracle(i64 P, i64 Q, i64 d) {
        i64 s = caliber::isqrt(d);
        std::map<std::pair<i64, i64>, i64> seen;
        for (i64 step = 0;; ++step) {
            auto it = seen.find({P, Q});
            if (it != seen.end()) {
                preperiod = it->second;
                period = step - it->second;
                return;
            }
            seen[{P, Q}] = step;
            i64 a = Q > 0 ? caliber::floor_div(P + s, Q) : caliber::floor_div(-P - s - 1, -Q);
            digits.push_back(a);
            i64 P2 = a * Q - P;
            i64 num = d - P2 * P2;
            if (num % Q != 0) throw std::logic_error("cf oracle: invariant broken");
            P = P2;
            Q = num / Q;
        }
    }
};

}  // namespace oracle
