#pragma once

// Checks of the caliber estimates on concrete fields.
//
//   sandwich:    sum_{4A^2 < D} rho_D(A)  <=  kappa(D)  <=  sum_{A^2 < D} rho_D(A)
//   lowerbound:  kappa(d) > 2 * max{ alpha >= 0 : 4 p^(2 alpha) < D }    (p split)
//   pow2:        2^(kappa(d)+4) > d                                      (d == 1 mod 8)
//   splitprime:  for prime d outside the caliber-one list, some prime
//                p <= sqrt(D) splits
//
// Every check reports a verdict instead of asserting, so sweeps can carry
// failing fields along as data.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "caliber/arith.hpp"
#include "caliber/forms.hpp"
#include "caliber/ideals.hpp"

namespace caliber {

enum class Verdict { Pass, Fail, Vacuous };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "vacuous";
    }
}

/// One split prime p with the exponent count e = max{alpha : 4 p^(2 alpha) < D};
/// the claimed strict bound is kappa > 2e.
struct SplitBoundEntry {
    i64 p;
    i64 max_exponent;
    i64 bound;
    bool strict;
};

struct BoundReport {
    i64 d = 0;
    i64 D = 0;
    i64 lower_sum = 0;
    i64 upper_sum = 0;
    i64 kappa = 0;
    bool lower_ok = false;
    bool upper_ok = false;
    std::vector<SplitBoundEntry> split_bounds;

    Verdict sandwich_verdict() const { return lower_ok && upper_ok ? Verdict::Pass : Verdict::Fail; }
    Verdict split_verdict() const {
        if (split_bounds.empty()) return Verdict::Vacuous;
        for (const auto& e : split_bounds)
            if (!e.strict) return Verdict::Fail;
        return Verdict::Pass;
    }
};

/// max{alpha >= 0 : 4 p^(2 alpha) < D}, i.e. the number of powers p^alpha
/// below sqrt(D)/2 with alpha >= 1.
inline i64 split_exponent_count(i64 p, i64 D) {
    i64 e = 0;
    i128 pw = p;
    while (4 * pw * pw < D) {
        ++e;
        pw *= p;
    }
    return e;
}

/// 2 * split_exponent_count, the claimed strict lower bound for kappa(d).
inline i64 split_lower_bound(i64 d, i64 p) {
    FieldSpec fs = field_spec(d);
    if (!is_prime(p)) throw std::invalid_argument("split_lower_bound: p must be prime");
    if (kronecker_chi(fs.D, p) != 1)
        throw std::invalid_argument("split_lower_bound: p does not split in Q(sqrt(d))");
    return 2 * split_exponent_count(p, fs.D);
}

/// Evaluate both sandwich sums and every split bound for primes < split_limit.
/// rho_of(A, D) supplies the residue counts so callers can swap in the
/// formula route; the default is the direct scan.
template <class RhoFn>
BoundReport bound_report_with(i64 d, RhoFn&& rho_of, i64 split_limit = 100) {
    FieldSpec fs = field_spec(d);
    BoundReport rep;
    rep.d = d;
    rep.D = fs.D;
    for (i64 A = 1; 4 * static_cast<i128>(A) * A < fs.D; ++A) rep.lower_sum += rho_of(A, fs.D);
    for (i64 A = 1; static_cast<i128>(A) * A < fs.D; ++A) rep.upper_sum += rho_of(A, fs.D);
    rep.kappa = caliber(fs.D);
    rep.lower_ok = rep.lower_sum <= rep.kappa;
    rep.upper_ok = rep.kappa <= rep.upper_sum;
    for (i64 p : primes_up_to(split_limit - 1)) {
        if (kronecker_chi(fs.D, p) != 1) continue;
        i64 e = split_exponent_count(p, fs.D);
        rep.split_bounds.push_back(SplitBoundEntry{p, e, 2 * e, rep.kappa > 2 * e});
    }
    return rep;
}

inline BoundReport bound_report(i64 d, i64 split_limit = 100) {
    return bound_report_with(d, [](i64 A, i64 D) { return rho(A, D); }, split_limit);
}

struct Pow2Report {
    i64 d = 0;
    i64 kappa = 0;
    bool holds = false;
};

/// 2^(kappa+4) > d for square-free d == 1 (mod 8).
inline Pow2Report check_pow2_growth(i64 d) {
    FieldSpec fs = field_spec(d);
    if (mod_floor(d, 8) != 1)
        throw std::invalid_argument("check_pow2_growth: requires d == 1 (mod 8)");
    Pow2Report rep;
    rep.d = d;
    rep.kappa = caliber(fs.D);
    rep.holds = rep.kappa + 4 >= 63 || (i64{1} << (rep.kappa + 4)) > d;
    return rep;
}

/// Verdict form of the same corollary given precomputed kappa.
inline Verdict pow2_verdict(i64 d, i64 kappa) {
    if (mod_floor(d, 8) != 1) return Verdict::Vacuous;
    bool holds = kappa + 4 >= 63 || (i64{1} << (kappa + 4)) > d;
    return holds ? Verdict::Pass : Verdict::Fail;
}

/// Smallest split prime p <= sqrt(D) for prime d outside `excluded` (the
/// caliber-one fields, where nothing is claimed).  nullopt means the claimed
/// prime does not exist; callers surface that as an anomaly.
inline std::optional<i64> split_prime_below_sqrtD(i64 d, const std::vector<i64>& excluded) {
    if (!is_prime(d)) throw std::invalid_argument("split_prime_below_sqrtD: d must be prime");
    for (i64 s : excluded)
        if (s == d)
            throw std::invalid_argument("split_prime_below_sqrtD: claim excludes d = " +
                                        std::to_string(d));
    FieldSpec fs = field_spec(d);
    return smallest_split_prime(fs, isqrt(fs.D));
}

}  // namespace caliber
