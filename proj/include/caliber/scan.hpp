#pragma once

// Deterministic range scanner and batch verification suites.
//
// Reduced forms [A, -m, -k] of discriminant D are exactly the triples
// a, m, k >= 1 with D = m^2 + 4ak and |a - k| < m (squaring the window
// inequalities of the reduced condition shows the equivalence, and for
// fundamental D primitivity is automatic).  Walking (m, a, k) once per
// D-block therefore prices the whole block at the number of reduced forms
// in it, instead of one enumeration per field.  Records are assembled only
// for fields passing the filters, in ascending d; a worker pool computes
// blocks out of order and a single merger re-serializes them, so output
// bytes never depend on the job count.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "caliber/arith.hpp"
#include "caliber/classify.hpp"
#include "caliber/contfrac.hpp"
#include "caliber/forms.hpp"
#include "caliber/ideals.hpp"
#include "caliber/theorems.hpp"

namespace caliber {

inline constexpr i64 kScanBlockWidth = i64{1} << 12;

/// Largest scannable d; keeps every intermediate (D, window bounds, block
/// products) comfortably inside i64.
inline constexpr i64 kMaxScanHi = 4'000'000'000;

inline constexpr i64 kSplitPrimeLimit = 100;     // lowerbound verdict looks below this
inline constexpr i64 kSampleALimit = 10'000;     // multiplicativity / convolution grids
inline constexpr int kMultSampleFields = 50;
inline constexpr int kConvSampleFields = 20;
inline constexpr int kCoprimePairSamples = 200;

struct ScanRecord {
    i64 d = 0;
    i64 D = 0;
    i64 kappa = 0;
    i64 h = 0;
    std::vector<i64> cycle_sizes;             // ascending
    std::vector<QuadForm> forms;              // sorted by (A, B)
    std::optional<i64> smallest_split_prime;  // smallest split p <= sqrt(D)
    std::optional<RDRepresentation> rd;       // smallest-n representation
    FamilyMatch family;
    Verdict sandwich = Verdict::Vacuous;
    Verdict lowerbound = Verdict::Vacuous;
    Verdict pow2 = Verdict::Vacuous;
    Verdict prop31 = Verdict::Vacuous;
    Verdict prop36 = Verdict::Vacuous;
    bool anomaly = false;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct ScanOptions {
    i64 lo = 2;
    i64 hi = 2;
    std::optional<i64> kappa;        // keep records with this caliber
    std::optional<i64> class_count;  // keep records with this h
    std::optional<int> mod8;         // keep d with this residue mod 8
    bool mod8_not5 = false;          // keep d != 5 (mod 8)
    std::optional<std::string> family;  // n2p1 n2p4 n2p2 n2m2 none multiple
    int jobs = 1;
};

namespace detail {

// Visit every triple (a, m, k) with D = m^2 + 4ak in [Dlo, Dhi], |a-k| < m
// and m of the given parity (1: odd, 0: even).  fn(D, a, m, k) must be
// cheap; the loop order is m, then a, then k (D ascends within each (m,a)).
template <class Fn>
void visit_reduced_triples(i64 Dlo, i64 Dhi, int m_parity, Fn&& fn) {
    for (i64 m = m_parity ? 1 : 2; m * m + 4 <= Dhi; m += 2) {
        i64 mm = m * m;
        i64 rest = Dlo - mm;
        // First a whose largest D, m^2 + 4a(a+m-1), can reach Dlo.
        i64 a0 = 1;
        if (rest > 4) {
            i64 root = isqrt(rest);
            a0 = std::max<i64>(1, (root - m + 1) / 2 - 1);
        }
        for (i64 a = a0;; ++a) {
            i64 kmin = a <= m ? 1 : a - m + 1;
            if (mm + 4 * a * kmin > Dhi) break;
            i64 kmax = a + m - 1;
            i64 klo = std::max(kmin, ceil_div(rest, 4 * a));
            i64 khi = std::min(kmax, (Dhi - mm) / (4 * a));
            if (klo > khi) continue;
            i64 D = mm + 4 * a * klo;
            i64 step = 4 * a;
            for (i64 k = klo; k <= khi; ++k, D += step) fn(D, a, m, k);
        }
    }
}

// rho_by_formula with factorization served by a smallest-prime-factor table.
inline i64 rho_formula_spf(i64 A, i64 D, const std::vector<i64>& spf) {
    i64 result = 1;
    while (A > 1) {
        i64 p = spf[static_cast<size_t>(A)];
        int e = 0;
        while (A % p == 0) {
            A /= p;
            ++e;
        }
        if (D % p == 0) {
            if (e > 1) return 0;
        } else {
            i64 f = 1 + kronecker_chi(D, p);
            if (f == 0) return 0;
            result *= f;
        }
    }
    return result;
}

}  // namespace detail

/// Assemble the full record for one field from its sorted reduced forms.
/// rho_of(A, D) feeds the sandwich sums.
template <class RhoFn>
ScanRecord make_record(const FieldSpec& fs, std::vector<QuadForm> forms, RhoFn&& rho_of) {
    ScanRecord rec;
    rec.d = fs.d;
    rec.D = fs.D;
    CycleDecomposition dec = cycle_decomposition_of(std::move(forms), fs.D);
    rec.kappa = dec.caliber();
    rec.h = dec.class_count();
    rec.cycle_sizes = dec.cycle_sizes();
    for (auto& cyc : dec.cycles)
        for (auto& f : cyc) rec.forms.push_back(f);
    std::sort(rec.forms.begin(), rec.forms.end());
    rec.smallest_split_prime = smallest_split_prime(fs, isqrt(fs.D));
    rec.rd = minimal_rd(fs.d);
    rec.family = special_family(fs.d);

    i64 lower = 0, upper = 0;
    for (i64 A = 1; static_cast<i128>(A) * A < fs.D; ++A) {
        i64 r = rho_of(A, fs.D);
        upper += r;
        if (4 * static_cast<i128>(A) * A < fs.D) lower += r;
    }
    rec.sandwich = lower <= rec.kappa && rec.kappa <= upper ? Verdict::Pass : Verdict::Fail;

    bool any_split = false, all_strict = true;
    for (i64 p : primes_up_to(kSplitPrimeLimit - 1)) {
        if (kronecker_chi(fs.D, p) != 1) continue;
        any_split = true;
        if (rec.kappa <= 2 * split_exponent_count(p, fs.D)) all_strict = false;
    }
    rec.lowerbound = !any_split ? Verdict::Vacuous : all_strict ? Verdict::Pass : Verdict::Fail;

    rec.pow2 = pow2_verdict(fs.d, rec.kappa);
    rec.prop31 = caliber_one_shape_verdict(rec.kappa, rec.h, rec.family);
    rec.prop36 = caliber_two_shape_verdict(fs.d, rec.kappa, rec.h, rec.rd.has_value());

    bool fixture_mismatch = (rec.kappa == 1) != in_list(kCaliberOneFields, fs.d);
    if (mod_floor(fs.d, 8) != 5 &&
        (rec.kappa == 2) != in_list(kCaliberTwoFieldsNot5Mod8, fs.d))
        fixture_mismatch = true;
    bool corollary_gap = !rec.smallest_split_prime.has_value() && is_prime(fs.d) &&
                         !in_list(kCaliberOneFields, fs.d);
    bool verdict_fail = rec.sandwich == Verdict::Fail || rec.lowerbound == Verdict::Fail ||
                        rec.pow2 == Verdict::Fail || rec.prop31 == Verdict::Fail ||
                        rec.prop36 == Verdict::Fail;
    rec.anomaly = verdict_fail || fixture_mismatch || corollary_gap;
    return rec;
}

/// Record for a single field, built from scratch by direct enumeration.
inline ScanRecord single_record(i64 d) {
    FieldSpec fs = field_spec(d);
    return make_record(fs, enumerate_reduced(fs.D),
                       [](i64 A, i64 D) { return rho_by_formula(A, D); });
}

namespace detail {

struct BlockContext {
    const ScanOptions* opt;
    const std::vector<i64>* sieve_primes;  // for squarefree_block
    const std::vector<i64>* spf;           // up to isqrt(4 hi)
};

inline bool family_filter_matches(const FamilyMatch& fam, const std::string& want) {
    if (want == "n2p1") return fam.n2p1;
    if (want == "n2p4") return fam.n2p4;
    if (want == "n2p2") return fam.n2p2;
    if (want == "n2m2") return fam.n2m2;
    if (want == "none") return fam.count() == 0;
    if (want == "multiple") return fam.count() >= 2;
    throw std::invalid_argument("unknown family filter: " + want);
}

inline std::vector<ScanRecord> build_block(const BlockContext& ctx, i64 lo, i64 hi) {
    const ScanOptions& opt = *ctx.opt;
    i64 len = hi - lo + 1;
    std::vector<std::uint8_t> sqfree = squarefree_block(lo, hi, *ctx.sieve_primes);

    std::vector<std::uint8_t> cand(static_cast<size_t>(len), 0);
    std::vector<FamilyMatch> fams(static_cast<size_t>(len));
    i64 ncand = 0;
    for (i64 d = lo; d <= hi; ++d) {
        size_t i = static_cast<size_t>(d - lo);
        if (d < 2 || !sqfree[i]) continue;
        i64 res = mod_floor(d, 8);
        if (opt.mod8_not5 && res == 5) continue;
        if (opt.mod8 && res != *opt.mod8) continue;
        fams[i] = special_family(d);
        if (opt.family && !family_filter_matches(fams[i], *opt.family)) continue;
        cand[i] = 1;
        ++ncand;
    }
    if (ncand == 0) return {};

    // Counting pass: cheap caliber prefilter when --kappa is given.  Counts
    // at non-fundamental indices are garbage and never read.
    if (opt.kappa) {
        std::vector<std::uint32_t> cnt(static_cast<size_t>(len), 0);
        visit_reduced_triples(lo, hi, 1, [&](i64 D, i64, i64, i64) {
            ++cnt[static_cast<size_t>(D - lo)];
        });
        // Even-m triples of 4d matter only when 4d is the fundamental
        // discriminant, i.e. d = 2, 3 mod 4; for d = 1 mod 4 they would
        // contaminate the field whose own discriminant is d.
        visit_reduced_triples(4 * lo, 4 * hi, 0, [&](i64 D, i64, i64, i64) {
            i64 dd = D / 4;
            if ((dd & 3) != 1) ++cnt[static_cast<size_t>(dd - lo)];
        });
        i64 want = *opt.kappa;
        ncand = 0;
        for (size_t i = 0; i < cand.size(); ++i) {
            if (cand[i] && cnt[i] != static_cast<std::uint32_t>(want)) cand[i] = 0;
            ncand += cand[i];
        }
        if (ncand == 0) return {};
    }

    // Collection pass: gather forms for surviving candidates only.
    std::vector<std::int32_t> slot(static_cast<size_t>(len), -1);
    std::vector<std::vector<QuadForm>> forms_of;
    for (i64 d = lo; d <= hi; ++d) {
        size_t i = static_cast<size_t>(d - lo);
        if (!cand[i]) continue;
        slot[i] = static_cast<std::int32_t>(forms_of.size());
        forms_of.emplace_back();
    }
    visit_reduced_triples(lo, hi, 1, [&](i64 D, i64 a, i64 m, i64 k) {
        std::int32_t s = slot[static_cast<size_t>(D - lo)];
        if (s >= 0) forms_of[static_cast<size_t>(s)].push_back(QuadForm{a, -m, -k});
    });
    visit_reduced_triples(4 * lo, 4 * hi, 0, [&](i64 D, i64 a, i64 m, i64 k) {
        i64 dd = D / 4;
        if ((dd & 3) == 1) return;  // field discriminant is dd itself, not 4 dd
        std::int32_t s = slot[static_cast<size_t>(dd - lo)];
        if (s >= 0) forms_of[static_cast<size_t>(s)].push_back(QuadForm{a, -m, -k});
    });

    std::vector<ScanRecord> out;
    const std::vector<i64>& spf = *ctx.spf;
    for (i64 d = lo; d <= hi; ++d) {
        size_t i = static_cast<size_t>(d - lo);
        if (!cand[i]) continue;
        auto& forms = forms_of[static_cast<size_t>(slot[i])];
        std::sort(forms.begin(), forms.end());
        FieldSpec fs = field_spec(d);
        ScanRecord rec = make_record(fs, std::move(forms), [&](i64 A, i64 D) {
            return rho_formula_spf(A, D, spf);
        });
        if (opt.kappa && rec.kappa != *opt.kappa)
            throw std::logic_error("scan: triple count disagrees with cycle total at d = " +
                                   std::to_string(d));
        if (opt.class_count && rec.h != *opt.class_count) continue;
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace detail

/// Stream records for all square-free d in [lo, hi] passing the filters,
/// in ascending d.  Output is byte-identical for any jobs value.
inline void scan_range(const ScanOptions& opt,
                       const std::function<void(const ScanRecord&)>& sink) {
    if (opt.lo < 2 || opt.lo > opt.hi)
        throw std::invalid_argument("scan_range: need 2 <= lo <= hi");
    if (opt.hi > kMaxScanHi)
        throw std::invalid_argument("scan_range: hi exceeds the supported limit " +
                                    std::to_string(kMaxScanHi));
    if (opt.jobs < 1) throw std::invalid_argument("scan_range: jobs must be >= 1");
    if (opt.family) detail::family_filter_matches(FamilyMatch{}, *opt.family);
    if (opt.mod8 && (*opt.mod8 < 0 || *opt.mod8 > 7))
        throw std::invalid_argument("scan_range: mod8 residue must be in [0, 7]");

    std::vector<i64> sieve_primes = primes_up_to(isqrt(opt.hi) + 1);
    std::vector<i64> spf = spf_table(isqrt(4 * opt.hi) + 1);
    detail::BlockContext ctx{&opt, &sieve_primes, &spf};

    i64 nblocks = (opt.hi - opt.lo) / kScanBlockWidth + 1;
    auto block_range = [&](i64 b, i64& blo, i64& bhi) {
        blo = opt.lo + b * kScanBlockWidth;
        bhi = std::min(opt.hi, blo + kScanBlockWidth - 1);
    };

    if (opt.jobs == 1) {
        for (i64 b = 0; b < nblocks; ++b) {
            i64 blo, bhi;
            block_range(b, blo, bhi);
            for (const ScanRecord& rec : detail::build_block(ctx, blo, bhi)) sink(rec);
        }
        return;
    }

    std::mutex mu;
    std::condition_variable cv;
    std::map<i64, std::vector<ScanRecord>> ready;
    std::atomic<i64> next_claim{0};
    i64 emit_next = 0;
    const i64 window = opt.jobs + 2;
    bool failed = false;
    std::exception_ptr error;

    auto worker = [&]() {
        while (true) {
            i64 b = next_claim.fetch_add(1);
            if (b >= nblocks) return;
            {
                std::unique_lock<std::mutex> lk(mu);
                cv.wait(lk, [&] { return failed || b < emit_next + window; });
                if (failed) return;
            }
            try {
                i64 blo, bhi;
                block_range(b, blo, bhi);
                std::vector<ScanRecord> recs = detail::build_block(ctx, blo, bhi);
                std::lock_guard<std::mutex> lk(mu);
                ready.emplace(b, std::move(recs));
                cv.notify_all();
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!failed) {
                    failed = true;
                    error = std::current_exception();
                }
                cv.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(opt.jobs));
    for (int t = 0; t < opt.jobs; ++t) pool.emplace_back(worker);

    try {
        for (i64 b = 0; b < nblocks; ++b) {
            std::vector<ScanRecord> recs;
            {
                std::unique_lock<std::mutex> lk(mu);
                cv.wait(lk, [&] { return failed || ready.count(b) != 0; });
                if (failed) break;
                recs = std::move(ready[b]);
                ready.erase(b);
                emit_next = b + 1;
                cv.notify_all();
            }
            for (const ScanRecord& rec : recs) sink(rec);
        }
    } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!failed) {
            failed = true;
            error = std::current_exception();
        }
        cv.notify_all();
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

/// Overload materializing the stream.
inline std::vector<ScanRecord> scan_range(const ScanOptions& opt) {
    std::vector<ScanRecord> out;
    scan_range(opt, [&](const ScanRecord& rec) { out.push_back(rec); });
    return out;
}

struct SuiteReport {
    std::string name;
    i64 lo = 0;
    i64 hi = 0;
    i64 checked = 0;
    i64 passed = 0;
    i64 failed = 0;
    i64 vacuous = 0;
    std::vector<i64> failing_d;
    std::vector<i64> anomalous_d;
    std::vector<std::string> notes;

    bool ok() const { return failed == 0; }
};

namespace detail {

/// Evenly spaced square-free sample from [lo, hi], deterministic.
inline std::vector<i64> sample_squarefree(i64 lo, i64 hi, int count) {
    std::vector<i64> all;
    for (i64 d = std::max<i64>(2, lo); d <= hi; ++d)
        if (is_square_free(d)) all.push_back(d);
    if (all.empty()) return all;
    if (static_cast<i64>(all.size()) <= count) return all;
    std::vector<i64> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(all[static_cast<size_t>(i) * (all.size() - 1) / (count - 1)]);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <class Fn>
void for_each_squarefree(i64 lo, i64 hi, Fn&& fn) {
    for (i64 d = std::max<i64>(2, lo); d <= hi; ++d)
        if (is_square_free(d)) fn(d);
}

}  // namespace detail

/// Run one named invariant over [lo, hi].  Anomalies (claim hypotheses that
/// fail empirically) are reported separately from failures and do not
/// affect ok().
inline SuiteReport verify_suite(const std::string& name, i64 lo, i64 hi) {
    if (lo < 2 || lo > hi) throw std::invalid_argument("verify_suite: need 2 <= lo <= hi");
    if (hi > kMaxScanHi)
        throw std::invalid_argument("verify_suite: hi exceeds the supported limit");
    SuiteReport rep;
    rep.name = name;
    rep.lo = lo;
    rep.hi = hi;

    auto tally = [&](i64 d, Verdict v) {
        ++rep.checked;
        if (v == Verdict::Pass) ++rep.passed;
        else if (v == Verdict::Vacuous) ++rep.vacuous;
        else {
            ++rep.failed;
            rep.failing_d.push_back(d);
        }
    };

    if (name == "sandwich") {
        detail::for_each_squarefree(lo, hi, [&](i64 d) {
            BoundReport br = bound_report(d, kSplitPrimeLimit);
            tally(d, br.sandwich_verdict());
            if (!br.lower_ok || !br.upper_ok)
                rep.notes.push_back("d=" + std::to_string(d) + ": sums " +
                                    std::to_string(br.lower_sum) + " <= " +
                                    std::to_string(br.kappa) + " <= " +
                                    std::to_string(br.upper_sum) + " violated");
        });
    } else if (name == "lowerbound") {
        detail::for_each_squarefree(lo, hi, [&](i64 d) {
            FieldSpec fs = field_spec(d);
            i64 kappa = caliber(fs.D);
            bool any = false, strict = true;
            for (i64 p : primes_up_to(kSplitPrimeLimit - 1)) {
                if (kronecker_chi(fs.D, p) != 1) continue;
                any = true;
                i64 bound = 2 * split_exponent_count(p, fs.D);
                if (kappa <= bound) {
                    strict = false;
                    rep.notes.push_back("d=" + std::to_string(d) + ": kappa " +
                                        std::to_string(kappa) + " not > bound " +
                                        std::to_string(bound) + " at p=" + std::to_string(p));
                }
            }
            tally(d, !any ? Verdict::Vacuous : strict ? Verdict::Pass : Verdict::Fail);
        });
    } else if (name == "pow2") {
        // Caliber via the triple counter, blockwise; only d = 1 (mod 8) read.
        std::vector<i64> primes = primes_up_to(isqrt(hi) + 1);
        for (i64 blo = lo; blo <= hi; blo += kScanBlockWidth) {
            i64 bhi = std::min(hi, blo + kScanBlockWidth - 1);
            auto sqfree = squarefree_block(blo, bhi, primes);
            std::vector<std::uint32_t> cnt(static_cast<size_t>(bhi - blo + 1), 0);
            detail::visit_reduced_triples(blo, bhi, 1, [&](i64 D, i64, i64, i64) {
                ++cnt[static_cast<size_t>(D - blo)];
            });
            for (i64 d = blo; d <= bhi; ++d) {
                if (mod_floor(d, 8) != 1 || !sqfree[static_cast<size_t>(d - blo)]) continue;
                i64 kappa = cnt[static_cast<size_t>(d - blo)];
                tally(d, pow2_verdict(d, kappa));
            }
        }
    } else if (name == "multiplicativity") {
        for (i64 d : detail::sample_squarefree(lo, hi, kMultSampleFields)) {
            FieldSpec fs = field_spec(d);
            std::vector<i64> direct(static_cast<size_t>(kSampleALimit) + 1, 0);
            bool bad = false;
            for (i64 A = 1; A <= kSampleALimit; ++A) {
                direct[static_cast<size_t>(A)] = rho(A, fs.D);
                if (direct[static_cast<size_t>(A)] != rho_by_formula(A, fs.D)) {
                    bad = true;
                    rep.notes.push_back("d=" + std::to_string(d) + ": rho(" + std::to_string(A) +
                                        ") scan/formula mismatch");
                }
            }
            std::mt19937_64 rng(0x6b17a5e5u ^ static_cast<std::uint64_t>(d));
            for (int i = 0; i < kCoprimePairSamples; ++i) {
                i64 n = 2 + static_cast<i64>(rng() % 99);
                i64 mmax = kSampleALimit / n;
                if (mmax < 2) continue;
                i64 m = 2 + static_cast<i64>(rng() % static_cast<std::uint64_t>(mmax - 1));
                if (std::gcd(n, m) != 1) continue;
                if (direct[static_cast<size_t>(n * m)] !=
                    direct[static_cast<size_t>(n)] * direct[static_cast<size_t>(m)]) {
                    bad = true;
                    rep.notes.push_back("d=" + std::to_string(d) + ": rho(" + std::to_string(n) +
                                        "*" + std::to_string(m) + ") not multiplicative");
                }
            }
            tally(d, bad ? Verdict::Fail : Verdict::Pass);
        }
    } else if (name == "convolution") {
        for (i64 d : detail::sample_squarefree(lo, hi, kConvSampleFields)) {
            FieldSpec fs = field_spec(d);
            std::vector<i64> rho_of(static_cast<size_t>(kSampleALimit) + 1, 0);
            for (i64 A = 1; A <= kSampleALimit; ++A) rho_of[static_cast<size_t>(A)] = rho(A, fs.D);
            bool bad = false;
            for (i64 N = 1; N <= kSampleALimit; ++N) {
                i64 sum = 0;
                for (i64 f = 1; f * f <= N; ++f)
                    if (N % (f * f) == 0) sum += rho_of[static_cast<size_t>(N / (f * f))];
                if (sum != ideal_count(N, fs.D)) {
                    bad = true;
                    rep.notes.push_back("d=" + std::to_string(d) + ": convolution fails at N=" +
                                        std::to_string(N));
                }
            }
            tally(d, bad ? Verdict::Fail : Verdict::Pass);
        }
    } else if (name == "prop31") {
        detail::for_each_squarefree(lo, hi, [&](i64 d) {
            tally(d, check_caliber_one_shape(d));
        });
    } else if (name == "prop36") {
        detail::for_each_squarefree(lo, hi, [&](i64 d) {
            if (mod_floor(d, 8) == 5) {
                tally(d, Verdict::Vacuous);
                return;
            }
            tally(d, check_caliber_two_shape(d));
        });
    } else if (name == "corollary-splitprime") {
        for (i64 d = std::max<i64>(2, lo); d <= hi; ++d) {
            if (!is_prime(d)) continue;
            if (in_list(kCaliberOneFields, d)) {
                tally(d, Verdict::Vacuous);
                continue;
            }
            if (split_prime_below_sqrtD(d, kCaliberOneFields).has_value()) {
                tally(d, Verdict::Pass);
            } else {
                ++rep.checked;
                rep.anomalous_d.push_back(d);
                rep.notes.push_back("d=" + std::to_string(d) +
                                    ": no split prime <= sqrt(D) despite prime d outside the "
                                    "caliber-one list");
            }
        }
    } else {
        throw std::invalid_argument("verify_suite: unknown suite " + name);
    }
    return rep;
}

}  // namespace caliber
