#pragma once

// Richaud-Degert shape detection and the finite classification lists.
//
// d = n^2 + r with r | 4n is the shape forced on fields with very small
// caliber.  The special families n^2+1, n^2+4, n^2+-2 refine it, and the
// finite lists below say exactly which fields of each shape reach class
// number one or caliber one / two.  Shape checks here are pure integer
// scans; the caliber / class counts they get compared against come from
// forms.hpp.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "caliber/arith.hpp"
#include "caliber/forms.hpp"
#include "caliber/theorems.hpp"

namespace caliber {

/// The six fields with exactly one reduced form.
inline const std::vector<i64> kCaliberOneFields = {2, 13, 29, 53, 173, 293};

/// The six fields with two reduced forms among d != 5 (mod 8).
inline const std::vector<i64> kCaliberTwoFieldsNot5Mod8 = {3, 6, 11, 38, 83, 227};

/// Class-number-one fields of shape n^2 + 4, as classified.
inline const std::vector<i64> kClassOneN2Plus4 = {13, 19, 53, 173, 293};

/// Class-number-one fields of shape n^2 + 1, as classified.
inline const std::vector<i64> kClassOneN2Plus1 = {2, 17, 37, 101, 197, 677};

/// Class-number-one fields of shape n^2 +- 2, as classified.
inline const std::vector<i64> kClassOneN2PlusMinus2 = {3,  6,  7,  11,  14,  23, 38,
                                                       47, 62, 83, 167, 227, 398};

/// Fields allowed to keep h = 1 outside the |r| = 2 shapes.
inline const std::vector<i64> kClassOneRDExceptions = {2, 3, 17, 33};

inline bool in_list(const std::vector<i64>& xs, i64 d) {
    return std::find(xs.begin(), xs.end(), d) != xs.end();
}

/// d = n^2 + r with r | 4n, r != 0.  divides_2n marks the stronger r | 2n,
/// classical_range marks -n < r <= n.
struct RDRepresentation {
    i64 n;
    i64 r;
    bool divides_2n;
    bool classical_range;

    friend bool operator==(const RDRepresentation&, const RDRepresentation&) = default;
};

/// All representations in increasing n.  |r| <= 4n traps n in a short window
/// around isqrt(d): r > 0 forces (n+2)^2 >= d+4, r < 0 forces
/// (n-2)^2 <= d+4, so [isqrt(d)-3, isqrt(d)+3] covers every solution.
inline std::vector<RDRepresentation> rd_representations(i64 d) {
    field_spec(d);
    std::vector<RDRepresentation> out;
    i64 s = isqrt(d);
    for (i64 n = std::max<i64>(1, s - 3); n <= s + 3; ++n) {
        i64 r = d - n * n;
        if (r == 0 || (4 * n) % r != 0) continue;
        out.push_back(RDRepresentation{n, r, (2 * n) % r == 0, -n < r && r <= n});
    }
    return out;
}

inline bool is_rd_type(i64 d) { return !rd_representations(d).empty(); }

/// Representation with the smallest n, if any.
inline std::optional<RDRepresentation> minimal_rd(i64 d) {
    auto reps = rd_representations(d);
    if (reps.empty()) return std::nullopt;
    return reps.front();
}

/// Membership in the four special families (n >= 1, so d >= 2 throughout).
struct FamilyMatch {
    bool n2p1 = false;  // n^2 + 1
    bool n2p4 = false;  // n^2 + 4
    bool n2p2 = false;  // n^2 + 2
    bool n2m2 = false;  // n^2 - 2

    int count() const { return int(n2p1) + int(n2p4) + int(n2p2) + int(n2m2); }

    friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;

    std::string tag() const {
        if (count() > 1) return "multiple";
        if (n2p1) return "n2p1";
        if (n2p4) return "n2p4";
        if (n2p2) return "n2p2";
        if (n2m2) return "n2m2";
        return "none";
    }
};

inline FamilyMatch special_family(i64 d) {
    FamilyMatch f;
    f.n2p1 = d >= 2 && is_perfect_square(d - 1);
    f.n2p4 = d >= 5 && is_perfect_square(d - 4);
    f.n2p2 = d >= 3 && is_perfect_square(d - 2);
    f.n2m2 = d >= 2 && is_perfect_square(d + 2) && isqrt(d + 2) >= 2;
    return f;
}

/// Necessary condition when kappa = 1: h = 1 and d = n^2+1 or n^2+4.
inline Verdict caliber_one_shape_verdict(i64 kappa, i64 h, const FamilyMatch& fam) {
    if (kappa != 1) return Verdict::Vacuous;
    return h == 1 && (fam.n2p1 || fam.n2p4) ? Verdict::Pass : Verdict::Fail;
}

/// Necessary condition when kappa = 2 and d != 5 (mod 8): h = 1 and d is
/// of Richaud-Degert shape.
inline Verdict caliber_two_shape_verdict(i64 d, i64 kappa, i64 h, bool has_rd) {
    if (mod_floor(d, 8) == 5 || kappa != 2) return Verdict::Vacuous;
    return h == 1 && has_rd ? Verdict::Pass : Verdict::Fail;
}

/// Standalone form of caliber_one_shape_verdict; computes kappa and h.
inline Verdict check_caliber_one_shape(i64 d) {
    FieldSpec fs = field_spec(d);
    CycleDecomposition dec = cycle_decomposition(fs.D);
    return caliber_one_shape_verdict(dec.caliber(), dec.class_count(), special_family(d));
}

/// Standalone form of caliber_two_shape_verdict; rejects d = 5 (mod 8),
/// where nothing is claimed.
inline Verdict check_caliber_two_shape(i64 d) {
    FieldSpec fs = field_spec(d);
    if (mod_floor(d, 8) == 5)
        throw std::invalid_argument("check_caliber_two_shape: claim excludes d = 5 (mod 8)");
    CycleDecomposition dec = cycle_decomposition(fs.D);
    return caliber_two_shape_verdict(d, dec.caliber(), dec.class_count(), is_rd_type(d));
}

}  // namespace caliber
