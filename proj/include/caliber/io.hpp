#pragma once

// Machine-readable serialization of scan records.
//
// JSONL: one compact object per line, fixed key order, matching the bytes
// a round-trip through an order-preserving JSON parser produces.  CSV: the
// same fields flattened; list fields are ';'-joined and forms are "A:B:C".
// Integers are rendered in plain decimal, never localized.

#include <string>

#include "caliber/scan.hpp"

namespace caliber {

namespace detail {

inline void append_int(std::string& out, i64 v) { out += std::to_string(v); }

}  // namespace detail

inline void append_jsonl(const ScanRecord& rec, std::string& out) {
    out += "{\"d\":";
    detail::append_int(out, rec.d);
    out += ",\"D\":";
    detail::append_int(out, rec.D);
    out += ",\"kappa\":";
    detail::append_int(out, rec.kappa);
    out += ",\"h\":";
    detail::append_int(out, rec.h);
    out += ",\"cycle_sizes\":[";
    for (size_t i = 0; i < rec.cycle_sizes.size(); ++i) {
        if (i) out += ',';
        detail::append_int(out, rec.cycle_sizes[i]);
    }
    out += "],\"forms\":[";
    for (size_t i = 0; i < rec.forms.size(); ++i) {
        if (i) out += ',';
        out += '[';
        detail::append_int(out, rec.forms[i].a);
        out += ',';
        detail::append_int(out, rec.forms[i].b);
        out += ',';
        detail::append_int(out, rec.forms[i].c);
        out += ']';
    }
    out += "],\"smallest_split_prime\":";
    if (rec.smallest_split_prime)
        detail::append_int(out, *rec.smallest_split_prime);
    else
        out += "null";
    out += ",\"rd\":";
    if (rec.rd) {
        out += "{\"n\":";
        detail::append_int(out, rec.rd->n);
        out += ",\"r\":";
        detail::append_int(out, rec.rd->r);
        out += '}';
    } else {
        out += "null";
    }
    out += ",\"family\":\"";
    out += rec.family.tag();
    out += "\",\"verdicts\":{\"sandwich\":\"";
    out += verdict_name(rec.sandwich);
    out += "\",\"lowerbound\":\"";
    out += verdict_name(rec.lowerbound);
    out += "\",\"pow2\":\"";
    out += verdict_name(rec.pow2);
    out += "\",\"prop31\":\"";
    out += verdict_name(rec.prop31);
    out += "\",\"prop36\":\"";
    out += verdict_name(rec.prop36);
    out += "\"},\"anomaly\":";
    out += rec.anomaly ? "true" : "false";
    out += "}\n";
}

inline const char* csv_header() {
    return "d,D,kappa,h,cycle_sizes,forms,smallest_split_prime,rd_n,rd_r,family,"
           "sandwich,lowerbound,pow2,prop31,prop36,anomaly\n";
}

inline void append_csv(const ScanRecord& rec, std::string& out) {
    detail::append_int(out, rec.d);
    out += ',';
    detail::append_int(out, rec.D);
    out += ',';
    detail::append_int(out, rec.kappa);
    out += ',';
    detail::append_int(out, rec.h);
    out += ',';
    for (size_t i = 0; i < rec.cycle_sizes.size(); ++i) {
        if (i) out += ';';
        detail::append_int(out, rec.cycle_sizes[i]);
    }
    out += ',';
    for (size_t i = 0; i < rec.forms.size(); ++i) {
        if (i) out += ';';
        detail::append_int(out, rec.forms[i].a);
        out += ':';
        detail::append_int(out, rec.forms[i].b);
        out += ':';
        detail::append_int(out, rec.forms[i].c);
    }
    out += ',';
    if (rec.smallest_split_prime) detail::append_int(out, *rec.smallest_split_prime);
    out += ',';
    if (rec.rd) detail::append_int(out, rec.rd->n);
    out += ',';
    if (rec.rd) detail::append_int(out, rec.rd->r);
    out += ',';
    out += rec.family.tag();
    out += ',';
    out += verdict_name(rec.sandwich);
    out += ',';
    out += verdict_name(rec.lowerbound);
    out += ',';
    out += verdict_name(rec.pow2);
    out += ',';
    out += verdict_name(rec.prop31);
    out += ',';
    out += verdict_name(rec.prop36);
    out += ',';
    out += rec.anomaly ? "true" : "false";
    out += '\n';
}

}  // namespace caliber
