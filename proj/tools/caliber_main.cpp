// Command-line surface for the caliber engine: single-field queries,
// continued fractions, range scans, and verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invalid
// input domain, 4 internal invariant violation.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "caliber/arith.hpp"
#include "caliber/classify.hpp"
#include "caliber/contfrac.hpp"
#include "caliber/forms.hpp"
#include "caliber/ideals.hpp"
#include "caliber/io.hpp"
#include "caliber/scan.hpp"
#include "caliber/theorems.hpp"

namespace {

using caliber::i64;

void echo_input(int argc, char** argv) {
    std::cerr << "input:";
    for (int i = 1; i < argc; ++i) std::cerr << ' ' << argv[i];
    std::cerr << '\n';
}

int default_jobs() {
    const char* env = std::getenv("CALIBER_JOBS");
    if (env == nullptr) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024) return 1;
    return static_cast<int>(v);
}

void print_form(std::ostream& os, const caliber::QuadForm& f) {
    os << '[' << f.a << ',' << f.b << ',' << f.c << ']';
}

void print_digits(std::ostream& os, const char* label, const std::vector<i64>& digits) {
    os << label << ':';
    for (i64 a : digits) os << ' ' << a;
    os << '\n';
}

int run_caliber(i64 d) {
    caliber::FieldSpec fs = caliber::field_spec(d);
    std::cout << caliber::caliber(fs.D) << '\n';
    return 0;
}

int run_forms(i64 d, bool as_json) {
    caliber::FieldSpec fs = caliber::field_spec(d);
    caliber::CycleDecomposition dec = caliber::cycle_decomposition(fs.D);
    if (as_json) {
        std::string out;
        out += "{\"d\":" + std::to_string(fs.d) + ",\"D\":" + std::to_string(fs.D);
        out += ",\"kappa\":" + std::to_string(dec.caliber());
        out += ",\"h\":" + std::to_string(dec.class_count());
        out += ",\"principal\":" + std::to_string(dec.principal);
        out += ",\"cycles\":[";
        for (size_t c = 0; c < dec.cycles.size(); ++c) {
            if (c) out += ',';
            out += '[';
            for (size_t i = 0; i < dec.cycles[c].size(); ++i) {
                if (i) out += ',';
                const auto& f = dec.cycles[c][i];
                out += '[' + std::to_string(f.a) + ',' + std::to_string(f.b) + ',' +
                       std::to_string(f.c) + ']';
            }
            out += ']';
        }
        out += "]}\n";
        std::cout << out;
        return 0;
    }
    std::cout << "d: " << fs.d << "  D: " << fs.D << "  kappa: " << dec.caliber()
              << "  h: " << dec.class_count() << '\n';
    for (size_t c = 0; c < dec.cycles.size(); ++c) {
        std::cout << "cycle " << c + 1 << " (size " << dec.cycles[c].size();
        if (c == dec.principal) std::cout << ", principal";
        std::cout << "):";
        for (const auto& f : dec.cycles[c]) {
            std::cout << ' ';
            print_form(std::cout, f);
        }
        std::cout << '\n';
    }
    return 0;
}

int run_cf(std::optional<i64> d, std::optional<i64> p, std::optional<i64> q,
           std::optional<i64> disc) {
    caliber::QuadraticIrrational x{0, 1, 2};
    if (d.has_value()) {
        caliber::FieldSpec fs = caliber::field_spec(*d);
        x = caliber::omega(fs);
        std::cout << "x: (" << x.p << "+sqrt(" << x.d << "))/" << x.q << '\n';
    } else {
        x = caliber::make_qi(*p, *q, *disc);
        std::cout << "x: (" << x.p << "+sqrt(" << x.d << "))/" << x.q << '\n';
    }
    caliber::CFExpansion e = caliber::expand(x);
    print_digits(std::cout, "preperiod", e.preperiod);
    print_digits(std::cout, "period", e.period);
    std::cout << "caliber: " << e.period.size() << '\n';
    std::cout << "reduced: " << (caliber::is_reduced_qi(x) ? "yes" : "no") << '\n';
    return 0;
}

int run_rho(i64 d, i64 A) {
    caliber::FieldSpec fs = caliber::field_spec(d);
    caliber::ResidueSolutionSet s = caliber::solve_sd(A, fs.D);
    std::cout << "rho: " << s.rho() << '\n';
    print_digits(std::cout, "residues", s.residues);
    std::cout << "formula: " << caliber::rho_by_formula(A, fs.D) << '\n';
    return 0;
}

int run_bounds(i64 d) {
    caliber::BoundReport rep = caliber::bound_report(d);
    std::cout << "d: " << rep.d << "  D: " << rep.D << '\n';
    std::cout << "lower_sum: " << rep.lower_sum << '\n';
    std::cout << "kappa: " << rep.kappa << '\n';
    std::cout << "upper_sum: " << rep.upper_sum << '\n';
    std::cout << "sandwich: " << caliber::verdict_name(rep.sandwich_verdict()) << '\n';
    for (const auto& e : rep.split_bounds)
        std::cout << "split p=" << e.p << ": exponents=" << e.max_exponent
                  << " bound=" << e.bound << " strict=" << (e.strict ? "yes" : "no") << '\n';
    if (rep.split_bounds.empty()) std::cout << "split: none below " << caliber::kSplitPrimeLimit << '\n';
    return 0;
}

struct OutTarget {
    std::ostream* os;
    std::ofstream file;
    std::filesystem::path final_path;
    std::filesystem::path tmp_path;
    bool to_file = false;

    explicit OutTarget(const std::string& path) {
        if (path.empty()) {
            os = &std::cout;
            return;
        }
        to_file = true;
        final_path = path;
        tmp_path = final_path;
        tmp_path += ".tmp" + std::to_string(static_cast<long>(::getpid()));
        file.open(tmp_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::invalid_argument("cannot open output file: " + path);
        os = &file;
    }

    void commit() {
        if (!to_file) {
            std::cout.flush();
            return;
        }
        file.flush();
        if (!file) throw std::runtime_error("write failed: " + tmp_path.string());
        file.close();
        std::filesystem::rename(tmp_path, final_path);
    }

    ~OutTarget() {
        if (to_file && file.is_open()) {
            file.close();
            std::error_code ec;
            std::filesystem::remove(tmp_path, ec);
        }
    }
};

int run_scan(const caliber::ScanOptions& opt, const std::string& format,
             const std::string& out_path) {
    OutTarget target(out_path);
    std::string buf;
    if (format == "csv") *target.os << caliber::csv_header();
    caliber::scan_range(opt, [&](const caliber::ScanRecord& rec) {
        buf.clear();
        if (format == "csv")
            caliber::append_csv(rec, buf);
        else
            caliber::append_jsonl(rec, buf);
        target.os->write(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (!*target.os) throw std::runtime_error("write failed");
    });
    target.commit();
    return 0;
}

int run_verify(const std::string& suite, i64 lo, i64 hi) {
    caliber::SuiteReport rep = caliber::verify_suite(suite, lo, hi);
    std::cout << "suite: " << rep.name << '\n';
    std::cout << "range: [" << rep.lo << ", " << rep.hi << "]\n";
    std::cout << "checked: " << rep.checked << '\n';
    std::cout << "passed: " << rep.passed << '\n';
    std::cout << "failed: " << rep.failed << '\n';
    std::cout << "vacuous: " << rep.vacuous << '\n';
    std::cout << "anomalies: " << rep.anomalous_d.size() << '\n';
    for (const std::string& note : rep.notes) std::cerr << "note: " << note << '\n';
    std::string buf;
    for (i64 d : rep.failing_d) {
        buf.clear();
        caliber::append_jsonl(caliber::single_record(d), buf);
        std::cout << buf;
    }
    for (i64 d : rep.anomalous_d) {
        buf.clear();
        caliber::append_jsonl(caliber::single_record(d), buf);
        std::cout << buf;
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios_base::sync_with_stdio(false);

    CLI::App app{"caliber engine for real quadratic fields"};
    app.require_subcommand(1);

    i64 arg_d = 0;
    i64 arg_a = 1;
    bool as_json = false;

    auto* cmd_caliber = app.add_subcommand("caliber", "number of reduced forms of Q(sqrt(d))");
    cmd_caliber->add_option("d", arg_d, "square-free d >= 2")->required();

    auto* cmd_forms = app.add_subcommand("forms", "reduced forms and neighbor cycles");
    cmd_forms->add_option("d", arg_d, "square-free d >= 2")->required();
    cmd_forms->add_flag("--json", as_json, "emit one JSON object");

    std::optional<i64> cf_d, cf_p, cf_q, cf_disc;
    auto* cmd_cf = app.add_subcommand("cf", "continued fraction expansion");
    cmd_cf->add_option("d", cf_d, "expand omega_D for this square-free d");
    cmd_cf->add_option("--p", cf_p, "numerator shift P of (P+sqrt(disc))/Q");
    cmd_cf->add_option("--q", cf_q, "denominator Q");
    cmd_cf->add_option("--disc", cf_disc, "radicand");

    auto* cmd_rho = app.add_subcommand("rho", "residue count rho_D(A) and solutions");
    cmd_rho->add_option("d", arg_d, "square-free d >= 2")->required();
    cmd_rho->add_option("A", arg_a, "modulus parameter A >= 1")->required();

    auto* cmd_bounds = app.add_subcommand("bounds", "sandwich sums and split-prime bounds");
    cmd_bounds->add_option("d", arg_d, "square-free d >= 2")->required();

    caliber::ScanOptions opt;
    opt.jobs = default_jobs();
    std::string mod8_arg, format = "jsonl", out_path, family_arg;
    i64 scan_kappa = -1, scan_h = -1;
    auto* cmd_scan = app.add_subcommand("scan", "stream records for a d-range");
    cmd_scan->set_help_flag("--help", "print help");  // frees -h/--h for the filter below
    cmd_scan->add_option("--from", opt.lo, "first d")->required();
    cmd_scan->add_option("--to", opt.hi, "last d")->required();
    cmd_scan->add_option("--kappa", scan_kappa, "keep records with this caliber");
    cmd_scan->add_option("--h", scan_h, "keep records with this class count");
    cmd_scan->add_option("--mod8", mod8_arg, "residue 0..7, or not5");
    cmd_scan->add_option("--family", family_arg, "n2p1|n2p4|n2p2|n2m2|none|multiple")
        ->check(CLI::IsMember({"n2p1", "n2p4", "n2p2", "n2m2", "none", "multiple"}));
    cmd_scan->add_option("--jobs", opt.jobs, "worker threads (default CALIBER_JOBS or 1)")
        ->check(CLI::Range(1, 1024));
    cmd_scan->add_option("--format", format, "jsonl (default) or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    cmd_scan->add_option("--out", out_path, "write atomically to this path instead of stdout");

    std::string suite;
    i64 verify_lo = 2, verify_hi = 2;
    auto* cmd_verify = app.add_subcommand("verify", "run a named invariant suite");
    cmd_verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"sandwich", "lowerbound", "pow2", "multiplicativity",
                               "convolution", "prop31", "prop36", "corollary-splitprime"}));
    cmd_verify->add_option("--from", verify_lo, "first d")->required();
    cmd_verify->add_option("--to", verify_hi, "last d")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_caliber)) return run_caliber(arg_d);
        if (app.got_subcommand(cmd_forms)) return run_forms(arg_d, as_json);
        if (app.got_subcommand(cmd_cf)) {
            bool have_parts = cf_p.has_value() || cf_q.has_value() || cf_disc.has_value();
            bool all_parts = cf_p.has_value() && cf_q.has_value() && cf_disc.has_value();
            if (cf_d.has_value() == have_parts || (have_parts && !all_parts)) {
                std::cerr << "error: give either d, or all of --p --q --disc\n";
                return 2;
            }
            return run_cf(cf_d, cf_p, cf_q, cf_disc);
        }
        if (app.got_subcommand(cmd_rho)) return run_rho(arg_d, arg_a);
        if (app.got_subcommand(cmd_bounds)) return run_bounds(arg_d);
        if (app.got_subcommand(cmd_scan)) {
            if (scan_kappa >= 0) opt.kappa = scan_kappa;
            if (scan_h >= 0) opt.class_count = scan_h;
            if (!family_arg.empty()) opt.family = family_arg;
            if (!mod8_arg.empty()) {
                if (mod8_arg == "not5") {
                    opt.mod8_not5 = true;
                } else if (mod8_arg.size() == 1 && mod8_arg[0] >= '0' && mod8_arg[0] <= '7') {
                    opt.mod8 = mod8_arg[0] - '0';
                } else {
                    std::cerr << "error: --mod8 takes a residue 0..7 or not5, got " << mod8_arg
                              << '\n';
                    return 2;
                }
            }
            return run_scan(opt, format, out_path);
        }
        if (app.got_subcommand(cmd_verify)) return run_verify(suite, verify_lo, verify_hi);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        echo_input(argc, argv);
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        echo_input(argc, argv);
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        echo_input(argc, argv);
        return 4;
    }
}
