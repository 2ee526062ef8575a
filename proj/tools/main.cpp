#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "torfix/classify.hpp"
#include "torfix/cyclotomic.hpp"
#include "torfix/errors.hpp"
#include "torfix/fixpoints.hpp"
#include "torfix/io_json.hpp"
#include "torfix/mahler.hpp"
#include "torfix/matrix.hpp"
#include "torfix/poly_gcd.hpp"
#include "torfix/scan.hpp"

using nlohmann::json;

namespace {

struct Options {
    std::string input;
    unsigned long n_max = 50;
    unsigned precision_bits = 128;
    unsigned prime_budget = 25;
    std::string format = "json";
    unsigned g_min = 3;
    unsigned g_max = 50;
    unsigned jobs = 0;
    bool monic_check = true;
    std::string out_dir = ".";
};

unsigned default_precision_bits() {
    if (const char* env = std::getenv("TORFIX_PRECISION_BITS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 2 && v <= 1u << 20) return static_cast<unsigned>(v);
    }
    return 128;
}

unsigned default_jobs() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw torfix::ParseError("cannot open input file: " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

// Fixed decimal formatting so every output path is byte-identical across
// runs and job counts.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json gauss_poly_to_json(const torfix::GaussIntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(json::array({c.re.get_str(), c.im.get_str()}));
    return arr;
}

json input_to_json(const torfix::EndoInput& in) {
    json j{{"kind", torfix::to_string(in.kind)}, {"chi_r", torfix::poly_to_json(in.chi_r)}};
    if (in.chi_a) j["chi_a"] = gauss_poly_to_json(*in.chi_a);
    return j;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_classify(const Options& opt) {
    const auto in = torfix::parse_endo_input(read_input(opt.input), opt.monic_check);
    const auto cls = torfix::classify(in.chi_r, opt.precision_bits);
    const auto erg = torfix::ergodicity_report(in.chi_r);
    const auto ent = torfix::entropy(in.chi_r, opt.precision_bits);

    if (opt.format == "text") {
        std::cout << "input:      " << torfix::to_string(in.kind) << ", chi_r = "
                  << in.chi_r.to_string() << '\n';
        std::cout << "kind:       " << torfix::to_string(cls.kind) << '\n';
        std::cout << "period:     " << cls.period.get_str() << '\n';
        std::cout << "forbidden:  ";
        if (cls.forbidden_residues.empty()) {
            std::cout << "(none)";
        } else {
            for (std::size_t i = 0; i < cls.forbidden_residues.size(); ++i)
                std::cout << (i ? " " : "") << "n=0 mod " << cls.forbidden_residues[i];
        }
        std::cout << '\n';
        std::cout << "zero mult:  " << cls.split.zero_multiplicity << '\n';
        std::cout << "cyclotomic: ";
        if (cls.split.cyclotomic_factors.empty()) {
            std::cout << "(none)";
        } else {
            bool first = true;
            for (const auto& [k, m] : cls.split.cyclotomic_factors) {
                std::cout << (first ? "" : " ") << "Phi_" << k;
                if (m > 1) std::cout << '^' << m;
                first = false;
            }
        }
        std::cout << '\n';
        std::cout << "wild part:  " << cls.split.wild.to_string() << '\n';
        std::cout << "entropy:    " << fmt(ent.full.log_value) << " (error <= "
                  << fmt(ent.full.error_bound) << ", " << ent.full.method
                  << "; analytic normalization " << fmt(ent.analytic) << ")\n";
        std::cout << "unit circle distinct (wild): " << erg.unit_circle_distinct << '\n';
        std::cout << "automorphism: " << (erg.is_automorphism ? "yes" : "no")
                  << ", ergodic automorphism: " << (erg.ergodic_automorphism ? "yes" : "no")
                  << '\n';
        std::cout << "non-simple implied: " << (cls.non_simple_implied ? "yes" : "no") << '\n';
        return 0;
    }

    emit(json{{"input", input_to_json(in)},
              {"classification", torfix::classification_to_json(cls, !in.conjugate_closed())},
              {"spectral", torfix::split_to_json(cls.split)},
              {"ergodicity", torfix::ergodicity_to_json(erg)},
              {"entropy", json{{"full", json{{"log_value", ent.full.log_value},
                                             {"error_bound", ent.full.error_bound},
                                             {"method", ent.full.method}}},
                               {"analytic", ent.analytic}}}});
    return 0;
}

int cmd_sequence(const Options& opt) {
    const auto in = torfix::parse_endo_input(read_input(opt.input), opt.monic_check);
    const auto seq = torfix::fix_sequence(in.chi_r, opt.n_max, in.conjugate_closed());
    if (opt.format == "csv") {
        std::cout << torfix::fix_sequence_to_csv(seq);
    } else if (opt.format == "text") {
        std::cout << "chi_r:  " << seq.chi_r.to_string() << '\n';
        std::cout << "period: " << seq.period.get_str() << (seq.formal ? "  (formal)\n" : "\n");
        std::cout << torfix::fix_sequence_to_csv(seq);
    } else {
        emit(torfix::fix_sequence_to_json(seq));
    }
    return 0;
}

int cmd_mahler(const Options& opt) {
    const auto in = torfix::parse_endo_input(read_input(opt.input), opt.monic_check);
    const auto points = torfix::log_spaced_points(opt.n_max);
    const auto table = torfix::mahler_convergence_table(in.chi_r, points);
    const auto est = torfix::mahler_measure(in.chi_r, opt.precision_bits);

    if (opt.format == "csv") {
        std::cout << "n,log_abs_delta_over_n\n";
        for (const auto& [n, v] : table) std::cout << n << ',' << fmt(v) << '\n';
        std::cout << "# m(q) = " << fmt(est.log_value) << " (error <= " << fmt(est.error_bound)
                  << ", " << est.method << ")\n";
    } else if (opt.format == "text") {
        std::cout << "q: " << in.chi_r.to_string() << '\n';
        for (const auto& [n, v] : table)
            std::cout << "  n=" << n << "  log|Delta_n|/n = " << fmt(v) << '\n';
        std::cout << "m(q) = " << fmt(est.log_value) << " (error <= " << fmt(est.error_bound)
                  << ", " << est.method << ")\n";
    } else {
        json samples = json::array();
        for (const auto& [n, v] : table) samples.push_back(json{{"n", n}, {"value", v}});
        emit(json{{"samples", samples},
                  {"mahler", json{{"log_value", est.log_value},
                                  {"error_bound", est.error_bound},
                                  {"method", est.method}}}});
    }
    return 0;
}

int cmd_scan_family(const Options& opt) {
    if (opt.g_min < 3)
        throw torfix::DomainError("family scan requires g >= 3 (no such polynomial below)");
    if (opt.g_min > opt.g_max) throw torfix::DomainError("empty scan range: g-min > g-max");
    const auto rows =
        torfix::scan_family(opt.g_min, opt.g_max, opt.prime_budget, opt.precision_bits, opt.jobs);

    if (opt.format == "csv" || opt.format == "text") {
        std::cout << "g,cyclotomic_free,unit_circle_distinct,witness_prime,mahler_log,mahler_error\n";
        for (const auto& r : rows) {
            std::cout << r.g << ',' << (r.cyclotomic_free ? "true" : "false") << ','
                      << r.unit_circle_distinct << ',';
            if (r.witness_prime) std::cout << *r.witness_prime;
            std::cout << ',' << fmt(r.mahler_log) << ',' << fmt(r.mahler_error) << '\n';
        }
    } else {
        json out = json::array();
        for (const auto& r : rows) {
            json row{{"g", r.g},
                     {"cyclotomic_free", r.cyclotomic_free},
                     {"unit_circle_distinct", r.unit_circle_distinct},
                     {"mahler_log", r.mahler_log},
                     {"mahler_error", r.mahler_error}};
            if (r.witness_prime)
                row["witness_prime"] = *r.witness_prime;
            else
                row["witness_prime"] = nullptr;
            out.push_back(std::move(row));
        }
        emit(json{{"rows", out}});
    }
    return 0;
}

int cmd_examples(const Options& opt) {
    struct Demo {
        const char* name;
        json doc;
    };
    // 3x3 matrix over Z[i] whose rational characteristic polynomial is
    // t^6 + 4t^5 + 4t^4 + 4t^2 + 4t + 1.
    const Demo demos[] = {
        {"endo_gaussian3.json",
         json{{"kind", "gaussian"},
              {"entries", json::array({json::array({json::array({0, 0}), json::array({0, 0}),
                                                    json::array({0, -1})}),
                                       json::array({json::array({1, 0}), json::array({0, 0}),
                                                    json::array({0, -2})}),
                                       json::array({json::array({0, 0}), json::array({1, 0}),
                                                    json::array({-2, 0})})})}}},
        // (t+1)^2 (t-2)^2: mixed growth, F vanishes exactly on even n.
        {"endo_mixed.json",
         json{{"kind", "polynomial"}, {"coeffs", json::array({"4", "4", "-3", "-2", "1"})}}},
        // The doubling map on a 1-dimensional torus.
        {"endo_doubling.json",
         json{{"kind", "rational"},
              {"entries", json::array({json::array({2, 0}), json::array({0, 2})})}}},
    };
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    for (const auto& d : demos) {
        const std::string path = opt.out_dir + "/" + d.name;
        std::ofstream out(path);
        if (!out) throw torfix::ParseError("cannot write " + path);
        out << d.doc.dump(2) << '\n';
        std::cout << path << '\n';
    }
    return 0;
}

int cmd_selfcheck() {
    int failures = 0;
    const auto check = [&](bool ok, const char* what) {
        std::cout << (ok ? "ok:   " : "FAIL: ") << what << '\n';
        if (!ok) ++failures;
    };

    using namespace torfix;
    check(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == Int(-1), "resultant of linear pair");
    check(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1}, "cyclotomic polynomial of order 12");
    check(delta_n_resultant(IntPoly{-1, -1, 1}, 5) == Int(-11) &&
              delta_n_companion(IntPoly{-1, -1, 1}, 5) == Int(-11),
          "both iterate-count engines on t^2 - t - 1 at n = 5");

    GaussianMatrix m(3);
    m.at(0, 2) = GaussInt(0, -1);
    m.at(1, 0) = GaussInt(1, 0);
    m.at(1, 2) = GaussInt(0, -2);
    m.at(2, 1) = GaussInt(1, 0);
    m.at(2, 2) = GaussInt(-2, 0);
    const IntPoly chi = norm_poly(charpoly(m));
    check(chi == IntPoly{1, 4, 4, 0, 4, 4, 1}, "rational charpoly of the 3x3 demo matrix");
    check(unit_circle_count(chi).distinct == 2, "unit-circle root count of the demo spectrum");

    const auto seq = fix_sequence(IntPoly{4, 4, -3, -2, 1}, 4, false);
    check(seq.values == std::vector<Int>{Int(4), Int(0), Int(196), Int(0)},
          "mixed-growth fixed-point counts F(1..4)");

    const auto est = mahler_measure(IntPoly{-1, -1, 1}, 64);
    check(std::abs(est.log_value - 0.4812118250596035) < 1e-9 && est.error_bound < 1e-9,
          "Mahler measure of t^2 - t - 1");

    std::cout << (failures ? "selfcheck FAILED\n" : "selfcheck passed\n");
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fixed-point growth analysis for endomorphisms of complex tori"};
    app.set_version_flag("--version", "torfix 0.1.0");
    app.require_subcommand(1);

    Options opt;
    opt.precision_bits = default_precision_bits();
    opt.jobs = default_jobs();

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "input JSON file, or - for stdin")->required();
        cmd->add_flag("--monic-check,!--no-monic-check", opt.monic_check,
                      "reject non-monic polynomial input (default on)");
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
    };
    const auto add_precision = [&](CLI::App* cmd) {
        cmd->add_option("--precision-bits", opt.precision_bits,
                        "working precision for root refinement")
            ->check(CLI::Range(2u, 1u << 20))
            ->capture_default_str();
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "growth trichotomy, spectral split, ergodicity and entropy report");
    add_input(classify);
    add_format(classify);
    add_precision(classify);

    CLI::App* sequence =
        app.add_subcommand("sequence", "exact fixed-point counts F(1..n) with factor columns");
    add_input(sequence);
    add_format(sequence);
    sequence->add_option("--n-max", opt.n_max, "table length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* mahler =
        app.add_subcommand("mahler", "log|Delta_n|/n convergence table and Mahler measure");
    add_input(mahler);
    add_format(mahler);
    add_precision(mahler);
    mahler->add_option("--n-max", opt.n_max, "largest sample point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* scan = app.add_subcommand(
        "scan-family", "scan the reciprocal family with two Salem-like roots on the circle");
    add_format(scan);
    add_precision(scan);
    scan->add_option("--g-min", opt.g_min, "first genus (>= 3)")->capture_default_str();
    scan->add_option("--g-max", opt.g_max, "last genus")->capture_default_str();
    scan->add_option("--prime-budget", opt.prime_budget,
                     "primes to try for the irreducibility witness")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scan->add_option("--jobs", opt.jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* examples = app.add_subcommand("examples", "write bundled demo input files");
    examples->add_option("--out-dir", opt.out_dir, "target directory")->capture_default_str();

    CLI::App* selfcheck =
        app.add_subcommand("selfcheck", "run the built-in consistency checks and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(opt);
        if (sequence->parsed()) return cmd_sequence(opt);
        if (mahler->parsed()) return cmd_mahler(opt);
        if (scan->parsed()) return cmd_scan_family(opt);
        if (examples->parsed()) return cmd_examples(opt);
        if (selfcheck->parsed()) return cmd_selfcheck();
    } catch (const torfix::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const torfix::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
