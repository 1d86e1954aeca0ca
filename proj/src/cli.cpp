#include "b92sec/cli.hpp"

#include "b92sec/attack_model.hpp"
#include "b92sec/gf2_codes.hpp"
#include "b92sec/info_analysis.hpp"
#include "b92sec/oracle.hpp"
#include "b92sec/parity_density.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace b92 {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* verdict_str(bool b) { return b ? "true" : "false"; }

CodeSpec code_from_arg(const std::string& arg) {
    if (arg.rfind("hamming:", 0) == 0) {
        int r = 0;
        try {
            size_t pos = 0;
            r = std::stoi(arg.substr(8), &pos);
            if (pos != arg.size() - 8) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw CLI::ValidationError("--code", "expected hamming:<r> with integer r");
        }
        if (r < 2 || r > 4)
            throw CLI::ValidationError("--code", "hamming:<r> supports r in [2, 4]");
        return hamming_code(r);
    }
    return load_code_file(arg);
}

struct AngleInput {
    double alpha = -1;
    double theta = -1;
    double error_rate = -1;
    bool degrees = false;

    void add_flags(CLI::App* cmd, bool with_alpha = true) {
        if (with_alpha) cmd->add_option("--alpha", alpha, "Eve's probe half-angle (radians)");
        cmd->add_option("--theta", theta, "Alice's state half-angle");
        cmd->add_option("--error-rate", error_rate, "raw error rate p_e");
        cmd->add_flag("--degrees", degrees, "interpret --theta in degrees");
    }

    double theta_radians() const {
        return degrees ? theta * std::numbers::pi / 180.0 : theta;
    }

    // Resolves alpha, either directly or through (theta, p_e).
    std::pair<double, std::optional<AttackGeometry>> resolve() const {
        bool have_alpha = alpha >= 0;
        bool have_geo = theta >= 0 || error_rate >= 0;
        if (have_alpha == have_geo)
            throw CLI::ValidationError("angles",
                                       "supply exactly one of --alpha or --theta with --error-rate");
        if (have_alpha) return {alpha, std::nullopt};
        if (theta < 0 || error_rate < 0)
            throw CLI::ValidationError("angles", "--theta and --error-rate go together");
        auto g = geometry_from_error(theta_radians(), error_rate);
        return {g.alpha, g};
    }
};

std::ostream& open_out(std::ofstream& file, const std::string& path, std::ostream& fallback) {
    if (path.empty()) return fallback;
    file.open(path);
    if (!file) throw CodeError("cannot open output file '" + path + "'");
    return file;
}

void print_geometry(std::ostream& out, const AttackGeometry& g) {
    out << "theta = " << g17(g.theta) << "  theta' = " << g17(g.theta_prime)
        << "  alpha = " << g17(g.alpha) << "\n";
    out << "p_e = " << g17(g.error_rate())
        << "  unitarity residual = " << g17(g.unitarity_residual()) << "\n";
}

void print_conventions(std::ostream& out, const AttackGeometry& g) {
    auto sq = normalized_error_rate(g, PcConvention::squared);
    auto li = normalized_error_rate(g, PcConvention::linear);
    out << "p_c = " << g17(sq.p_c) << "  p_e_norm = " << g17(sq.p_e_norm)
        << "   [squared convention]\n";
    out << "p_c = " << g17(li.p_c) << "  p_e_norm = " << g17(li.p_e_norm)
        << "   [linear convention]\n";
    out << "small-alpha form (2cos^2 2t / sin^4 2t) a^4 = "
        << g17(normalized_error_rate_small_alpha(g.theta, g.alpha)) << "\n";
}

int cmd_analyze(const std::string& code_arg, const AngleInput& ang, const std::string& out_path,
                std::ostream& out) {
    CodeSpec code = code_from_arg(code_arg);
    auto [alpha, geo] = ang.resolve();
    auto rep = conjecture_check(code, alpha);

    out << "code: " << code_id(code) << "  (n=" << code.n << ", r=" << code.r() << ")\n";
    if (geo) print_geometry(out, *geo);
    out << "alpha = " << g17(alpha) << "\n";
    out << "blocks: " << rep.per_block.size() << "\n";

    const size_t cap = 64;
    for (size_t i = 0; i < rep.per_block.size() && i < cap; ++i) {
        const auto& b = rep.per_block[i];
        out << "  " << to_string(BitString(b.rep, code.n)) << "  a = " << g17(b.a)
            << "  beta = " << g17(b.beta) << "  I = " << g17(b.info) << "\n";
    }
    if (rep.per_block.size() > cap)
        out << "  ... (" << rep.per_block.size() - cap << " more blocks, use --out for all)\n";

    out << "I_total = " << g17(rep.i_total) << "\n";
    out << "I_sum (closed form) = " << g17(rep.i_sum) << "\n";
    out << "I_sum (exact words) = " << g17(rep.i_sum_exact) << "\n";
    out << "conjecture: " << (rep.conjecture_holds ? "holds" : "violated")
        << "  margin = " << g17(rep.margin)
        << (rep.extrapolated ? "  [alpha > 0.3: closed form extrapolated]" : "") << "\n";

    if (!out_path.empty()) {
        std::ofstream f;
        auto& o = open_out(f, out_path, out);
        o << "rep,a,beta,info\n";
        for (const auto& b : rep.per_block)
            o << to_string(BitString(b.rep, code.n)) << ',' << g17(b.a) << ',' << g17(b.beta)
              << ',' << g17(b.info) << "\n";
    }
    return 0;
}

int cmd_sweep(const std::string& code_arg, double from, double to, int steps, bool log_scale,
              const AngleInput& ang, PcConvention conv, const std::string& out_path,
              std::ostream& out) {
    CodeSpec code = code_from_arg(code_arg);
    if (steps < 1) throw CLI::ValidationError("--steps", "need at least one step");
    if (to < from) throw CLI::ValidationError("--alpha-to", "range must be increasing");
    if (log_scale && from <= 0) throw CLI::ValidationError("--log", "log spacing needs --alpha-from > 0");
    double theta = ang.theta >= 0 ? ang.theta_radians() : std::numbers::pi / 8;

    std::ofstream f;
    auto& o = open_out(f, out_path, out);
    o << "alpha,I_total,I_sum,p_e_norm,p_f\n";
    for (int i = 0; i < steps; ++i) {
        double t = steps == 1 ? 0.0 : double(i) / (steps - 1);
        double alpha = log_scale ? from * std::pow(to / from, t) : from + (to - from) * t;
        double itot = total_information(block_spectrum(code, alpha));
        double isum = i_sum(code, alpha);
        double pen = std::numeric_limits<double>::quiet_NaN();
        double pf = std::numeric_limits<double>::quiet_NaN();
        if (alpha <= theta) {
            auto g = geometry_from_alpha(theta, alpha);
            pen = normalized_error_rate(g, conv).p_e_norm;
            if (code.n >= 2) pf = failure_probability(code.n, pen);
        }
        o << g17(alpha) << ',' << g17(itot) << ',' << g17(isum) << ',' << g17(pen) << ','
          << g17(pf) << "\n";
    }
    return 0;
}

int cmd_conjecture(int max_n, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (max_n < 1 || max_n > 10)
        throw CLI::ValidationError("--max-n", "supported range is [1, 10]");
    auto rows = conjecture_scan(max_n);
    std::ofstream f;
    auto& o = open_out(f, out_path, out);
    o << "code_id,n,r,alpha,I_total,I_sum,margin,verdict\n";
    size_t violations = 0;
    for (const auto& row : rows) {
        o << row.code_id << ',' << row.n << ',' << row.r << ',' << g17(row.alpha) << ','
          << g17(row.i_total) << ',' << g17(row.i_sum) << ',' << g17(row.margin) << ','
          << verdict_str(row.verdict) << "\n";
        if (!row.verdict) ++violations;
    }
    err << "scanned " << rows.size() << " (code, alpha) pairs, " << violations
        << " violation(s)\n";
    return violations ? 3 : 0;
}

int cmd_verify(const std::string& code_arg, const AngleInput& ang, std::ostream& out) {
    CodeSpec code = code_from_arg(code_arg);
    if (code.n > 10)
        throw CLI::ValidationError("--code", "verification is dense and capped at n <= 10");
    auto [alpha, geo] = ang.resolve();

    auto rep = run_oracle(code, alpha);
    out << "code: " << code_id(code) << "  alpha = " << g17(alpha) << "\n";
    if (geo) {
        print_geometry(out, *geo);
        print_conventions(out, *geo);
    }
    out << "max_offblock_entry = " << g17(rep.max_offblock_entry) << "\n";
    out << "max_inblock_magnitude_error = " << g17(rep.max_inblock_magnitude_error) << "\n";
    out << "max_rank2_residual = " << g17(rep.max_rank2_residual) << "\n";
    out << "max_delta_a = " << g17(rep.max_delta_a) << "\n";
    out << "max_delta_beta = " << g17(rep.max_delta_beta) << "\n";
    out << "info_delta = " << g17(rep.info_delta) << "\n";
    out << "trace_delta = " << g17(rep.trace_delta) << "\n";
    out << "min_eigenvalue = " << g17(rep.min_eigenvalue) << "\n";
    out << "max_reassembly_delta = " << g17(rep.max_reassembly_delta) << "\n";
    out << "rank: expected " << rep.rank_expected << ", seen " << rep.rank_seen << "\n";
    out << "pairing witness: " << (rep.witness_ok ? "ok" : "FAILED") << "\n";
    bool ok = rep.passes();
    out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 3;
}

int cmd_reliability(const std::string& code_arg, const AngleInput& ang, PcConvention conv,
                    std::ostream& out) {
    CodeSpec code = code_from_arg(code_arg);
    if (ang.theta < 0 || ang.error_rate < 0)
        throw CLI::ValidationError("reliability", "needs --theta and --error-rate");
    auto g = geometry_from_error(ang.theta_radians(), ang.error_rate);

    out << "code: " << code_id(code) << "  (n=" << code.n << ")\n";
    print_geometry(out, g);
    print_conventions(out, g);

    double q = normalized_error_rate(g, conv).p_e_norm;
    const char* tag = conv == PcConvention::squared ? "squared" : "linear";
    out << "selected convention: " << tag << "\n";
    if (code.n >= 2) {
        double pf = failure_probability(code.n, q);
        double lead = 0.5 * code.n * (code.n - 1) * q * q;
        out << "p_f exact = " << g17(pf) << "\n";
        out << "p_f leading term n(n-1)/2 q^2 = " << g17(lead) << "\n";
    }
    double nq = code.n * q;
    out << "n * p_e_norm = " << g17(nq) << "\n";
    if (nq >= 0.1)
        out << "warning: n * p_e_norm is not small; the reconciliation analysis assumes n q << 1\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"eavesdropper information for parity-announced linear codes"};
    app.name("b92sec");
    app.require_subcommand(1);

    std::string code_arg, out_path;
    AngleInput ang;
    double from = 0, to = 0;
    int steps = 1, max_n = 8;
    bool log_scale = false;
    std::string conv_name = "squared";
    auto conv_opt_desc = "p_c convention: squared | linear";

    auto* analyze = app.add_subcommand("analyze", "block spectrum and information for one code");
    analyze->add_option("--code", code_arg, "code file path or hamming:<r>")->required();
    ang.add_flags(analyze);
    analyze->add_option("--out", out_path, "write per-block CSV here");

    auto* sweep = app.add_subcommand("sweep", "information and reliability across an alpha range");
    sweep->add_option("--code", code_arg, "code file path or hamming:<r>")->required();
    sweep->add_option("--alpha-from", from, "range start")->required();
    sweep->add_option("--alpha-to", to, "range end")->required();
    sweep->add_option("--steps", steps, "number of rows")->required();
    sweep->add_flag("--log", log_scale, "logarithmic spacing");
    sweep->add_option("--theta", ang.theta, "Alice angle for the reliability columns");
    sweep->add_flag("--degrees", ang.degrees, "interpret --theta in degrees");
    sweep->add_option("--pc-convention", conv_name, conv_opt_desc);
    sweep->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* conjecture = app.add_subcommand("conjecture", "exhaustive bound scan over short codes");
    conjecture->add_option("--max-n", max_n, "largest string length (<= 10)");
    conjecture->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* verify = app.add_subcommand("verify", "dense brute-force cross-check of the fast path");
    verify->add_option("--code", code_arg, "code file path or hamming:<r>")->required();
    ang.add_flags(verify);

    auto* reliability = app.add_subcommand("reliability", "normalized error rate and failure probability");
    reliability->add_option("--code", code_arg, "code file path or hamming:<r>")->required();
    reliability->add_option("--theta", ang.theta, "Alice angle")->required();
    reliability->add_option("--error-rate", ang.error_rate, "raw error rate p_e")->required();
    reliability->add_flag("--degrees", ang.degrees, "interpret --theta in degrees");
    reliability->add_option("--pc-convention", conv_name, conv_opt_desc);

    std::vector<const char*> argv;
    argv.push_back("b92sec");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        PcConvention conv;
        if (conv_name == "squared") conv = PcConvention::squared;
        else if (conv_name == "linear") conv = PcConvention::linear;
        else throw CLI::ValidationError("--pc-convention", "expected 'squared' or 'linear'");

        if (analyze->parsed()) return cmd_analyze(code_arg, ang, out_path, out);
        if (sweep->parsed()) return cmd_sweep(code_arg, from, to, steps, log_scale, ang, conv, out_path, out);
        if (conjecture->parsed()) return cmd_conjecture(max_n, out_path, out, err);
        if (verify->parsed()) return cmd_verify(code_arg, ang, out);
        if (reliability->parsed()) return cmd_reliability(code_arg, ang, conv, out);
        err << "no subcommand selected\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 1;
    } catch (const CodeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace b92
