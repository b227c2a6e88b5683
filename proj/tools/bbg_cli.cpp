// Command-line front end: series sums, decompositions, harmonic and
// Diophantine reports, and plot-ready CSV exports. All numeric fields are
// serialized as decimal strings so downstream consumers never round to
// 53 bits silently.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bbg/acceptance.hpp"
#include "bbg/bbg.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    long prec = bbg::PrecisionContext::kDefaultMantissaBits;
    std::string format = "text";
    std::string out;
};

bbg::PrecisionContext make_context(const CommonOpts& c) { return bbg::PrecisionContext(c.prec); }

long default_precision_bits() {
    if (const char* env = std::getenv("BBG_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 64) return v;
        std::cerr << "warning: ignoring invalid BBG_PRECISION_BITS='" << env << "'\n";
    }
    return bbg::PrecisionContext::kDefaultMantissaBits;
}

// Volatile values (wall-clock timestamp, measured runtime) live only in the
// metadata object, so identical configurations give byte-identical output
// once metadata is excluded.
json metadata(const CommonOpts& c, double runtime_ms = -1) {
    json m;
    m["precision_bits"] = c.prec;
    m["timestamp_unix_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::system_clock::now().time_since_epoch())
                                 .count();
    if (runtime_ms >= 0) m["runtime_ms"] = runtime_ms;
    return m;
}

void emit(const std::string& text, const CommonOpts& c) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file '" + c.out + "'");
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

void emit_json(json j, const CommonOpts& c, double runtime_ms = -1) {
    j["metadata"] = metadata(c, runtime_ms);
    emit(j.dump(2), c);
}

std::vector<long long> parse_checkpoints(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

int cmd_sum(const CommonOpts& c, long long n, double alpha_d, bool exact) {
    auto ctx = make_context(c);
    std::optional<bbg::HPReal> alpha;
    if (alpha_d != 1.0)
        alpha = bbg::real_from_string(std::to_string(alpha_d), ctx.working_precision());
    const auto t0 = std::chrono::steady_clock::now();
    bbg::SeriesResult r = bbg::series::partial_sum(n, ctx, alpha, exact);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.format == "json") {
        json j;
        j["command"] = "sum";
        j["N"] = n;
        j["alpha"] = alpha ? bbg::to_string(*alpha) : "1";
        j["S_N"] = bbg::to_string(r.value);
        j["error_estimate"] = bbg::to_string(r.error_estimate);
        j["error_kind"] = bbg::to_string(r.error_kind);
        j["precision_bits"] = c.prec;
        emit_json(std::move(j), c, ms);
    } else if (c.format == "csv") {
        bbg::io::CsvWriter w({"N", "S_N", "error_estimate", "error_kind"});
        w.add_row({std::to_string(n), bbg::to_string(r.value), bbg::to_string(r.error_estimate),
                   bbg::to_string(r.error_kind)});
        emit(w.str(), c);
    } else {
        std::ostringstream os;
        os << "S_" << n << " = " << bbg::to_string(r.value) << "\n"
           << "error estimate (" << bbg::to_string(r.error_kind)
           << "): " << bbg::to_string(r.error_estimate) << "\n";
        emit(os.str(), c);
    }
    return kExitOk;
}

int cmd_decompose(const CommonOpts& c, long long n, const std::string& averaging_csv) {
    auto ctx = make_context(c);
    const auto t0 = std::chrono::steady_clock::now();
    auto rep = bbg::series::decompose(n, ctx);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!averaging_csv.empty()) {
        bbg::io::averaging_csv(static_cast<long>(std::min<long long>(n, 10000)), ctx)
            .write_file(averaging_csv);
    }
    json j;
    j["command"] = "decompose";
    j["N"] = rep.N;
    j["S_N"] = bbg::to_string(rep.S_N);
    j["M_N"] = bbg::to_string(rep.M_N);
    j["R_N"] = bbg::to_string(rep.R_N);
    j["target_S"] = bbg::to_string(rep.target_S);
    j["target_R"] = bbg::to_string(rep.target_R);
    j["gap_S"] = bbg::to_string(rep.gap_S);
    j["gap_R"] = bbg::to_string(rep.gap_R);
    j["precision_bits"] = c.prec;
    if (c.format == "json") {
        emit_json(std::move(j), c, ms);
    } else {
        std::ostringstream os;
        os << "N        = " << rep.N << "\n"
           << "S_N      = " << bbg::to_string(rep.S_N) << "\n"
           << "M_N      = " << bbg::to_string(rep.M_N) << "\n"
           << "R_N      = " << bbg::to_string(rep.R_N) << "\n"
           << "target S = " << bbg::to_string(rep.target_S) << "  gap " << bbg::to_string(rep.gap_S)
           << "\n"
           << "target R = " << bbg::to_string(rep.target_R) << "  gap " << bbg::to_string(rep.gap_R)
           << "\n";
        emit(os.str(), c);
    }
    return kExitOk;
}

int cmd_harmonics(const CommonOpts& c, long kmax, long terms, const std::string& coeff_json) {
    auto ctx = make_context(c);
    if (!coeff_json.empty()) {
        json rows = json::array();
        for (const auto& r : bbg::io::coefficient_rows(kmax, terms)) {
            json e;
            e["k"] = r.k;
            e["n"] = r.n;
            e["c_re_num"] = r.re_num;
            e["c_im_num"] = r.im_num;
            e["denom"] = r.denom;
            rows.push_back(std::move(e));
        }
        json j;
        j["command"] = "harmonics.coefficients";
        j["coefficients"] = std::move(rows);
        j["metadata"] = metadata(c);
        std::ofstream f(coeff_json, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file '" + coeff_json + "'");
        f << j.dump(2) << "\n";
    }
    auto rep = bbg::fourier::harmonic_sum_r(kmax, terms, ctx);
    if (c.format == "csv") {
        emit(bbg::io::harmonics_csv(rep).str(), c);
        return kExitOk;
    }
    json rows = json::array();
    for (const auto& r : rep.per_k) {
        json row;
        row["k"] = r.k;
        row["contribution"] = bbg::to_string(r.contribution);
        row["running_total"] = bbg::to_string(r.running_total);
        row["tail_bound"] = bbg::to_string(r.tail_bound);
        rows.push_back(std::move(row));
    }
    json j;
    j["command"] = "harmonics";
    j["K"] = kmax;
    j["N"] = terms;
    j["total"] = bbg::to_string(rep.total.value);
    j["per_k"] = std::move(rows);
    j["precision_bits"] = c.prec;
    if (c.format == "json") {
        emit_json(std::move(j), c);
    } else {
        std::ostringstream os;
        for (const auto& r : rep.per_k)
            os << "k=" << r.k << "  2Re[G_k] = " << bbg::to_string(r.contribution)
               << "  running = " << bbg::to_string(r.running_total) << "\n";
        os << "total = " << bbg::to_string(rep.total.value) << "\n";
        emit(os.str(), c);
    }
    return kExitOk;
}

int cmd_wild(const CommonOpts& c, double delta, long long nmax) {
    auto ctx = make_context(c);
    auto recs = bbg::diophantine::wild_enumerate(
        bbg::real_from_string(std::to_string(delta), ctx.working_precision()), nmax, ctx);
    if (c.format == "json") {
        json rows = json::array();
        for (const auto& r : recs) {
            json row;
            row["n"] = r.n;
            row["sin_n"] = bbg::to_string(r.sin_n);
            row["epsilon"] = bbg::to_string(r.epsilon);
            row["theta_dev"] = bbg::to_string(r.theta_dev);
            row["f_exact"] = bbg::to_string(r.f_exact);
            row["f_saddle"] = bbg::to_string(r.f_saddle);
            row["rel_error"] = bbg::to_string(r.rel_error);
            rows.push_back(std::move(row));
        }
        json j;
        j["command"] = "wild";
        j["delta"] = delta;
        j["n_max"] = nmax;
        j["count"] = recs.size();
        j["records"] = std::move(rows);
        j["precision_bits"] = c.prec;
        emit_json(std::move(j), c);
    } else if (c.format == "csv") {
        emit(bbg::io::wild_csv(recs).str(), c);
    } else {
        std::ostringstream os;
        os << "wild integers (sin n > 1 - " << delta << ") up to " << nmax << ": " << recs.size()
           << "\n";
        for (const auto& r : recs)
            os << r.n << "  eps=" << bbg::to_string(r.epsilon)
               << "  rel_err=" << bbg::to_string(r.rel_error) << "\n";
        emit(os.str(), c);
    }
    return kExitOk;
}

int cmd_cf(const CommonOpts& c, long depth) {
    auto ctx = make_context(c);
    auto cf = bbg::diophantine::cf_inv_two_pi(depth, ctx);
    if (cf.exhausted) {
        std::cerr << "cf: precision exhausted after " << cf.certified_depth
                  << " certified quotients (requested " << depth << ")\n";
        return kExitUsage;
    }
    json j;
    j["command"] = "cf";
    j["x"] = "1/(2*pi)";
    j["depth"] = depth;
    j["quotients"] = cf.partial_quotients;
    json conv = json::array();
    for (const auto& pq : cf.convergents) {
        json e;
        e["p"] = pq.first.str();
        e["q"] = pq.second.str();
        conv.push_back(std::move(e));
    }
    j["convergents"] = std::move(conv);
    j["terminated"] = cf.terminated;
    j["precision_bits"] = c.prec;
    if (c.format == "json") {
        emit_json(std::move(j), c);
    } else {
        std::ostringstream os;
        os << "1/(2*pi) = [";
        for (size_t i = 0; i < cf.partial_quotients.size(); ++i)
            os << (i ? (i == 1 ? "; " : ", ") : "") << cf.partial_quotients[i];
        os << "]\ndenominators:";
        for (const auto& pq : cf.convergents) os << " " << pq.second.str();
        os << "\n";
        emit(os.str(), c);
    }
    return kExitOk;
}

int cmd_discrepancy(const CommonOpts& c, const std::vector<long long>& ns) {
    auto ctx = make_context(c);
    bbg::io::CsvWriter w({"N", "D_star", "et_bound", "optimal_H"});
    json rows = json::array();
    for (long long N : ns) {
        bbg::HPReal d = bbg::diophantine::star_discrepancy(N, ctx);
        auto et = bbg::diophantine::erdos_turan_bound(N, N, ctx);
        w.add_row({std::to_string(N), bbg::to_string(d), bbg::to_string(et.bound_at_optimal_H),
                   std::to_string(et.optimal_H)});
        json row;
        row["N"] = N;
        row["D_star"] = bbg::to_string(d);
        row["et_bound"] = bbg::to_string(et.bound_at_optimal_H);
        row["optimal_H"] = et.optimal_H;
        rows.push_back(std::move(row));
    }
    if (c.format == "csv") {
        emit(w.str(), c);
    } else if (c.format == "json") {
        json j;
        j["command"] = "discrepancy";
        j["rows"] = std::move(rows);
        j["precision_bits"] = c.prec;
        emit_json(std::move(j), c);
    } else {
        std::ostringstream os;
        for (const auto& row : rows)
            os << "N=" << row["N"] << "  D*=" << row["D_star"].get<std::string>()
               << "  ET=" << row["et_bound"].get<std::string>() << "  H*=" << row["optimal_H"]
               << "\n";
        emit(os.str(), c);
    }
    return kExitOk;
}

int cmd_phi(const CommonOpts& c, double s, long long n) {
    auto ctx = make_context(c);
    auto r = bbg::fourier::phi_value(
        bbg::real_from_string(std::to_string(s), ctx.working_precision()), n, ctx);
    json j;
    j["command"] = "phi";
    j["s"] = s;
    j["N"] = n;
    j["value"] = bbg::to_string(r.value);
    j["tail_estimate"] = bbg::to_string(r.error_estimate);
    j["error_kind"] = bbg::to_string(r.error_kind);
    j["precision_bits"] = c.prec;
    if (c.format == "json") {
        emit_json(std::move(j), c);
    } else {
        std::ostringstream os;
        os << "Phi(" << s << ") truncated at N=" << n << " = " << bbg::to_string(r.value)
           << "   (tail estimate " << bbg::to_string(r.error_estimate) << ", "
           << bbg::to_string(r.error_kind) << ")\n";
        emit(os.str(), c);
    }
    return kExitOk;
}

int cmd_report(const CommonOpts& c) {
    auto ctx = make_context(c);
    auto battery = bbg::acceptance::run_battery(ctx);
    json checks = json::array();
    for (const auto& chk : battery.checks) {
        json e;
        e["name"] = chk.name;
        e["target"] = chk.target;
        e["computed"] = chk.computed;
        e["tolerance"] = chk.tolerance;
        e["pass"] = chk.pass;
        if (!chk.detail.empty()) e["detail"] = chk.detail;
        checks.push_back(std::move(e));
    }
    json j;
    j["command"] = "report";
    j["checks"] = std::move(checks);
    j["checks_total"] = battery.checks.size();
    j["checks_failed"] = battery.failed_count();
    j["all_pass"] = battery.all_pass();
    j["precision_bits"] = c.prec;
    emit_json(std::move(j), c, battery.runtime_seconds * 1000.0);
    if (!battery.all_pass()) {
        std::cerr << battery.failed_count() << " of " << battery.checks.size()
                  << " checks failed\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_plotdata(const CommonOpts& c, const std::string& kind, const std::string& checkpoints,
                 double delta, long long nmax, long kmax, long terms) {
    auto ctx = make_context(c);
    bbg::io::CsvWriter w({});
    if (kind == "trace") {
        auto rows = bbg::series::convergence_trace(parse_checkpoints(checkpoints), ctx);
        w = bbg::io::trace_csv(rows);
    } else if (kind == "harmonics") {
        w = bbg::io::harmonics_csv(bbg::fourier::harmonic_sum_r(kmax, terms, ctx));
    } else if (kind == "wild") {
        auto recs = bbg::diophantine::wild_enumerate(
            bbg::real_from_string(std::to_string(delta), ctx.working_precision()), nmax, ctx);
        w = bbg::io::wild_csv(recs);
    } else if (kind == "discrepancy") {
        bbg::io::CsvWriter d({"N", "D_star", "et_bound", "optimal_H"});
        for (long long N : parse_checkpoints(checkpoints)) {
            bbg::HPReal v = bbg::diophantine::star_discrepancy(N, ctx);
            auto et = bbg::diophantine::erdos_turan_bound(N, N, ctx);
            d.add_row({std::to_string(N), bbg::to_string(v), bbg::to_string(et.bound_at_optimal_H),
                       std::to_string(et.optimal_H)});
        }
        w = std::move(d);
    } else {
        std::cerr << "plotdata: unknown kind '" << kind
                  << "' (expected trace|harmonics|wild|discrepancy)\n";
        return kExitUsage;
    }
    emit(w.str(), c);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision laboratory for the sinusoidal series sum((1/n)((2+sin n)/3)^n)"};
    app.set_config("--config", "", "Flat key=value configuration file; flags take precedence");

    CommonOpts common;
    common.prec = default_precision_bits();
    app.add_option("--prec", common.prec, "Mantissa bits (>= 64)")->capture_default_str();
    app.add_option("--format", common.format, "Output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", common.out, "Write output to a file instead of stdout");
    app.require_subcommand(1);

    long long n_sum = 1000;
    double alpha = 1.0;
    bool exact = false;
    auto* sum = app.add_subcommand("sum", "Partial sum S_N of the series");
    sum->add_option("--n", n_sum, "Truncation index N")->required();
    sum->add_option("--alpha", alpha, "Rotation angle (generalized series)");
    sum->add_flag("--exact", exact, "Force per-index sine evaluation (no rotation recurrence)");

    long long n_dec = 1000;
    std::string averaging_csv;
    auto* dec = app.add_subcommand("decompose", "Split S_N into M_N + R_N");
    dec->add_option("--n", n_dec, "Truncation index N")->required();
    dec->add_option("--averaging-csv", averaging_csv,
                    "Also write the (n, J_n, I_n, I_n/n, M running) table to this CSV file");

    long kmax = 4;
    long terms = 200;
    std::string coeff_json;
    auto* har = app.add_subcommand("harmonics", "Per-harmonic contributions 2Re[G_k((2/3)e^{ik})]");
    har->add_option("--kmax", kmax, "Largest harmonic index K");
    har->add_option("--terms", terms, "Series truncation N for each G_k");
    har->add_option("--coeff-json", coeff_json,
                    "Also export the exact coefficients {k, n, c_re_num, c_im_num, denom} to this file");

    double delta = 0.01;
    long long nmax = 10000;
    auto* wld = app.add_subcommand("wild", "Enumerate wild integers (sin n > 1 - delta)");
    wld->add_option("--delta", delta, "Wildness threshold");
    wld->add_option("--max", nmax, "Scan bound")->required();

    long depth = 8;
    auto* cf = app.add_subcommand("cf", "Certified continued fraction of 1/(2*pi)");
    cf->add_option("--depth", depth, "Number of partial quotients past a_0");

    std::string disc_checkpoints = "100,1000,10000";
    auto* dsc = app.add_subcommand("discrepancy", "Star-discrepancy and Erdos-Turan bound");
    dsc->add_option("--checkpoints", disc_checkpoints, "Comma-separated N values");

    double s_phi = 2.0;
    long long n_phi = 10000;
    auto* phi = app.add_subcommand("phi", "Dirichlet series Phi(s) by direct summation");
    phi->add_option("--s", s_phi, "Exponent s > 1")->required();
    phi->add_option("--n", n_phi, "Truncation index N");

    auto* rep = app.add_subcommand("report", "Full desk-scale reproduction battery (JSON)");
    (void)rep;

    std::string kind;
    std::string plot_checkpoints = "1000,10000";
    double plot_delta = 0.01;
    long long plot_max = 10000;
    long plot_kmax = 4;
    long plot_terms = 200;
    auto* plt = app.add_subcommand("plotdata", "Plot-ready CSV exports");
    plt->add_option("kind", kind, "trace|harmonics|wild|discrepancy")->required();
    plt->add_option("--checkpoints", plot_checkpoints, "Comma-separated N values (trace, discrepancy)");
    plt->add_option("--delta", plot_delta, "Wildness threshold (wild)");
    plt->add_option("--max", plot_max, "Scan bound (wild)");
    plt->add_option("--kmax", plot_kmax, "Largest harmonic (harmonics)");
    plt->add_option("--terms", plot_terms, "Per-harmonic truncation (harmonics)");

    // global flags (--format, --out, --prec, --config) may follow the subcommand
    for (CLI::App* s : {sum, dec, har, wld, cf, dsc, phi, rep, plt}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (common.prec < 64) {
            std::cerr << "error: --prec must be >= 64 (mantissa_bits lower bound)\n";
            return kExitUsage;
        }
        if (sum->parsed()) return cmd_sum(common, n_sum, alpha, exact);
        if (dec->parsed()) return cmd_decompose(common, n_dec, averaging_csv);
        if (har->parsed()) return cmd_harmonics(common, kmax, terms, coeff_json);
        if (wld->parsed()) return cmd_wild(common, delta, nmax);
        if (cf->parsed()) return cmd_cf(common, depth);
        if (dsc->parsed()) return cmd_discrepancy(common, parse_checkpoints(disc_checkpoints));
        if (phi->parsed()) return cmd_phi(common, s_phi, n_phi);
        if (rep->parsed()) return cmd_report(common);
        if (plt->parsed())
            return cmd_plotdata(common, kind, plot_checkpoints, plot_delta, plot_max, plot_kmax,
                                plot_terms);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const bbg::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
