#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grasstrans/cherednik.hpp"
#include "grasstrans/closed_form.hpp"
#include "grasstrans/grassgeo.hpp"
#include "grasstrans/jacobi.hpp"
#include "grasstrans/json_io.hpp"
#include "grasstrans/laurent.hpp"
#include "grasstrans/root_system.hpp"
#include "grasstrans/spectra.hpp"

namespace gt = grasstrans;
using nlohmann::json;

namespace {

// Exit codes: 0 all checks pass, 1 a requested check failed, 2 bad usage,
// 3 computation error.

int threads_from_env() {
    const char* e = std::getenv("GRASSTRANS_THREADS");
    if (!e) return 1;
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end == e || *end != '\0' || v < 1)
        throw gt::GtError("GRASSTRANS_THREADS must be a positive integer");
    return static_cast<int>(v);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gt::GtError("cannot open output file: " + path);
    out << text;
}

void emit_failure(const json& j) { std::cerr << j.dump() << "\n"; }

std::string weight_str(const gt::IVec& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(m[i]);
    }
    return s;
}

struct SystemOpts {
    std::string field;
    int n = 0;
    int r = 0;
    int rank = 0;
    std::string a, b2, iota;

    bool has_preset() const { return !field.empty(); }
    bool has_raw() const { return rank > 0; }

    gt::RootSystemBC build() const {
        if (has_preset()) {
            if (n <= 0 || r <= 0) throw gt::GtError("--field requires --n and --r");
            return gt::grassmannian_preset(gt::parse_field(field), n, r);
        }
        if (!has_raw())
            throw gt::GtError("specify either --field/--n/--r or --rank/--a/--b2/--iota");
        return gt::make_root_system(rank, gt::rat_from_string(a.empty() ? "0" : a),
                                    gt::rat_from_string(b2.empty() ? "0" : b2),
                                    gt::rat_from_string(iota.empty() ? "0" : iota));
    }
};

void add_system_flags(CLI::App* cmd, SystemOpts& o) {
    cmd->add_option("--field", o.field, "R, C or H (Grassmannian preset)");
    cmd->add_option("--n", o.n, "ambient dimension of the preset");
    cmd->add_option("--r", o.r, "subspace dimension / rank of the preset");
    cmd->add_option("--rank", o.rank, "rank for raw multiplicities");
    cmd->add_option("--a", o.a, "multiplicity of 2(e_j +- e_k), rational");
    cmd->add_option("--b2", o.b2, "multiplicity of 2e_j (= 2b), rational");
    cmd->add_option("--iota", o.iota, "multiplicity of 4e_j, rational");
}

std::string describe(const gt::RootSystemBC& rs) {
    std::ostringstream os;
    if (rs.preset)
        os << "G(" << rs.preset->n << "," << rs.preset->r << ";"
           << gt::field_name(rs.preset->field) << ")";
    os << "[rank=" << rs.rank << " a=" << gt::rat_string(rs.a)
       << " 2b=" << gt::rat_string(rs.b2) << " iota=" << gt::rat_string(rs.iota) << "]";
    return os.str();
}

// the six rank-2 presets covering every field and both degenerate
// multiplicity patterns
std::vector<gt::RootSystemBC> default_grid() {
    using gt::Field;
    return {gt::grassmannian_preset(Field::Real, 4, 2),
            gt::grassmannian_preset(Field::Real, 5, 2),
            gt::grassmannian_preset(Field::Complex, 4, 2),
            gt::grassmannian_preset(Field::Complex, 5, 2),
            gt::grassmannian_preset(Field::Quaternion, 4, 2),
            gt::grassmannian_preset(Field::Quaternion, 5, 2)};
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOpts {
    SystemOpts sys;
    std::string kind = "cosine";
    std::string nu = "1";
    int deg = 8;
    std::string verify;  // "", "quad"
    int order = 24;
    std::string format = "csv";
    std::string output;
};

int run_spectrum(const SpectrumOpts& o) {
    gt::RootSystemBC rs = o.sys.build();
    gt::Kind kind = gt::parse_kind(o.kind);
    gt::Rat nu = gt::rat_from_string(o.nu);
    bool with_quad = (o.verify == "quad");
    if (!o.verify.empty() && !with_quad)
        throw gt::GtError("unknown --verify mode: " + o.verify);

    json rows = json::array();
    bool all_agree = true;
    for (const gt::IVec& m : gt::even_dominant_weights(rs.rank, o.deg)) {
        gt::SpectralSymbol sym = gt::spectral_symbol(rs, kind, nu, m);
        json row;
        row["m"] = m;
        row["value"] = sym.value.is_pole() ? "pole" : gt::double17(sym.value.value());
        row["ratio"] = gt::rat_string(sym.ratio);
        row["exact_zero"] = sym.exact_zero;
        if (with_quad) {
            double quad = gt::quadrature_symbol(rs, kind, nu, m, o.order);
            double target = gt::to_double(sym.ratio);
            double rel = std::fabs(quad - target) / std::max(1.0, std::fabs(target));
            row["quad"] = gt::double17(quad);
            row["rel_err"] = gt::double17(rel);
            row["agree"] = (rel <= 1e-6);
            all_agree = all_agree && (rel <= 1e-6);
        }
        rows.push_back(std::move(row));
    }

    std::string text;
    if (o.format == "json") {
        json out;
        out["command"] = "spectrum";
        out["root_system"] = gt::root_system_to_json(rs);
        out["kind"] = o.kind;
        out["nu"] = gt::rat_string(nu);
        out["rows"] = rows;
        text = out.dump(2) + "\n";
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "m,value,ratio,exact_zero";
        if (with_quad) os << ",quad,rel_err,agree";
        os << "\n";
        for (const json& row : rows) {
            os << weight_str(row.at("m").get<gt::IVec>()) << ','
               << row.at("value").get<std::string>() << ','
               << row.at("ratio").get<std::string>() << ','
               << (row.at("exact_zero").get<bool>() ? 1 : 0);
            if (with_quad)
                os << ',' << row.at("quad").get<std::string>() << ','
                   << row.at("rel_err").get<std::string>() << ','
                   << (row.at("agree").get<bool>() ? 1 : 0);
            os << "\n";
        }
        text = os.str();
    } else {
        throw gt::GtError("unknown --format: " + o.format);
    }
    emit(text, o.output);
    if (with_quad && !all_agree) {
        emit_failure({{"status", "fail"},
                      {"command", "spectrum"},
                      {"reason", "quadrature disagrees with closed form"},
                      {"rows", rows}});
        return 1;
    }
    return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
    std::string suite;
    SystemOpts sys;
    std::vector<double> deltas;
    int trials = 20;
    int deg = -1;
    std::vector<std::string> nus;
    long samples = -1;
    std::uint64_t seed = 12345;
};

struct SuiteReport {
    bool pass = true;
    json failures = json::array();
    std::ostringstream out;

    void check(bool ok, const std::string& line, const json& detail) {
        out << (ok ? "PASS " : "FAIL ") << line << "\n";
        if (!ok) {
            pass = false;
            failures.push_back(detail);
        }
    }
};

std::vector<gt::RootSystemBC> verify_systems(const SystemOpts& sys) {
    if (sys.has_preset() || sys.has_raw()) return {sys.build()};
    return default_grid();
}

void run_bs(SuiteReport& rep, const VerifyOpts& o, gt::Kind kind, bool factor_chain) {
    const double tol = 1e-8;
    std::vector<double> deltas = o.deltas.empty() ? std::vector<double>{2.0, 3.5, 5.0}
                                                  : o.deltas;
    for (const gt::RootSystemBC& rs : verify_systems(o.sys)) {
        auto pts = gt::generic_points(rs.rank, o.trials);
        for (double d : deltas) {
            double res = factor_chain ? gt::verify_factor_chain(rs, kind, d, pts)
                                      : gt::verify_bs(rs, kind, d, pts);
            std::ostringstream line;
            line << (factor_chain ? "factors " : "order-2r ")
                 << (kind == gt::Kind::Cosine ? "cos " : "sin ") << describe(rs)
                 << " delta=" << gt::double17(d) << " max_residual=" << gt::double17(res);
            rep.check(res <= tol, line.str(),
                      {{"suite", factor_chain ? "factors" : "bs"},
                       {"system", describe(rs)},
                       {"delta", d},
                       {"residual", res},
                       {"tol", tol}});
        }
    }
}

void run_eigen(SuiteReport& rep, const VerifyOpts& o) {
    std::vector<gt::RootSystemBC> systems;
    if (o.sys.has_preset() || o.sys.has_raw())
        systems.push_back(o.sys.build());
    else
        systems = {gt::grassmannian_preset(gt::Field::Real, 4, 2),
                   gt::grassmannian_preset(gt::Field::Complex, 5, 2)};
    std::vector<gt::Rat> nus;
    if (o.nus.empty())
        nus = {gt::Rat(0), gt::Rat(1), gt::Rat(3) / 2};
    else
        for (const auto& s : o.nus) nus.push_back(gt::rat_from_string(s));
    int deg = o.deg < 0 ? 6 : o.deg;
    for (const gt::RootSystemBC& rs : systems) {
        for (const gt::IVec& m : gt::even_dominant_weights(rs.rank, deg)) {
            gt::SymTrigPoly phi = gt::jacobi_polynomial(rs, m);
            gt::LaurentPoly p = gt::expand(phi);
            for (const gt::Rat& nu : nus) {
                gt::LaurentPoly lhs = gt::apply_M(rs, 2 * nu + 2, p);
                gt::LaurentPoly rhs = p * gt::eigenvalue_of_M(rs, nu, m);
                bool ok = (lhs == rhs);
                std::ostringstream line;
                line << "eigen " << describe(rs) << " nu=" << gt::rat_string(nu)
                     << " m=(" << weight_str(m) << ") exact "
                     << (ok ? "equality" : "MISMATCH");
                rep.check(ok, line.str(),
                          {{"suite", "eigen"},
                           {"system", describe(rs)},
                           {"nu", gt::rat_string(nu)},
                           {"m", m}});
            }
        }
    }
}

void run_mc(SuiteReport& rep, const VerifyOpts& o) {
    gt::RootSystemBC rs = (o.sys.has_preset() || o.sys.has_raw())
                              ? o.sys.build()
                              : gt::grassmannian_preset(gt::Field::Real, 4, 2);
    if (!rs.preset) throw gt::GtError("verify mc needs a Grassmannian preset");
    std::vector<gt::Rat> nus;
    if (o.nus.empty())
        nus = {gt::Rat(1)};
    else
        for (const auto& s : o.nus) nus.push_back(gt::rat_from_string(s));
    long samples = o.samples < 0 ? 200000 : o.samples;
    int deg = o.deg < 0 ? 4 : o.deg;
    auto angles = gt::sample_angle_sets(rs, samples, o.seed);
    for (gt::Kind kind : {gt::Kind::Cosine, gt::Kind::Sine}) {
        for (const gt::Rat& nu : nus) {
            for (const gt::IVec& m : gt::even_dominant_weights(rs.rank, deg)) {
                gt::McEstimate est = gt::mc_symbol_ratio(rs, kind, nu, m, angles);
                double target = gt::to_double(gt::spectral_symbol(rs, kind, nu, m).ratio);
                double gap = std::fabs(est.value - target);
                bool ok = gap <= 3.0 * est.stderr_ + 1e-12;
                std::ostringstream line;
                line << "mc " << describe(rs)
                     << (kind == gt::Kind::Cosine ? " cos" : " sin")
                     << " nu=" << gt::rat_string(nu) << " m=(" << weight_str(m)
                     << ") est=" << gt::double17(est.value)
                     << " target=" << gt::double17(target)
                     << " stderr=" << gt::double17(est.stderr_);
                rep.check(ok, line.str(),
                          {{"suite", "mc"},
                           {"system", describe(rs)},
                           {"kind", kind == gt::Kind::Cosine ? "cosine" : "sine"},
                           {"nu", gt::rat_string(nu)},
                           {"m", m},
                           {"estimate", est.value},
                           {"target", target},
                           {"stderr", est.stderr_}});
            }
        }
    }
}

void run_ks_kernel(SuiteReport& rep, const VerifyOpts& o) {
    std::vector<gt::Field> fields;
    if (o.sys.field.empty())
        fields = {gt::Field::Real, gt::Field::Complex, gt::Field::Quaternion};
    else
        fields = {gt::parse_field(o.sys.field)};
    std::vector<int> ranks = o.sys.r > 0 ? std::vector<int>{o.sys.r}
                                         : std::vector<int>{1, 2};
    long samples = o.samples < 0 ? 1000 : o.samples;
    for (gt::Field f : fields) {
        for (int r : ranks) {
            gt::KernelCheckResult kc = gt::knapp_stein_kernel_check(f, r, samples, o.seed);
            bool ok = kc.max_kernel_defect <= 1e-9 && kc.max_qr_defect <= 1e-8 &&
                      kc.max_pair_defect <= 1e-8;
            std::ostringstream line;
            line << "ks-kernel field=" << gt::field_name(f) << " r=" << r
                 << " kernel=" << gt::double17(kc.max_kernel_defect)
                 << " factor=" << gt::double17(kc.max_qr_defect)
                 << " pair=" << gt::double17(kc.max_pair_defect);
            rep.check(ok, line.str(),
                      {{"suite", "ks-kernel"},
                       {"field", gt::field_name(f)},
                       {"r", r},
                       {"kernel_defect", kc.max_kernel_defect},
                       {"factor_defect", kc.max_qr_defect},
                       {"pair_defect", kc.max_pair_defect}});

            // intertwining eigenvalue must specialize the sine symbol exactly
            gt::RootSystemBC rs = gt::grassmannian_preset(f, 2 * r, r);
            std::vector<gt::Rat> ts = {gt::Rat(1) / 8,  gt::Rat(1) / 5, gt::Rat(3) / 10,
                                       gt::Rat(2) / 5,  gt::Rat(9) / 20, gt::Rat(11) / 20,
                                       gt::Rat(3) / 4,  gt::Rat(1) / 3, gt::Rat(1) / 4,
                                       gt::Rat(7) / 20};
            auto weights = gt::even_dominant_weights(r, 8);
            bool coincide = true;
            for (size_t i = 0; i < ts.size(); ++i) {
                const gt::IVec& m = weights[(i * 3) % weights.size()];
                gt::Rat nu = -rs.a / 2 * (r - 2 * ts[i]);
                gt::Rat lhs = gt::knapp_stein_ratio(f, r, ts[i], m);
                gt::Rat rhs = gt::spectral_symbol(rs, gt::Kind::Sine, nu, m).ratio;
                if (lhs != rhs) coincide = false;
            }
            std::ostringstream line2;
            line2 << "ks-exact field=" << gt::field_name(f) << " r=" << r
                  << " sine-specialization " << (coincide ? "equality" : "MISMATCH");
            rep.check(coincide, line2.str(),
                      {{"suite", "ks-kernel"},
                       {"field", gt::field_name(f)},
                       {"r", r},
                       {"check", "sine specialization"}});
        }
    }
}

int run_verify(const VerifyOpts& o) {
    SuiteReport rep;
    if (o.suite == "bs-cos")
        run_bs(rep, o, gt::Kind::Cosine, false);
    else if (o.suite == "bs-sin")
        run_bs(rep, o, gt::Kind::Sine, false);
    else if (o.suite == "factors") {
        run_bs(rep, o, gt::Kind::Cosine, true);
        run_bs(rep, o, gt::Kind::Sine, true);
    } else if (o.suite == "eigen")
        run_eigen(rep, o);
    else if (o.suite == "mc")
        run_mc(rep, o);
    else if (o.suite == "ks-kernel")
        run_ks_kernel(rep, o);
    else
        throw gt::GtError("unknown suite: " + o.suite +
                          " (expected bs-cos, bs-sin, factors, eigen, mc, ks-kernel)");
    std::cout << rep.out.str();
    std::cout << (rep.pass ? "PASS" : "FAIL") << " " << o.suite << "\n";
    if (!rep.pass) {
        emit_failure({{"status", "fail"},
                      {"command", "verify"},
                      {"suite", o.suite},
                      {"failures", rep.failures}});
        return 1;
    }
    return 0;
}

// ------------------------------------------------------------------- stein

struct SteinOpts {
    std::string field = "R";
    int r = 1;
    int deg = 12;
    int grid = 9;
    std::vector<std::string> ts;
    std::string format = "csv";
    std::string output;
};

int run_stein(const SteinOpts& o) {
    gt::Field f = gt::parse_field(o.field);
    std::vector<gt::Rat> ts;
    if (o.ts.empty()) {
        for (int i = 1; i <= o.grid; ++i) ts.push_back(gt::Rat(i) / (o.grid + 1));
    } else {
        for (const auto& s : o.ts) ts.push_back(gt::rat_from_string(s));
    }
    auto weights = gt::even_dominant_weights(o.r, o.deg);

    json rows = json::array();
    bool pass = true;
    for (const gt::Rat& t : ts) {
        if (!(t > 0 && t < 1)) throw gt::GtError("stein: t must lie in (0,1)");
        bool first = true;
        gt::Rat mn;
        gt::IVec argmin;
        for (const gt::IVec& m : weights) {
            gt::Rat q = gt::knapp_stein_ratio(f, o.r, t, m);
            if (first || q < mn) {
                mn = q;
                argmin = m;
                first = false;
            }
        }
        bool positive = mn > 0;
        bool required = t < gt::Rat(1) / 2;  // open interval; no claim at or beyond 1/2
        if (required && !positive) pass = false;
        json row;
        row["t"] = gt::rat_string(t);
        row["min_ratio"] = gt::double17(gt::to_double(mn));
        row["min_ratio_exact"] = gt::rat_string(mn);
        row["argmin_m"] = argmin;
        row["positive"] = positive;
        row["claim"] = required ? "positive-required" : "report-only";
        rows.push_back(std::move(row));
    }

    std::string text;
    if (o.format == "json") {
        json out;
        out["command"] = "stein";
        out["field"] = o.field;
        out["r"] = o.r;
        out["deg"] = o.deg;
        out["rows"] = rows;
        text = out.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "t,min_ratio,min_ratio_exact,argmin_m,positive,claim\n";
        for (const json& row : rows)
            os << row.at("t").get<std::string>() << ','
               << row.at("min_ratio").get<std::string>() << ','
               << row.at("min_ratio_exact").get<std::string>() << ','
               << weight_str(row.at("argmin_m").get<gt::IVec>()) << ','
               << (row.at("positive").get<bool>() ? 1 : 0) << ','
               << row.at("claim").get<std::string>() << "\n";
        text = os.str();
    }
    emit(text, o.output);
    if (!pass) {
        emit_failure({{"status", "fail"},
                      {"command", "stein"},
                      {"reason", "nonpositive eigenvalue inside (0,1/2)"},
                      {"rows", rows}});
        return 1;
    }
    return 0;
}

// --------------------------------------------------------------- branching

struct BranchingOpts {
    std::string field = "R";
    int rank = 1;
    int alpha = 1;
    int deg = 12;
    std::string format = "csv";
    std::string output;
};

int run_branching(const BranchingOpts& o) {
    gt::Field f = gt::parse_field(o.field);
    auto weights = gt::branching_list(f, o.rank, o.alpha, o.deg);
    std::string text;
    if (o.format == "json") {
        json out;
        out["command"] = "branching";
        out["field"] = o.field;
        out["rank"] = o.rank;
        out["alpha"] = o.alpha;
        out["deg"] = o.deg;
        out["weights"] = weights;
        text = out.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "m,total_degree\n";
        for (const gt::IVec& m : weights) {
            int total = 0;
            for (int v : m) total += v;
            os << weight_str(m) << ',' << total << "\n";
        }
        text = os.str();
    }
    emit(text, o.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral engine for cosine and sine transforms on compact Grassmannians"};
    app.require_subcommand(1);

    SpectrumOpts so;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "tabulate transform eigenvalues over even dominant weights");
    add_system_flags(spectrum, so.sys);
    spectrum->add_option("--kind", so.kind, "cosine or sine")->capture_default_str();
    spectrum->add_option("--nu", so.nu, "exponent parameter, rational p/q")
        ->capture_default_str();
    spectrum->add_option("--deg", so.deg, "max total weight degree")->capture_default_str();
    spectrum->add_option("--verify", so.verify, "quad: cross-check rows by quadrature");
    spectrum->add_option("--order", so.order, "quadrature order per axis")
        ->capture_default_str();
    spectrum->add_option("--format", so.format, "csv or json")->capture_default_str();
    spectrum->add_option("--output", so.output, "write table to file instead of stdout");

    VerifyOpts vo;
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", vo.suite,
                       "bs-cos | bs-sin | factors | eigen | mc | ks-kernel")
        ->required();
    add_system_flags(verify, vo.sys);
    verify->add_option("--delta", vo.deltas, "exponent(s) for the operator identities");
    verify->add_option("--trials", vo.trials, "number of generic evaluation points")
        ->capture_default_str();
    verify->add_option("--deg", vo.deg, "max total weight degree");
    verify->add_option("--nu", vo.nus, "exponent parameter(s), rational");
    verify->add_option("--samples", vo.samples, "Monte Carlo sample count");
    verify->add_option("--seed", vo.seed, "random seed")->capture_default_str();

    SteinOpts to;
    CLI::App* stein = app.add_subcommand(
        "stein", "scan intertwining eigenvalue positivity over t in (0,1)");
    stein->add_option("--field", to.field, "R, C or H")->capture_default_str();
    stein->add_option("--r", to.r, "rank (n = 2r)")->capture_default_str();
    stein->add_option("--deg", to.deg, "max total weight degree")->capture_default_str();
    stein->add_option("--grid", to.grid, "number of interior grid points")
        ->capture_default_str();
    stein->add_option("--t", to.ts, "explicit rational t value(s), overrides --grid");
    stein->add_option("--format", to.format, "csv or json")->capture_default_str();
    stein->add_option("--output", to.output, "write table to file instead of stdout");

    BranchingOpts bo;
    CLI::App* branching = app.add_subcommand(
        "branching", "list weights of the holomorphic-form decomposition");
    branching->add_option("--field", bo.field, "R or H")->capture_default_str();
    branching->add_option("--rank", bo.rank, "rank")->capture_default_str();
    branching->add_option("--alpha", bo.alpha, "integer form parameter")->required();
    branching->add_option("--deg", bo.deg, "max total weight degree")->capture_default_str();
    branching->add_option("--format", bo.format, "csv or json")->capture_default_str();
    branching->add_option("--output", bo.output, "write table to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints the message or the requested help text
        return rc == 0 ? 0 : 2;
    }

    try {
        threads_from_env();  // validated; all pipelines currently run one worker
        if (spectrum->parsed()) return run_spectrum(so);
        if (verify->parsed()) return run_verify(vo);
        if (stein->parsed()) return run_stein(to);
        if (branching->parsed()) return run_branching(bo);
        return 2;
    } catch (const gt::GtError& e) {
        emit_failure({{"status", "error"}, {"message", e.what()}});
        return 3;
    } catch (const std::exception& e) {
        emit_failure({{"status", "error"}, {"message", e.what()}});
        return 3;
    }
}
