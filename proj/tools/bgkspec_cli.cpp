// Command-line front end: dispersion curves, verification reports, limit
// comparisons and free-molecular solutions as CSV or JSON.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bgk/limits.hpp"
#include "bgk/spectrum.hpp"
#include "bgk/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using bgk::cplx;

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultPoints = 401;
constexpr double kDefaultHalfRange = 4.0;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    double a = 0.0;
    int nodes = bgk::QuadratureScheme::default_nodes;
    std::string format = "csv";
    std::string out;
};

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_field(t.header[i]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (const double* d = std::get_if<double>(&row[i])) {
                os << format_number(*d);
            } else {
                os << csv_field(std::get<std::string>(row[i]));
            }
        }
        os << '\n';
    }
    return os.str();
}

json number_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// Informational rows carry no tolerance; the CSV cell is left empty.
Cell tolerance_cell(double tol) {
    if (std::isnan(tol)) return std::string();
    return tol;
}

json rows_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (const double* d = std::get_if<double>(&row[i])) {
                obj[t.header[i]] = number_json(*d);
            } else {
                const auto& str = std::get<std::string>(row[i]);
                obj[t.header[i]] = str.empty() ? json(nullptr) : json(str);
            }
        }
        rows.push_back(obj);
    }
    return rows;
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + c.out);
    f << text;
}

json defaults_json() {
    return {{"nodes", bgk::QuadratureScheme::default_nodes},
            {"points", kDefaultPoints},
            {"x_range_a0", {-kDefaultHalfRange, kDefaultHalfRange}},
            {"x_range_rule", "[-4, 4] clipped to (1 - 1e-3) * (-alpha, alpha)"}};
}

json header_json(const std::string& command, const Common& c) {
    return {{"command", command}, {"a", c.a}, {"nodes", c.nodes}, {"defaults", defaults_json()}};
}

void emit_table(const Common& c, const std::string& command, const Table& t, json extra = json::object()) {
    if (c.format == "csv") {
        emit(c, to_csv(t));
        return;
    }
    json doc = header_json(command, c);
    for (auto& [k, v] : extra.items()) doc[k] = v;
    doc["rows"] = rows_json(t);
    emit(c, doc.dump(2) + "\n");
}

bgk::GasParams checked_params(const Common& c) {
    if (!std::isfinite(c.a) || c.a < 0.0) throw UsageError("--a must be a finite number >= 0");
    if (c.nodes < 4 || c.nodes % 2 != 0) throw UsageError("--nodes must be an even number >= 4");
    return bgk::make_params(c.a);
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    // Written around the midpoint so that a symmetric range gives an exactly symmetric grid.
    for (int j = 0; j < n; ++j) g[j] = mid + half * (2.0 * j - (n - 1)) / (n - 1);
    return g;
}

void add_common(CLI::App* sub, Common& c, bool with_a = true) {
    if (with_a) sub->add_option("--a", c.a, "collision-frequency slope a >= 0")->capture_default_str();
    sub->add_option("--nodes", c.nodes, "quadrature node count (even)")->capture_default_str();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "output file (default: stdout)");
}

// ---- dispersion-curve ----

struct CurveArgs {
    Common c;
    std::optional<double> x_min, x_max;
    int points = kDefaultPoints;
};

void run_dispersion_curve(const CurveArgs& args) {
    const bgk::GasParams p = checked_params(args.c);
    const double clip = p.unbounded_cut() ? kDefaultHalfRange
                                          : std::min(kDefaultHalfRange, p.alpha * (1.0 - 1e-3));
    const double lo = args.x_min.value_or(-clip);
    const double hi = args.x_max.value_or(clip);
    if (!(std::abs(lo) < p.alpha) || !(std::abs(hi) < p.alpha))
        throw UsageError("x-range must lie inside the cut (-alpha, alpha), alpha = " + format_number(p.alpha));
    if (!(lo <= hi)) throw UsageError("--x-min must not exceed --x-max");
    if (args.points < 1) throw UsageError("--points must be >= 1");

    const bgk::QuadratureScheme s(p, args.c.nodes);
    Table t{{"x", "re_lambda_plus", "im_lambda_plus"}, {}};
    for (double x : uniform_grid(lo, hi, args.points)) {
        const cplx l = bgk::lambda_boundary(s, x, bgk::Side::plus);
        t.rows.push_back({x, l.real(), l.imag()});
    }
    emit_table(args.c, "dispersion-curve", t, {{"x_min", lo}, {"x_max", hi}, {"points", args.points}});
}

// ---- spectrum-verify ----

int run_spectrum_verify(const Common& c) {
    checked_params(c);
    const auto checks = bgk::spectrum_verify(c.a, c.nodes);
    const bool ok = bgk::all_passed(checks);
    if (c.format == "csv") {
        Table t{{"check", "status", "value", "tolerance", "note"}, {}};
        for (const auto& r : checks) t.rows.push_back({r.check, r.status, r.value, tolerance_cell(r.tolerance), r.note});
        emit(c, to_csv(t));
    } else {
        json doc = header_json("spectrum-verify", c);
        json arr = json::array();
        for (const auto& r : checks) {
            json e = {{"check", r.check},
                      {"status", r.status},
                      {"value", number_json(r.value)},
                      {"tolerance", number_json(r.tolerance)}};
            if (!r.note.empty()) e["note"] = r.note;
            arr.push_back(e);
        }
        doc["checks"] = arr;
        doc["all_passed"] = ok;
        emit(c, doc.dump(2) + "\n");
    }
    return ok ? 0 : kExitNumerical;
}

// ---- limits-compare ----

void run_limits_compare(const Common& c) {
    if (c.nodes < 4 || c.nodes % 2 != 0) throw UsageError("--nodes must be an even number >= 4");
    Table t{{"a", "metric", "value", "tolerance", "status"}, {}};
    auto row = [&](double a, const std::string& metric, double value, double tol) {
        const std::string status = std::isnan(tol) ? "info" : (value <= tol ? "pass" : "fail");
        t.rows.push_back({a, metric, value, tolerance_cell(tol), status});
    };
    const double nan = std::nan("");
    row(0.0, "lambda_rel_deviation_from_closed_form", bgk::closed_form_deviation(0.0, c.nodes), 1e-8);
    row(1e-6, "lambda_rel_deviation_from_closed_form", bgk::closed_form_deviation(1e-6, c.nodes), 1e-5);
    row(1e-3, "lambda_rel_deviation_from_closed_form", bgk::closed_form_deviation(1e-3, c.nodes), nan);
    row(10.0, "kernel_scaling_metric", bgk::kernel_scaling_metric(10.0), nan);
    row(100.0, "kernel_scaling_metric", bgk::kernel_scaling_metric(100.0), nan);
    row(1000.0, "kernel_scaling_metric", bgk::kernel_scaling_metric(1000.0), 1e-2);
    const double inf = std::numeric_limits<double>::infinity();
    row(inf, "fm_decay_rate_derived", bgk::fm_decay_rate(), nan);
    row(inf, "fm_decay_rate_published", bgk::fm_published_decay_rate(), nan);
    emit_table(c, "limits-compare", t);
}

// ---- fm-solve ----

struct FmArgs {
    Common c;
    double A0 = 0, A1 = 0, A2 = 0, A3 = 0, At1 = 0, At3 = 0;
    double x_min = 0.0, x_max = 2.0;
    int points = 11;
    int c_points = 16;
};

void run_fm_solve(const FmArgs& f) {
    if (f.points < 1 || f.c_points < 1) throw UsageError("--points and --c-points must be >= 1");
    if (!(f.x_min <= f.x_max)) throw UsageError("--x-min must not exceed --x-max");
    const auto sol = bgk::make_fm_solution(f.A0, f.A1, f.A2, f.A3, f.At1, f.At3);
    Table t{{"x", "C", "h"}, {}};
    double residual = 0.0;
    for (double x : uniform_grid(f.x_min, f.x_max, f.points)) {
        residual = std::max(residual, bgk::fm_residual(sol, x));
        for (int j = 0; j < f.c_points; ++j) {
            // Cell midpoints on [-4, 4]; C = 0 (where sgn C jumps) is never sampled.
            const double cv = -4.0 + 8.0 * (j + 0.5) / f.c_points;
            t.rows.push_back({x, cv, bgk::fm_general_solution(sol, x, cv)});
        }
    }
    if (f.c.format == "csv") {
        std::string text = to_csv(t);
        text += "residual,," + format_number(residual) + "\n";
        emit(f.c, text);
        return;
    }
    json doc = {{"command", "fm-solve"},
                {"constants",
                 {{"A0", f.A0}, {"A1", f.A1}, {"A2", f.A2}, {"A3", f.A3}, {"At1", f.At1}, {"At3", f.At3}}},
                {"decay_rate", sol.decay_rate},
                {"published_decay_rate", bgk::fm_published_decay_rate()},
                {"residual", residual},
                {"rows", rows_json(t)}};
    emit(f.c, doc.dump(2) + "\n");
}

// ---- dispersion-eval ----

struct EvalArgs {
    Common c;
    double z_re = 0.0, z_im = 0.0;
    std::string side = "plus";
};

void run_dispersion_eval(const EvalArgs& e) {
    const bgk::GasParams p = checked_params(e.c);
    const bgk::QuadratureScheme s(p, e.c.nodes);
    const cplx z(e.z_re, e.z_im);
    bgk::MomentSet m;
    if (z.imag() == 0.0 && std::abs(z.real()) < p.alpha) {
        if (e.side == "pv") {
            m = bgk::moments_pv(s, z.real());
        } else {
            m = bgk::moments_boundary(s, z.real(), e.side == "plus" ? bgk::Side::plus : bgk::Side::minus);
        }
    } else if (z.imag() == 0.0 && std::abs(z.real()) == p.alpha) {
        throw UsageError("z = +-alpha is the end of the cut; the dispersion function is not evaluated there");
    } else {
        m = bgk::moments_at(s, z);
    }
    const bgk::DispersionEval ev = bgk::dispersion_eval(p, m);

    Table t{{"z_re", "z_im", "region", "re_lambda", "im_lambda", "re_L0", "im_L0", "re_L1", "im_L1", "re_L2",
             "im_L2"},
            {}};
    std::vector<Cell> row{z.real(), z.imag(), std::string(bgk::to_string(ev.region)), ev.det.real(),
                          ev.det.imag()};
    for (int k = 0; k < 3; ++k) {
        if (ev.cofactors) {
            row.push_back((*ev.cofactors)[k].real());
            row.push_back((*ev.cofactors)[k].imag());
        } else {
            row.push_back(std::string());
            row.push_back(std::string());
        }
    }
    t.rows.push_back(row);
    json extra = json::object();
    json mat = json::array();
    for (int i = 0; i < 3; ++i) {
        json r = json::array();
        for (int j = 0; j < 3; ++j) r.push_back({ev.matrix(i, j).real(), ev.matrix(i, j).imag()});
        mat.push_back(r);
    }
    json moments = json::array();
    for (const cplx& v : m.t) moments.push_back({v.real(), v.imag()});
    extra["matrix"] = mat;
    extra["moments"] = moments;
    emit_table(e.c, "dispersion-eval", t, extra);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral analysis of the BGK equation with affine collision frequency"};
    app.require_subcommand(1);

    CurveArgs curve;
    auto* c1 = app.add_subcommand("dispersion-curve", "boundary value lambda(x + i0) on a grid inside the cut");
    add_common(c1, curve.c);
    c1->add_option("--x-min", curve.x_min, "grid start (default -4, clipped to the cut)");
    c1->add_option("--x-max", curve.x_max, "grid end (default 4, clipped to the cut)");
    c1->add_option("--points", curve.points, "number of grid points")->capture_default_str();

    Common verify;
    verify.format = "json";
    auto* c2 = app.add_subcommand("spectrum-verify", "run the invariant suite and report pass/fail");
    add_common(c2, verify);

    Common limits;
    auto* c3 = app.add_subcommand("limits-compare", "closed-form a = 0 agreement and large-a kernel scaling");
    add_common(c3, limits, false);

    FmArgs fm;
    auto* c4 = app.add_subcommand("fm-solve", "general solution for collision frequency proportional to speed");
    add_common(c4, fm.c, false);
    c4->add_option("--A0", fm.A0, "decaying mode exp(-kappa x)")->capture_default_str();
    c4->add_option("--A1", fm.A1, "constant mode 1")->capture_default_str();
    c4->add_option("--A2", fm.A2, "constant mode C")->capture_default_str();
    c4->add_option("--A3", fm.A3, "constant mode C^2 - 1")->capture_default_str();
    c4->add_option("--At1", fm.At1, "linear mode (2C^2 - 3)(x - sgn C)")->capture_default_str();
    c4->add_option("--At3", fm.At3, "growing mode exp(kappa x)")->capture_default_str();
    c4->add_option("--x-min", fm.x_min, "x grid start")->capture_default_str();
    c4->add_option("--x-max", fm.x_max, "x grid end")->capture_default_str();
    c4->add_option("--points", fm.points, "x grid points")->capture_default_str();
    c4->add_option("--c-points", fm.c_points, "C grid points on [-4, 4]")->capture_default_str();

    EvalArgs ev;
    auto* c5 = app.add_subcommand("dispersion-eval", "dispersion matrix data at one point");
    add_common(c5, ev.c);
    c5->add_option("--z-re", ev.z_re, "real part of z")->capture_default_str();
    c5->add_option("--z-im", ev.z_im, "imaginary part of z")->capture_default_str();
    c5->add_option("--side", ev.side, "for real z inside the cut: pv, plus or minus")
        ->check(CLI::IsMember({"pv", "plus", "minus"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c1) run_dispersion_curve(curve);
        if (*c2) return run_spectrum_verify(verify);
        if (*c3) run_limits_compare(limits);
        if (*c4) run_fm_solve(fm);
        if (*c5) run_dispersion_eval(ev);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bgk::DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
