// lemni: closed-form radii for the lemniscate and left-half-plane targets,
// with empirical verification and boundary-point export.
//
// Subcommands: radius, verify, region, sweep. Output JSON (default) or CSV
// to stdout; diagnostics to stderr. Exit codes: 0 success, 1 verification
// failure, 2 usage or domain error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lemni/classes.hpp"
#include "lemni/geometry.hpp"
#include "lemni/radii.hpp"
#include "lemni/verify.hpp"

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1.0";

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void emit_json(const json& inputs, const std::string& command, json results) {
    json rec;
    rec["schema_version"] = kSchemaVersion;
    rec["command"] = command;
    rec["inputs"] = inputs;
    rec["results"] = std::move(results);
    std::cout << rec.dump(2) << "\n";
}

json radius_json(const lemni::RadiusResult& r) {
    return {{"formula_id", r.formula_id}, {"class", r.cls.label()},
            {"target", r.target.label()}, {"value", r.value},
            {"sharp", r.sharp},           {"clamped", r.clamped}};
}

void emit_radius_csv(const std::vector<lemni::RadiusResult>& rs) {
    std::cout << "formula_id,class,target,value,sharp,clamped\n";
    for (const auto& r : rs)
        std::cout << r.formula_id << "," << r.cls.label() << "," << r.target.label() << ","
                  << fmt17(r.value) << "," << (r.sharp ? 1 : 0) << "," << (r.clamped ? 1 : 0)
                  << "\n";
}

json report_json(const lemni::VerificationReport& r) {
    return {{"formula_id", r.formula_id},
            {"class", r.cls.label()},
            {"target", r.target.label()},
            {"closed_form", r.closed_form},
            {"empirical", r.empirical},
            {"abs_gap", r.abs_gap},
            {"sharpness_residual", r.sharpness_residual},
            {"passed", r.passed},
            {"clamped", r.clamped},
            {"samples", r.samples},
            {"tolerance", r.tolerance},
            {"note", r.note}};
}

struct ClassFlags {
    std::string cls;
    int n = 1;
    double alpha = 0.0;
    double A = 0.0;
    double B = 0.0;
    std::string target = "sl";
    double beta = 2.0;
};

lemni::RadiusResult solve_radius(const ClassFlags& f) {
    if (f.target == "sl") {
        if (f.cls == "s") return lemni::sl_radius_of_S(f.n);
        if (f.cls == "cs") return lemni::sl_radius_of_CS(f.n, f.alpha);
        if (f.cls == "st") return lemni::sl_radius_of_STAB(f.n, f.A, f.B);
    } else if (f.target == "m") {
        if (f.cls == "s") return lemni::m_radius_of_S(f.n, f.beta);
        if (f.cls == "cs") return lemni::m_radius_of_CS(f.n, f.alpha, f.beta);
        if (f.cls == "st")
            throw std::domain_error("no radius formula for class st with target m");
    }
    throw std::domain_error("unknown class/target combination: " + f.cls + "/" + f.target);
}

json class_inputs(const ClassFlags& f) {
    json in{{"class", f.cls}, {"n", f.n}, {"target", f.target}};
    if (f.cls == "cs") in["alpha"] = f.alpha;
    if (f.cls == "st") {
        in["A"] = f.A;
        in["B"] = f.B;
    }
    if (f.target == "m") in["beta"] = f.beta;
    return in;
}

int cmd_radius(const ClassFlags& f, const std::string& format) {
    const auto res = solve_radius(f);
    if (format == "csv")
        emit_radius_csv({res});
    else
        emit_json(class_inputs(f), "radius", json::array({radius_json(res)}));
    return 0;
}

int cmd_verify(const lemni::AuditGrid& grid, double tol, const std::string& format) {
    const auto reports = lemni::audit_all(grid, tol);
    bool all_passed = true;
    json results = json::array();
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        results.push_back(report_json(r));
    }
    if (format == "csv") {
        std::cout << "formula_id,class,target,closed_form,empirical,abs_gap,"
                     "sharpness_residual,passed,clamped,samples,tolerance\n";
        for (const auto& r : reports)
            std::cout << r.formula_id << "," << r.cls.label() << "," << r.target.label() << ","
                      << fmt17(r.closed_form) << "," << fmt17(r.empirical) << ","
                      << fmt17(r.abs_gap) << "," << fmt17(r.sharpness_residual) << ","
                      << (r.passed ? 1 : 0) << "," << (r.clamped ? 1 : 0) << "," << r.samples
                      << "," << fmt17(r.tolerance) << "\n";
    } else {
        json in{{"tol", tol}};
        emit_json(in, "verify", std::move(results));
    }
    for (const auto& r : reports)
        if (!r.passed)
            std::cerr << "verification failed: " << r.formula_id << " " << r.cls.label()
                      << " gap=" << r.abs_gap << " residual=" << r.sharpness_residual << "\n";
    return all_passed ? 0 : 1;
}

int cmd_region(long points, bool has_disk, double a, double rho, const std::string& format) {
    if (points < 16) throw std::domain_error("--points must be >= 16");
    constexpr double kPi = 3.141592653589793;

    struct Row {
        std::string curve;
        double t, x, y;
    };
    std::vector<Row> rows;
    rows.reserve(has_disk ? 2 * points : points);
    for (long i = 0; i < points; ++i) {
        const double t = -kPi / 2 + kPi * static_cast<double>(i) / static_cast<double>(points - 1);
        const auto p = lemni::boundary_point(t);
        rows.push_back({"lemniscate", p.t, p.x, p.y});
    }
    if (has_disk) {
        for (long i = 0; i < points; ++i) {
            const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(points);
            rows.push_back({"disk", t, a + rho * std::cos(t), rho * std::sin(t)});
        }
    }

    if (format == "csv") {
        std::cout << "curve,t,x,y\n";
        for (const auto& r : rows)
            std::cout << r.curve << "," << fmt17(r.t) << "," << fmt17(r.x) << "," << fmt17(r.y)
                      << "\n";
    } else {
        json results = json::array();
        for (const auto& r : rows)
            results.push_back({{"curve", r.curve}, {"t", r.t}, {"x", r.x}, {"y", r.y}});
        json in{{"points", points}};
        if (has_disk) {
            in["a"] = a;
            in["r"] = rho;
        }
        emit_json(in, "region", std::move(results));
    }
    return 0;
}

int cmd_sweep(const ClassFlags& fixed, const std::string& vary, double from, double to,
              long steps, const std::string& format) {
    if (steps < 1) throw std::domain_error("--steps must be >= 1");

    std::vector<std::pair<double, lemni::RadiusResult>> rows;
    for (long k = 0; k < steps; ++k) {
        const double v =
            steps == 1 ? from : from + (to - from) * static_cast<double>(k) / (steps - 1);
        ClassFlags f = fixed;
        if (vary == "alpha")
            f.alpha = v;
        else if (vary == "beta")
            f.beta = v;
        else if (vary == "A")
            f.A = v;
        else if (vary == "B")
            f.B = v;
        else if (vary == "n")
            f.n = static_cast<int>(std::lround(v));
        else
            throw std::domain_error("--vary must be one of alpha, beta, A, B, n");
        rows.emplace_back(v, solve_radius(f));
    }

    if (format == "csv") {
        std::cout << "param,value,radius,formula_id\n";
        for (const auto& [v, r] : rows)
            std::cout << vary << "," << fmt17(v) << "," << fmt17(r.value) << "," << r.formula_id
                      << "\n";
    } else {
        json results = json::array();
        for (const auto& [v, r] : rows)
            results.push_back(
                {{"param", vary}, {"value", v}, {"radius", r.value}, {"formula_id", r.formula_id}});
        json in = class_inputs(fixed);
        in["vary"] = vary;
        in["from"] = from;
        in["to"] = to;
        in["steps"] = steps;
        emit_json(in, "sweep", std::move(results));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radii of starlikeness for the lemniscate of Bernoulli and left-half-plane targets"};
    app.require_subcommand(1);

    std::string format = "json";
    ClassFlags f;

    auto* radius = app.add_subcommand("radius", "Compute one closed-form radius");
    radius->add_option("--class", f.cls, "Function class: s, cs, st")->required();
    radius->add_option("--n", f.n, "Series index (>= 1)");
    radius->add_option("--alpha", f.alpha, "Order for class cs, in [0, 1)");
    radius->add_option("--A", f.A, "Janowski A, -1 <= B < A <= 1");
    radius->add_option("--B", f.B, "Janowski B");
    radius->add_option("--target", f.target, "Target region: sl or m");
    radius->add_option("--beta", f.beta, "Bound for target m (> 1)");
    radius->add_option("--format", format, "json or csv");

    auto* verify = app.add_subcommand("verify", "Audit formulas against the empirical oracle");
    std::vector<int> g_n;
    std::vector<double> g_alpha, g_beta, g_A, g_B;
    double tol = 1e-6;
    verify->add_option("--n", g_n, "Grid of series indices");
    verify->add_option("--alpha", g_alpha, "Grid of orders");
    verify->add_option("--beta", g_beta, "Grid of M-target bounds");
    verify->add_option("--A", g_A, "Janowski A values (zipped with --B)");
    verify->add_option("--B", g_B, "Janowski B values (zipped with --A)");
    verify->add_option("--tol", tol, "Pass/fail tolerance");
    verify->add_option("--format", format, "json or csv");

    auto* region = app.add_subcommand("region", "Emit lemniscate (and disk) boundary points");
    long points = 128;
    double reg_a = 0.0, reg_r = 0.0;
    region->add_option("--points", points, "Points per curve (>= 16)");
    auto* opt_a = region->add_option("--a", reg_a, "Disk center");
    auto* opt_r = region->add_option("--r", reg_r, "Disk radius");
    region->add_option("--format", format, "json or csv");

    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and tabulate the radius");
    std::string vary;
    double from = 0.0, to = 0.0;
    long steps = 0;
    sweep->add_option("--vary", vary, "Parameter to vary: alpha, beta, A, B, n")->required();
    sweep->add_option("--from", from, "Range start")->required();
    sweep->add_option("--to", to, "Range end")->required();
    sweep->add_option("--steps", steps, "Number of samples (>= 1)")->required();
    sweep->add_option("--class", f.cls, "Function class: s, cs, st")->required();
    sweep->add_option("--n", f.n, "Series index");
    sweep->add_option("--alpha", f.alpha, "Order for class cs");
    sweep->add_option("--A", f.A, "Janowski A");
    sweep->add_option("--B", f.B, "Janowski B");
    sweep->add_option("--target", f.target, "Target region: sl or m");
    sweep->add_option("--beta", f.beta, "Bound for target m");
    sweep->add_option("--format", format, "json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (format != "json" && format != "csv")
            throw std::domain_error("--format must be json or csv");
        if (radius->parsed()) return cmd_radius(f, format);
        if (verify->parsed()) {
            if (g_A.size() != g_B.size())
                throw std::domain_error("--A and --B must have the same length");
            lemni::AuditGrid grid = lemni::AuditGrid::defaults();
            if (!g_n.empty()) grid.n = g_n;
            if (verify->count("--alpha")) grid.alpha = g_alpha;
            if (verify->count("--beta")) grid.beta = g_beta;
            if (!g_A.empty()) {
                grid.ab.clear();
                for (size_t i = 0; i < g_A.size(); ++i) grid.ab.emplace_back(g_A[i], g_B[i]);
            }
            return cmd_verify(grid, tol, format);
        }
        if (region->parsed()) {
            const bool has_a = opt_a->count() > 0;
            const bool has_r = opt_r->count() > 0;
            if (has_a != has_r) throw std::domain_error("--a and --r must be given together");
            return cmd_region(points, has_a, reg_a, reg_r, format);
        }
        if (sweep->parsed()) return cmd_sweep(f, vary, from, to, steps, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
