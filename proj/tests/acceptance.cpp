// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lemni/classes.hpp"
#include "lemni/geometry.hpp"
#include "lemni/radii.hpp"
#include "lemni/verify.hpp"

using namespace lemni;
using nlohmann::json;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    if (!ok) ++failures;
}

double now_seconds() {
    using clk = std::chrono::steady_clock;
    static const auto t0 = clk::now();
    return std::chrono::duration<double>(clk::now() - t0).count();
}

struct Timer {
    double start = now_seconds();
    double elapsed() const { return now_seconds() - start; }
};

std::string run_cli(const std::string& args, int* exit_code) {
    const std::string cmd = std::string(LEMNI_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    *exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

// 1. Starlike SL-radius via the CLI plus empirical agreement, under 1 s.
void criterion1() {
    Timer t;
    const double expected = 3.0 - 2.0 * kSqrt2;
    int code = -1;
    const auto out = run_cli("radius --class st --n 1 --A 1 --B -1 --target sl", &code);
    bool ok = code == 0;
    double value = 0.0;
    if (ok) {
        value = json::parse(out)["results"][0]["value"].get<double>();
        ok = std::fabs(value - expected) < 1e-12;
    }
    const auto map = extremal_map(ClassSpec::janowski(1, 1, -1));
    const double emp = empirical_radius(map, TargetSpec::sl());
    ok = ok && std::fabs(emp - expected) < 1e-6 && t.elapsed() < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "starlike SL-radius = %.15g (closed 3-2*sqrt(2), empirical gap %.2e, %.2fs)",
                  value, std::fabs(emp - expected), t.elapsed());
    report(1, ok, buf);
}

// 2. Inner/outer radius closed forms vs the distance oracle on 500 centers.
void criterion2() {
    Timer t;
    bool ok = true;
    double worst_in = 0.0, worst_out = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double a = 0.01 + i * (kSqrt2 - 0.02 - 0.01) / 499.0;
        worst_in = std::max(worst_in,
                            std::fabs(inner_radius(a) - extremal_distance_oracle(a, Extremum::Min)));
    }
    for (int i = 0; i < 500; ++i) {
        const double a = 0.01 + i * (3.0 - 0.02) / 499.0;
        worst_out = std::max(
            worst_out, std::fabs(outer_radius(a) - extremal_distance_oracle(a, Extremum::Max)));
    }
    ok = worst_in < 1e-8 && worst_out < 1e-8;
    ok = ok && std::fabs(inner_radius(kInnerBreak) - kSqrt2 / 3.0) < 1e-12;
    ok = ok && std::fabs(outer_radius(kOuterBreak) - 1.0 / kSqrt2) < 1e-12;
    ok = ok && t.elapsed() < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "closed forms vs oracle over 500 centers (worst %.2e / %.2e, %.2fs)", worst_in,
                  worst_out, t.elapsed());
    report(2, ok, buf);
}

// 3. Formula-oracle agreement over the default audit grid at 1e-6.
std::vector<VerificationReport> g_reports;
void criterion3() {
    Timer t;
    g_reports = audit_all(AuditGrid::defaults(), 1e-6);
    bool ok = !g_reports.empty();
    double worst_gap = 0.0, worst_res = 0.0;
    for (const auto& r : g_reports) {
        ok = ok && r.passed;
        worst_gap = std::max(worst_gap, r.abs_gap);
        worst_res = std::max(worst_res, r.sharpness_residual);
        if (!r.passed)
            std::fprintf(stderr, "  audit failure: %s %s gap=%.3e residual=%.3e\n",
                         r.formula_id.c_str(), r.cls.label().c_str(), r.abs_gap,
                         r.sharpness_residual);
    }
    ok = ok && t.elapsed() < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%zu audit reports pass at 1e-6 (worst gap %.2e, worst residual %.2e, %.1fs)",
                  g_reports.size(), worst_gap, worst_res, t.elapsed());
    report(3, ok, buf);
}

// 4. Tangency identity for unclamped SL radii with proof-disk center >= 2 sqrt(2)/3.
void criterion4() {
    bool ok = true;
    int checked = 0;
    const auto grid = AuditGrid::defaults();
    const auto check_disk = [&](const RealDisk& d) {
        if (d.center >= kInnerBreak) {
            ok = ok && std::fabs(d.center + d.radius - kSqrt2) < 1e-10;
            ++checked;
        } else {
            // the other tangency branch
            ok = ok && std::fabs(d.radius - inner_radius(d.center)) < 1e-10;
        }
    };
    for (int n : grid.n) {
        const auto rs = sl_radius_of_S(n);
        if (!rs.clamped) check_disk(s_class_disk(n, rs.value));
        for (double a : grid.alpha) {
            const auto rc = sl_radius_of_CS(n, a);
            if (!rc.clamped) check_disk(cs_disk(n, a, rc.value));
        }
        for (auto [A, B] : grid.ab) {
            const auto rj = sl_radius_of_STAB(n, A, B);
            if (!rj.clamped) check_disk(janowski_disk(n, A, B, rj.value));
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "center + radius = sqrt(2) at %d tangency points", checked);
    report(4, ok && checked > 0, buf);
}

// 5. Exponent adjudication for the close-to-starlike M-radius at n = 2.
void criterion5() {
    const auto res = m_radius_of_CS(2, 0.0, 2.0);
    const auto map = extremal_map(res.cls);
    const double emp = empirical_radius(map, res.target);
    const double a1 = 3.0;
    const double printed = 1.0 / (a1 + std::sqrt(a1 * a1 + 3.0));  // no 1/n exponent
    const bool corrected_matches = std::fabs(res.value - emp) < 1e-6;
    const bool printed_differs = std::fabs(printed - emp) > 1e-2;
    bool noted = false;
    for (const auto& r : g_reports)
        if (r.formula_id == "m_radius_cs" && r.cls.n == 2 && !r.note.empty()) noted = true;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "exponent fix: corrected %.9g vs empirical %.9g; printed form %.9g off by %.3g%s",
                  res.value, emp, printed, std::fabs(printed - emp),
                  noted ? " (noted in audit report)" : "");
    report(5, corrected_matches && printed_differs && noted, buf);
}

// 6. R3 bisection vs an independent 10^4-point r-grid scan.
void criterion6() {
    const double r3 = janowski_R3(1, 1.0, 0.5);
    // grid scan for the last all-good cell, refined inside that cell
    const long m = 10000;
    long fail = m;
    for (long i = 1; i < m; ++i) {
        if (!disk_in_lemniscate(janowski_disk(1, 1.0, 0.5, static_cast<double>(i) / m))) {
            fail = i;
            break;
        }
    }
    double lo = static_cast<double>(fail - 1) / m;
    double hi = static_cast<double>(fail) / m;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (disk_in_lemniscate(janowski_disk(1, 1.0, 0.5, mid)) ? lo : hi) = mid;
    }
    const bool ok = std::fabs(r3 - lo) < 1e-6 &&
                    sl_radius_of_STAB_Bpos(1, 1.0, 0.5).formula_id == "sl_radius_st_bpos_r3";
    char buf[128];
    std::snprintf(buf, sizeof(buf), "R3 = %.10g, grid-scan value %.10g, gap %.2e", r3, lo,
                  std::fabs(r3 - lo));
    report(6, ok, buf);
}

// 7. Inclusion oracle vs brute-force limit-disk sampling on a 20x20 grid.
void criterion7() {
    int points = 0, mismatches = 0, literal_warnings = 0;
    for (int i = 0; i < 20; ++i) {
        const double B = -0.9 + i * (0.999 + 0.9) / 19.0;
        for (int j = 0; j < 20; ++j) {
            const double A = -0.9 + j * (1.0 + 0.9) / 19.0;
            if (!(B < A - 1e-9) || A > 1.0) continue;
            ++points;
            const auto v = sl_inclusion_STAB(A, B);

            bool brute = std::isfinite(v.limit_radius) &&
                         in_lemniscate({v.limit_center, 0.0});
            if (brute) {
                for (int k = 0; k < 4096 && brute; ++k) {
                    const double th = 2.0 * 3.141592653589793 * k / 4096.0;
                    const std::complex<double> w{v.limit_center + v.limit_radius * std::cos(th),
                                                 v.limit_radius * std::sin(th)};
                    brute = std::abs(w * w - 1.0) <= 1.0 + 1e-9;
                }
            }
            if (brute != v.included) ++mismatches;
            if (v.literal_condition_result != v.included) ++literal_warnings;
        }
    }
    if (literal_warnings > 0)
        std::fprintf(stderr,
                     "  warning: printed inclusion conditions disagree with the oracle at %d of "
                     "%d grid points\n",
                     literal_warnings, points);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "oracle matches brute force at %d/%d grid points (%d literal-condition warnings)",
                  points - mismatches, points, literal_warnings);
    report(7, points > 0 && mismatches == 0, buf);
}

// 8. Property suite: monotonicity, strict-interior residual, JSON/CSV identity.
void criterion8() {
    bool ok = true;

    // disk radii strictly increasing in r
    double pj = -1, pc = -1, ps = -1;
    for (int i = 0; i < 99; ++i) {
        const double r = i / 100.0;
        const double j = janowski_disk(1, 0.75, 0.25, r).radius;
        const double c = cs_disk(1, 0.25, r).radius;
        const double s = s_class_disk(1, r).radius;
        ok = ok && j > pj && c > pc && s > ps;
        pj = j;
        pc = c;
        ps = s;
    }

    // m_radius_of_S increasing in beta
    double prev = 0.0;
    for (double b : {1.1, 1.5, 2.0, 2.5, 3.0}) {
        const double v = m_radius_of_S(1, b).value;
        ok = ok && v > prev;
        prev = v;
    }

    // strict interior at half the radius
    const auto map = extremal_map(ClassSpec::s_class(1));
    ok = ok && sharpness_check(map, TargetSpec::sl(), sl_radius_of_S(1).value / 2) > 1e-3;

    // JSON/CSV identity and byte-exact round-trip
    int cj = -1, cc = -1;
    const std::string flags = "radius --class cs --n 1 --alpha 0.25 --target sl";
    const auto js = run_cli(flags, &cj);
    const auto cs = run_cli(flags + " --format csv", &cc);
    ok = ok && cj == 0 && cc == 0;
    if (ok) {
        const double jval = json::parse(js)["results"][0]["value"].get<double>();
        const auto pos = cs.find('\n');
        const auto row = cs.substr(pos + 1);
        // value is the 4th column
        size_t p = 0;
        for (int k = 0; k < 3; ++k) p = row.find(',', p) + 1;
        const double cval = std::strtod(row.c_str() + p, nullptr);
        ok = ok && std::fabs(jval - cval) <= std::fabs(jval) * 1e-15;
        std::string body = js;
        if (!body.empty() && body.back() == '\n') body.pop_back();
        ok = ok && json::parse(body).dump(2) == body;
    }
    report(8, ok, "monotonicity, interior residual, and JSON/CSV round-trip properties");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
