#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsqm/errors.hpp"
#include "fsqm/locus_solver.hpp"

#include <cmath>
#include <map>

using namespace fsqm;

namespace {

const LevyIndex kTwo(2.0);
const UnitSystem kNat = UnitSystem::natural();

// frozen 50-digit solves of M22 = 0 on the textbook barrier
constexpr double kSigmaStar = 0.87902380623330228878; // rho = 0, n = 2
constexpr double kRayRho = 0.42427258300928184569;    // ratio 1, n = 2
constexpr double kRayH = 3.2406202308644169191;

std::map<long, double> by_column(const CurveTrace& t, const std::vector<double>& grid)
{
    std::map<long, double> out;
    for (const auto& p : t.points) {
        const long c = std::lround((p.rho - grid.front()) / (grid[1] - grid[0]));
        out[c] = p.sigma;
    }
    return out;
}

} // namespace

TEST_CASE("config validation")
{
    SolverConfig c;
    CHECK_NOTHROW(c.validate());
    c.sigma_min = 0.0;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = SolverConfig{};
    c.rho_max = c.rho_min;
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("solve_sigma_at_rho examples")
{
    const SolverConfig c;
    auto pts = solve_sigma_at_rho(0.0, kTwo, 2, Branch::Minus, LocusKind::SS, {1e-4, 2.0}, 4096, c);
    REQUIRE(pts.size() == 1);
    CHECK(std::abs(pts[0].sigma - kSigmaStar) < 1e-10);
    CHECK(pts[0].residual_rel < 1e-8);
    CHECK(pts[0].kind == LocusKind::SS);

    CHECK(solve_sigma_at_rho(0.0, kTwo, 2, Branch::Minus, LocusKind::SS, {-2.0, -1e-4}, 4096, c).empty());

    auto cpa = solve_sigma_at_rho(0.0, kTwo, 2, Branch::Minus, LocusKind::CPA, {-2.0, -1e-4}, 4096, c);
    REQUIRE(cpa.size() == 1);
    CHECK(std::abs(cpa[0].sigma + pts[0].sigma) < 1e-9);
    CHECK(solve_sigma_at_rho(0.0, kTwo, 2, Branch::Minus, LocusKind::CPA, {1e-4, 2.0}, 4096, c).empty());

    CHECK_THROWS_AS(solve_sigma_at_rho(0.0, kTwo, 2, Branch::Minus, LocusKind::SS, {1e-4, 2.0}, 8, c), DomainError);
    CHECK_THROWS_AS(solve_sigma_at_rho(0.0, kTwo, 2, Branch::Minus, LocusKind::SS, {-1.0, 1.0}, 64, c), DomainError);
    CHECK_THROWS_AS(solve_sigma_at_rho(0.0, kTwo, 2, Branch::Minus, LocusKind::SS, {1e-6, 1.0}, 64, c), DomainError);
}

TEST_CASE("alpha = 2, n = 1 vertical asymptote")
{
    const SolverConfig c;
    const auto x = estimate_asymptote(kTwo, 1, Branch::Minus, LocusKind::SS, c);
    REQUIRE(x);
    CHECK(std::abs(*x - 0.667) < 0.01);
    SolverConfig wide = c;
    wide.sigma_max = 200.0;
    const auto near = solve_sigma_at_rho(*x + 1e-4, kTwo, 1, Branch::Minus, LocusKind::SS, {1e-4, 200.0}, 8192, wide);
    REQUIRE_FALSE(near.empty());
    CHECK(near.back().sigma > 10.0);
    // curves that stay bounded have no asymptote in range
    CHECK_FALSE(estimate_asymptote(kTwo, 2, Branch::Minus, LocusKind::SS, c));

    const auto t = trace_curve(kTwo, 1, Branch::Minus, LocusKind::SS, c);
    CHECK(t.meta.partial);
    REQUIRE_FALSE(t.points.empty());
    CHECK(t.points.front().rho > 0.65);
    CHECK(t.meta.segments.size() == 1);
}

TEST_CASE("trace invariants: ordering, sign, validation")
{
    const SolverConfig c;
    const auto t = trace_curve(LevyIndex(1.7), 3, Branch::Minus, LocusKind::SS, c);
    REQUIRE(t.points.size() > 150);
    for (std::size_t i = 1; i < t.points.size(); ++i) REQUIRE(t.points[i].rho > t.points[i - 1].rho);
    for (const auto& p : t.points) {
        REQUIRE(p.sigma > c.sigma_min);
        REQUIRE(p.residual_rel < c.trace_tol);
        REQUIRE(p.H > 0.0);
        REQUIRE(p.n == 3);
        const auto phys = to_physical(p, LevyIndex(1.7), 1.0, kNat, c);
        REQUIRE(phys.oracle_rel < 1e-7);
    }
}

TEST_CASE("n-ordering and flattening at alpha = 2")
{
    const SolverConfig c;
    const auto grid = rho_grid(c.rho_min, c.rho_max, c.resolution);
    std::vector<std::map<long, double>> cols;
    std::vector<double> peaks;
    for (int n = 2; n <= 6; ++n) {
        const auto t = trace_curve(kTwo, n, Branch::Minus, LocusKind::SS, c);
        cols.push_back(by_column(t, grid));
        double peak = 0.0;
        for (const auto& p : t.points) peak = std::max(peak, p.sigma);
        peaks.push_back(peak);
    }
    for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
        int shared = 0;
        for (const auto& [col, s] : cols[k]) {
            auto it = cols[k + 1].find(col);
            if (it == cols[k + 1].end()) continue;
            ++shared;
            REQUIRE(s > it->second);
        }
        CHECK(shared > 150);
        CHECK(peaks[k] > peaks[k + 1]);
    }
}

TEST_CASE("alpha-ordering holds on the interior band and reverses near rho = 1")
{
    SolverConfig c;
    c.rho_min = -1.5;
    c.rho_max = 0.6;
    c.resolution = 120;
    const auto grid = rho_grid(c.rho_min, c.rho_max, c.resolution);
    for (int n : {2, 3}) {
        const auto a = by_column(trace_curve(LevyIndex(2.0), n, Branch::Minus, LocusKind::SS, c), grid);
        const auto b = by_column(trace_curve(LevyIndex(1.8), n, Branch::Minus, LocusKind::SS, c), grid);
        const auto d = by_column(trace_curve(LevyIndex(1.5), n, Branch::Minus, LocusKind::SS, c), grid);
        REQUIRE(a.size() == 120);
        for (const auto& [col, s] : a) {
            REQUIRE(s > b.at(col));
            REQUIRE(b.at(col) > d.at(col));
        }
    }
    // beyond rho ~ 0.7 the order is reversed
    const SolverConfig dflt;
    const auto hi2 = solve_sigma_at_rho(0.9, kTwo, 2, Branch::Minus, LocusKind::SS, {1e-4, 20.0}, 2048, dflt);
    const auto hi15 = solve_sigma_at_rho(0.9, LevyIndex(1.5), 2, Branch::Minus, LocusKind::SS, {1e-4, 20.0}, 2048, dflt);
    REQUIRE(hi2.size() == 1);
    REQUIRE(hi15.size() == 1);
    CHECK(hi15[0].sigma > hi2[0].sigma);
}

TEST_CASE("CPA trace mirrors the SS trace")
{
    const SolverConfig c;
    for (double a : {2.0, 1.5}) {
        const auto ss = trace_curve(LevyIndex(a), 2, Branch::Minus, LocusKind::SS, c);
        const auto cpa = trace_curve(LevyIndex(a), 2, Branch::Minus, LocusKind::CPA, c);
        REQUIRE(ss.points.size() == cpa.points.size());
        for (std::size_t i = 0; i < ss.points.size(); ++i) {
            REQUIRE(ss.points[i].rho == cpa.points[i].rho);
            REQUIRE(std::abs(ss.points[i].sigma + cpa.points[i].sigma) < 1e-8);
            REQUIRE(cpa.points[i].sigma < -c.sigma_min);
        }
    }
}

TEST_CASE("traces are bit-identical across runs")
{
    const SolverConfig c;
    const auto a = trace_curve(LevyIndex(1.3), 4, Branch::Minus, LocusKind::SS, c);
    const auto b = trace_curve(LevyIndex(1.3), 4, Branch::Minus, LocusKind::SS, c);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        REQUIRE(a.points[i].rho == b.points[i].rho);
        REQUIRE(a.points[i].sigma == b.points[i].sigma);
        REQUIRE(a.points[i].H == b.points[i].H);
    }
}

TEST_CASE("trace range checks")
{
    SolverConfig c;
    c.rho_min = -6.0;
    CHECK_THROWS_AS(trace_curve(kTwo, 2, Branch::Minus, LocusKind::SS, c), DomainError);
    c = SolverConfig{};
    c.rho_max = 0.9995;
    CHECK_THROWS_AS(trace_curve(kTwo, 2, Branch::Minus, LocusKind::SS, c), DomainError);
}

TEST_CASE("near alpha = 1 the loci are still resolved")
{
    const SolverConfig c;
    const auto t = trace_curve(LevyIndex(1.000005), 2, Branch::Minus, LocusKind::SS, c);
    CHECK(t.points.size() == 200);
    CHECK(t.anomalies.empty());
    for (const auto& p : t.points) REQUIRE(p.residual_rel < c.trace_tol);
}

TEST_CASE("ray_intersect")
{
    const SolverConfig c;
    const auto p = ray_intersect(1.0, kTwo, 2, LocusKind::SS, c);
    CHECK(std::abs(p.rho - kRayRho) < 1e-10);
    CHECK(std::abs(p.sigma - p.rho) < 1e-10);
    CHECK(std::abs(p.H - kRayH) < 1e-9);

    const auto q = ray_intersect(1.0, LevyIndex(1.5), 2, LocusKind::SS, c);
    CHECK(q.rho < p.rho);

    // CPA along the mirrored ray
    const auto m = ray_intersect(-1.0, kTwo, 2, LocusKind::CPA, c);
    CHECK(std::abs(m.rho - p.rho) < 1e-10);
    CHECK(std::abs(m.sigma + p.sigma) < 1e-10);

    CHECK_THROWS_AS(ray_intersect(-1.0, kTwo, 2, LocusKind::SS, c), DomainError);
    CHECK_THROWS_AS(ray_intersect(0.0, kTwo, 2, LocusKind::CPA, c), DomainError);

    SolverConfig left = c;
    left.rho_min = -2.0;
    left.rho_max = -1.0;
    try {
        ray_intersect(1.0, kTwo, 2, LocusKind::SS, left);
        FAIL("expected NoIntersectionError");
    } catch (const NoIntersectionError& e) {
        CHECK(std::string(e.what()).find("[-2, -1]") != std::string::npos);
    }
}

TEST_CASE("to_physical scaling")
{
    const SolverConfig c;
    const auto p = ray_intersect(1.0, kTwo, 2, LocusKind::SS, c);
    const auto e1 = to_physical(p, kTwo, 1.0, kNat, c);
    CHECK(e1.energy == doctest::Approx(p.H * p.H).epsilon(1e-14));
    CHECK(e1.oracle_rel < 1e-7);
    const auto e2 = to_physical(p, kTwo, 2.0, kNat, c);
    CHECK(e2.energy == doctest::Approx(e1.energy / 4.0).epsilon(1e-14));

    const LevyIndex a(1.6);
    const auto q = ray_intersect(1.0, a, 2, LocusKind::SS, c);
    const auto u1 = to_physical(q, a, 1.0, UnitSystem::natural(1.0), c);
    const auto u10 = to_physical(q, a, 1.0, UnitSystem::natural(10.0), c);
    CHECK(u10.energy != doctest::Approx(u1.energy));
    CHECK(u10.v_r / u10.energy == doctest::Approx(q.rho).epsilon(1e-12));
    CHECK(u10.v_i / u10.energy == doctest::Approx(q.sigma).epsilon(1e-12));
    CHECK(u10.v_r / u1.v_r == doctest::Approx(u10.energy / u1.energy).epsilon(1e-12));
    CHECK(u10.oracle_rel < 1e-7);

    LocusPoint bad = p;
    bad.sigma *= 1.01;
    CHECK_THROWS_AS(to_physical(bad, kTwo, 1.0, kNat, c), OracleError);
}

TEST_CASE("blue_shift_scan")
{
    const SolverConfig c;
    const auto one = blue_shift_scan(1.0, 2, {1.7}, 1.0, kNat, c);
    REQUIRE(one.size() == 1);
    CHECK(blue_shift_verdict(one) == Verdict::NotApplicable);
    const auto direct = to_physical(ray_intersect(1.0, LevyIndex(1.7), 2, LocusKind::SS, c), LevyIndex(1.7), 1.0, kNat, c);
    CHECK(one[0].energy == doctest::Approx(direct.energy).epsilon(1e-12));
    CHECK(one[0].v_r == doctest::Approx(direct.v_r).epsilon(1e-12));
    CHECK(one[0].d_implied == doctest::Approx(1.0).epsilon(1e-12));

    const auto rows = blue_shift_scan(1.0, 2, {2.0, 1.8, 1.6}, 1.0, kNat, c);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        REQUIRE_FALSE(r.error);
        CHECK(r.v_r / r.energy == doctest::Approx(r.rho).epsilon(1e-12));
        CHECK(r.v_i / r.energy == doctest::Approx(r.sigma).epsilon(1e-12));
        CHECK(r.v_r == doctest::Approx(rows[0].v_r).epsilon(1e-12));
        CHECK(r.oracle_rel < 1e-7);
    }
    CHECK(blue_shift_verdict(rows) == Verdict::Pass);

    CHECK_THROWS_AS(blue_shift_scan(1.0, 2, {1.8, 2.0}, 1.0, kNat, c), DomainError);
    CHECK_THROWS_AS(blue_shift_scan(-1.0, 2, {2.0}, 1.0, kNat, c), DomainError);

    SolverConfig left = c;
    left.rho_min = -2.0;
    left.rho_max = -1.0;
    const auto missing = blue_shift_scan(1.0, 2, {2.0, 1.8}, 1.0, kNat, left);
    CHECK(missing[0].error);
    CHECK(blue_shift_verdict(missing) == Verdict::Withheld);
}

TEST_CASE("branch_survey classification")
{
    const SolverConfig c;
    for (double a : {2.0, 1.2}) {
        const auto rep = branch_survey(SurveyGrid{}, LevyIndex(a), -3, 4, {LocusKind::SS}, {Branch::Minus, Branch::Plus}, c);
        CHECK_FALSE(rep.low_resolution);
        for (const auto& e : rep.entries) {
            const bool expected = e.branch == Branch::Minus && e.n > 0;
            INFO("alpha " << a << " n " << e.n << " " << to_string(e.branch));
            CHECK(e.admits_zeros == expected);
            CHECK_FALSE(e.anomaly);
            if (expected) CHECK(e.validated_roots > 0);
        }
    }
    SurveyGrid tiny;
    tiny.rho_points = 4;
    tiny.sigma_points = 4;
    const auto rep = branch_survey(tiny, kTwo, 1, 2, {LocusKind::SS, LocusKind::CPA}, {Branch::Minus}, c);
    CHECK(rep.low_resolution);
    CHECK(rep.entries.size() == 4);
}
