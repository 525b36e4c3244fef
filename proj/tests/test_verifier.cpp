#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <jetframe/errors.hpp>
#include <jetframe/verify.hpp>

#include <cstdlib>

using namespace jt;

namespace {

std::vector<VectorField> fields_of(const FrameSpec& spec) {
    std::vector<VectorField> out;
    for (auto& f : spec.fields) out.push_back(f.field);
    return out;
}

/// L * R with identity blocks in L and R: rank exactly r
std::vector<std::vector<Rational>> planted_rank(Rng& rng, int rows, int cols, int r) {
    std::vector<std::vector<Rational>> L(rows, std::vector<Rational>(r)), R(r, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < r; ++j) L[i][j] = i < r ? Rational(i == j) : small_rational(rng);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) R[i][j] = j < r ? Rational(i == j) : small_rational(rng);
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int t = 0; t < r; ++t) m[i][j] += L[i][t] * R[t][j];
    // shuffle rows so the planted block is not on top
    for (int i = rows - 1; i > 0; --i) std::swap(m[i], m[rng.uniform(0, i)]);
    return m;
}

const std::vector<JetConfig>& configs() {
    static const std::vector<JetConfig> cs{
        JetConfig::make(2, 1, {2}),
        JetConfig::make(2, 2, {3}),
        JetConfig::make(2, 1, {1, 2}),
        JetConfig::make(1, 1, {2}, Case::Logarithmic),
    };
    return cs;
}

}  // namespace

TEST_CASE("tangency verdicts") {
    JetConfig cfg = JetConfig::make(2, 1, {2});
    CHECK(check_tangency(cfg, VectorField{}, TangencyMode::Identical).pass);
    TangencyVerdict bad = check_tangency(cfg, VectorField::basis(VarId::z(2)), TangencyMode::Identical);
    CHECK_FALSE(bad.pass);
    CHECK(bad.component == 1);
    CHECK(bad.witness == 0);
    FieldForge forge(cfg);
    CHECK(check_tangency(cfg, forge.T_jq(2, 1), TangencyMode::Identical).pass);
    CHECK(required_mode(cfg) == TangencyMode::Identical);
    CHECK(required_mode(JetConfig::make(1, 1, {2}, Case::Logarithmic)) == TangencyMode::ModuloQ);
}

TEST_CASE("vertical points") {
    for (auto& cfg : configs()) {
        VerticalPoint a = sample_vertical_point(cfg, 11), b = sample_vertical_point(cfg, 11);
        CHECK(a.assignment == b.assignment);
        CHECK(a.attempts >= 1);
        CHECK(a.assignment.at(cfg.pivot_jet()) == 1);
        auto eqs = defining_equations(cfg, Base::Dt);
        for (auto& comp : eqs)
            for (auto& e : comp) CHECK(e.eval(a.assignment) == 0);
        for (auto& v : cfg.ambient_vars()) CHECK(a.assignment.count(v) == 1);
        if (cfg.is_log())
            for (int j = 1; j <= cfg.c(); ++j) CHECK(a.assignment.at(VarId::w(j)) != 0);
    }
    JetConfig cfg = configs()[1];
    CHECK_FALSE(sample_vertical_point(cfg, 1).assignment == sample_vertical_point(cfg, 2).assignment);
}

TEST_CASE("the two bases cut out the same fiber") {
    // at z_1' = 1 every D_{z_1} equation vanishes exactly when every D_t equation does
    for (auto& cfg : configs()) {
        VerticalPoint vp = sample_vertical_point(cfg, 3);
        for (auto& comp : defining_equations(cfg, Base::Dz1))
            for (auto& e : comp) CHECK(e.eval(vp.assignment) == 0);
        Point moved = vp.assignment;
        moved[VarId::jet(cfg.non_pivot().empty() ? cfg.pivot : cfg.non_pivot().front(), cfg.k)] += 1;
        bool dt_zero = true, dz_zero = true;
        for (auto& comp : defining_equations(cfg, Base::Dt))
            for (auto& e : comp) dt_zero = dt_zero && e.eval(moved) == 0;
        for (auto& comp : defining_equations(cfg, Base::Dz1))
            for (auto& e : comp) dz_zero = dz_zero && e.eval(moved) == 0;
        CHECK(dt_zero == dz_zero);
    }
}

TEST_CASE("expected dimension") {
    CHECK(expected_dimension(JetConfig::make(2, 1, {2})) == 7);
    CHECK(expected_dimension(JetConfig::make(2, 2, {3})) == 12);
    CHECK(expected_dimension(JetConfig::make(3, 2, {3})) == 25);
    CHECK(expected_dimension(JetConfig::make(2, 3, {4})) == 18);
    CHECK(expected_dimension(JetConfig::make(2, 1, {1, 2})) == 7);
    CHECK(expected_dimension(JetConfig::make(1, 1, {2}, Case::Logarithmic)) == 5);
    CHECK(expected_dimension(JetConfig::make(2, 2, {3}, Case::Logarithmic)) == 16);
}

TEST_CASE("exact rank against planted ranks") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = rng.uniform(1, 7), cols = rng.uniform(1, 7);
        int r = rng.uniform(0, std::min(rows, cols));
        CHECK(exact_rank(planted_rank(rng, rows, cols, r)) == r);
    }
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{Rational(1, 2), Rational(1, 3)}, {Rational(3), Rational(2)}}) == 1);
}

TEST_CASE("solve_linear") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.uniform(1, 5);
        auto m = planted_rank(rng, n, n, n);
        std::vector<Rational> x(n), b(n);
        for (auto& v : x) v = small_rational(rng);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[i] += m[i][j] * x[j];
        auto got = solve_linear(m, b);
        REQUIRE(got.has_value());
        CHECK(*got == x);
    }
    CHECK_FALSE(solve_linear({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {Rational(1), Rational(1)})
                    .has_value());
}

TEST_CASE("frames have full rank and tangent gradients") {
    for (auto& cfg : configs()) {
        FrameSpec spec = assemble_frame(cfg);
        auto fs = fields_of(spec);
        CHECK(static_cast<int>(fs.size()) == expected_dimension(cfg));
        for (std::uint64_t s = 1; s <= 3; ++s) {
            VerticalPoint vp = sample_vertical_point(cfg, s);
            CHECK(rank_at_point(cfg, fs, vp.assignment) == expected_dimension(cfg));
            CHECK(gradient_failures(cfg, fs, vp.assignment).empty());
        }
    }
}

TEST_CASE("rank controls") {
    JetConfig cfg = JetConfig::make(2, 2, {3});
    FrameSpec without = assemble_frame(cfg, FrameOptions{false});
    VerticalPoint vp = sample_vertical_point(cfg, 1);
    CHECK(rank_at_point(cfg, fields_of(without), vp.assignment) == expected_dimension(cfg) - 1);

    // a duplicated field does not raise the rank
    auto fs = fields_of(assemble_frame(cfg));
    fs.push_back(fs.front());
    CHECK(rank_at_point(cfg, fs, vp.assignment) == expected_dimension(cfg));

    // a non-tangent field shows up as a gradient failure
    fs.push_back(VectorField::basis(VarId::jet(2, 1)));
    auto bad = gradient_failures(cfg, fs, vp.assignment);
    REQUIRE(bad.size() == 1);
    CHECK(bad.front() == static_cast<int>(fs.size()) - 1);
}

TEST_CASE("frame matrix shape") {
    JetConfig cfg = JetConfig::make(2, 1, {2});
    auto fs = fields_of(assemble_frame(cfg));
    auto m = frame_matrix(cfg, fs, sample_vertical_point(cfg, 1).assignment);
    CHECK(m.size() == fs.size());
    for (auto& row : m) CHECK(row.size() == cfg.ambient_vars().size());
}

TEST_CASE("pole audit") {
    for (int k = 1; k <= 3; ++k) {
        PoleTable t = pole_audit(assemble_frame(JetConfig::make(2, k, {k + 1})));
        CHECK(t.bound == 5 * k - 2);
        CHECK(t.max == 5 * k - 2);
        CHECK(t.max_ok());
        CHECK(t.a_degree_ok);
    }
    PoleTable t = pole_audit(assemble_frame(JetConfig::make(2, 2, {3})));
    CHECK(t.achiever.rfind("T_beta", 0) == 0);
    // the closed forms are upper bounds, not exact for every family
    CHECK_FALSE(t.all_match);
    int mismatches = 0;
    for (auto& r : t.rows)
        if (!r.matches) {
            ++mismatches;
            REQUIRE(r.predicted.has_value());
            CHECK(r.computed != *r.predicted);
        }
    CHECK(mismatches > 0);
}

TEST_CASE("vertical fields and their pole orders") {
    JetConfig cfg = JetConfig::make(2, 3, {4});
    for (int l = 1; l <= 3; ++l) {
        VectorField t = vertical_T(cfg, l);
        CHECK(check_tangency(cfg, t, TangencyMode::Identical).pass);
        CHECK(t.pole_order() == cfg.k - l + 2);
    }
}

TEST_CASE("fiber curves") {
    for (auto cfg : {JetConfig::make(2, 1, {2}), JetConfig::make(2, 2, {3})}) {
        FiberCurveResult r = fiber_curve_check(cfg, 5, 50);
        CHECK(r.curves == 50);
        CHECK(r.pass());
    }
}

TEST_CASE("report pass logic") {
    Report r;
    r.expected_dimension = 3;
    r.frame_size = 3;
    r.rank_results.push_back(RankRecord{1, 3, 3, true, {}});
    r.finalize();
    CHECK(r.pass);
    r.rank_results.push_back(RankRecord{2, 2, 3, true, {}});
    r.finalize();
    CHECK_FALSE(r.pass);
    r.rank_results.pop_back();
    r.verdicts.push_back(TangencyRecord{"T", TangencyMode::Identical, TangencyVerdict{false, 1, 0}});
    r.finalize();
    CHECK_FALSE(r.pass);
    r.verdicts.clear();
    r.identity_suite.push_back(IdentityResult{"x", false, ""});
    r.finalize();
    CHECK_FALSE(r.pass);
    r.identity_suite.clear();
    PoleTable t;
    t.bound = 3;
    t.max = 4;
    r.pole_table = t;
    r.finalize();
    CHECK_FALSE(r.pass);
}

TEST_CASE("verify_frame end to end") {
    for (auto& cfg : configs()) {
        VerifyOptions opt;
        opt.identities = true;
        Report r = verify_frame(assemble_frame(cfg), opt);
        CHECK(r.pass);
        CHECK(r.frame_size == r.expected_dimension);
        CHECK(static_cast<int>(r.rank_results.size()) == opt.points);
        CHECK_FALSE(r.identity_suite.empty());
    }
    Report bad = verify_frame(assemble_frame(JetConfig::make(2, 2, {3}), FrameOptions{false}), VerifyOptions{});
    CHECK_FALSE(bad.pass);
}

TEST_CASE("results do not depend on the thread count") {
    JetConfig cfg = JetConfig::make(2, 2, {3});
    FrameSpec spec = assemble_frame(cfg);
    setenv("JETFRAME_THREADS", "1", 1);
    Report a = verify_frame(spec, VerifyOptions{});
    setenv("JETFRAME_THREADS", "4", 1);
    Report b = verify_frame(spec, VerifyOptions{});
    unsetenv("JETFRAME_THREADS");
    REQUIRE(a.rank_results.size() == b.rank_results.size());
    for (std::size_t i = 0; i < a.rank_results.size(); ++i) {
        CHECK(a.rank_results[i].seed == b.rank_results[i].seed);
        CHECK(a.rank_results[i].rank == b.rank_results[i].rank);
    }
    std::vector<int> hits(100, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
}

TEST_CASE("identity suite") {
    for (int k = 1; k <= 3; ++k)
        for (auto& r : verify_identities(2, k, 3).identity_suite) {
            INFO(r.name << ": " << r.detail);
            CHECK(r.pass);
        }
    CHECK_FALSE(check_tgt_sym(2, true).pass);
    CHECK(check_tgt_sym(1, true).pass);
}
