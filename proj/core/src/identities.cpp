#include <jetframe/errors.hpp>
#include <jetframe/fields.hpp>
#include <jetframe/identities.hpp>
#include <jetframe/rng.hpp>
#include <jetframe/series.hpp>

#include <algorithm>

namespace jetframe {

namespace {

IdentityResult result(std::string name, int checked, int failed, const std::string& first) {
    IdentityResult r;
    r.name = std::move(name);
    r.pass = failed == 0;
    r.detail = std::to_string(checked) + " checked";
    if (failed) r.detail += ", " + std::to_string(failed) + " failed, first: " + first;
    return r;
}

}  // namespace

IdentityResult check_bell_inverse(const JetConfig& cfg) {
    const int k = cfg.k;
    BellMatrix b1 = bell_matrix_z1(cfg);
    BellMatrix bt = bell_matrix_t(k);
    Substitution s = geo_in_std(cfg);
    std::vector<std::vector<FracPoly>> btz(k, std::vector<FracPoly>(k));
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) btz[p][q] = substitute(bt[p][q], s);
    int checked = 0, failed = 0;
    std::string first;
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            FracPoly left, right;
            for (int m = 0; m < k; ++m) {
                left += FracPoly(b1[p][m]) * btz[m][q];
                right += btz[p][m] * FracPoly(b1[m][q]);
            }
            FracPoly want(p == q ? 1 : 0);
            checked += 2;
            if (!(left == want) || !(right == want)) {
                ++failed;
                if (first.empty()) first = "entry (" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")";
            }
        }
    return result("bell-inverse k=" + std::to_string(k), checked, failed, first);
}

IdentityResult check_faa_di_bruno(int k, std::uint64_t seed, int curves) {
    int checked = 0, failed = 0;
    std::string first;
    for (int c = 0; c < curves; ++c) {
        Rng rng(derive_seed(seed, c));
        TruncSeries g = TruncCurve::random(1, k, rng).f[0];
        TruncSeries h = TruncCurve::random(1, k, rng).f[0].without_constant();
        if (h[1] == 0) h[1] = rng.nonzero(-3, 3);
        TruncSeries gh = g.compose(h.reversion());
        std::vector<Rational> hv(h.coeffs().begin() + 1, h.coeffs().end());
        for (int p = 1; p <= k; ++p) {
            Rational rhs = 0;
            for (int q = 1; q <= p; ++q) rhs += bell_value(p, q, hv) * gh[q];
            ++checked;
            if (rhs != g[p]) {
                ++failed;
                if (first.empty()) first = "curve " + std::to_string(c) + " p=" + std::to_string(p);
            }
        }
    }
    return result("faa-di-bruno k=" + std::to_string(k), checked, failed, first);
}

IdentityResult check_geo_jets_oracle(const JetConfig& cfg, std::uint64_t seed, int curves) {
    Substitution s = geo_in_std(cfg);
    int checked = 0, failed = 0;
    std::string first;
    for (int c = 0; c < curves; ++c) {
        Rng rng(derive_seed(seed, c));
        TruncCurve curve = TruncCurve::random(cfg.n, cfg.k, rng);
        auto& piv = curve.f[cfg.pivot - 1];
        if (piv[1] == 0) piv[1] = rng.nonzero(-3, 3);
        Point jets = oracle_jet(curve);
        Point geo = oracle_geo_jets(curve, cfg.pivot);
        for (auto& [v, expr] : s) {
            if (v.kind() != VarKind::TJet && v.kind() != VarKind::GeoJet) continue;
            ++checked;
            auto it = geo.find(v);
            if (it == geo.end() || expr.eval(jets) != it->second) {
                ++failed;
                if (first.empty()) first = v.name() + " on curve " + std::to_string(c);
            }
        }
    }
    return result("geometric-jets-oracle " + cfg.label(), checked, failed, first);
}

IdentityResult check_DtD1(const JetConfig& cfg) {
    VectorField dt = build_Dt(cfg);
    VectorField dz = build_Dz1(cfg);
    BellMatrix b1 = bell_matrix_z1(cfg);
    std::vector<std::pair<std::string, FracPoly>> tests;
    for (int i = 1; i <= cfg.n; ++i) tests.emplace_back(VarId::z(i).name(), FracPoly(Poly::var(VarId::z(i))));
    for (int j = 1; j <= cfg.c(); ++j)
        tests.emplace_back("P" + std::to_string(j), FracPoly(universal_poly(cfg, j)));
    int checked = 0, failed = 0;
    std::string first;
    for (auto& [name, f] : tests) {
        std::vector<FracPoly> dzq{f};
        for (int q = 1; q <= cfg.k; ++q) dzq.push_back(dz.apply(dzq.back()));
        FracPoly dtp = f;
        for (int p = 1; p <= cfg.k; ++p) {
            dtp = dt.apply(dtp);
            FracPoly lhs = FracPoly(Rational(1) / Rational(factorial(p))) * dtp;
            FracPoly rhs;
            for (int q = 1; q <= p; ++q)
                rhs += FracPoly(b1[p - 1][q - 1] * (Rational(1) / Rational(factorial(q)))) * dzq[q];
            ++checked;
            if (!(lhs == rhs)) {
                ++failed;
                if (first.empty()) first = name + " p=" + std::to_string(p);
            }
        }
    }
    return result("DtD1 " + cfg.label(), checked, failed, first);
}

IdentityResult check_binomial(const JetConfig& cfg, int qmax) {
    VectorField d = build_Dz1(cfg);
    FieldForge forge(cfg);
    std::vector<std::pair<std::string, VectorField>> fields;
    auto ps = cfg.params(1);
    fields.emplace_back("d/da first", VectorField::basis(VarId::param(1, ps.front())));
    fields.emplace_back("d/da last", VectorField::basis(VarId::param(1, ps.back())));
    for (int i = 1; i <= cfg.n; ++i) fields.emplace_back("d/dz" + std::to_string(i), geo_field(cfg, i, 0));
    if (!cfg.non_pivot().empty()) {
        int j = cfg.non_pivot().front();
        fields.emplace_back("geo[1]", geo_field(cfg, j, 1));
        fields.emplace_back("T_jq", forge.T_jq(j, std::min(1, cfg.k)));
    }
    fields.emplace_back("T_1", vertical_T(cfg, 1));
    FracPoly f(universal_poly(cfg, 1));
    int checked = 0, failed = 0;
    std::string first;
    for (auto& [name, v] : fields)
        for (int q = 0; q <= qmax; ++q) {
            checked += 2;
            bool fwd = binomial_forward(d, v, f, q).holds();
            bool inv = binomial_inverse(d, v, f, q).holds();
            if (!fwd || !inv) {
                ++failed;
                if (first.empty()) first = name + " q=" + std::to_string(q) + (fwd ? " (inverse)" : " (forward)");
            }
        }
    return result("binomial-adjoint " + cfg.label(), checked, failed, first);
}

IdentityResult check_tgt_sym(int k, bool literal) {
    BellMatrix bt = bell_matrix_t(k);
    int checked = 0, failed = 0;
    std::string first;
    for (int l = 1; l <= k; ++l)
        for (int p = 1; p <= k; ++p)
            for (int q = 1; q <= k; ++q) {
                Poly lhs;
                for (int m = 1; m <= k; ++m) lhs += bt[m - 1][l - 1] * bt[p - 1][q - 1].partial(VarId::t(m));
                Poly rhs;
                int r = q + l - 1;
                if (r <= k) rhs = bt[p - 1][r - 1] * Rational(literal ? l : q);
                ++checked;
                if (!(lhs == rhs)) {
                    ++failed;
                    if (first.empty())
                        first = "l=" + std::to_string(l) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
                }
            }
    return result(std::string("tgt-sym ") + (literal ? "factor l" : "factor q") + " k=" + std::to_string(k),
                  checked, failed, first);
}

IdentityResult check_vertical_forms(const JetConfig& cfg) {
    Substitution sub = std_in_geo(cfg);
    int checked = 0, failed = 0;
    std::string first;
    for (int l = 1; l <= cfg.k; ++l) {
        VectorField g = vertical_T_geometric(cfg, l);
        VectorField s = vertical_T(cfg, l);
        for (int i = 1; i <= cfg.n; ++i)
            for (int p = 1; p <= cfg.k; ++p) {
                VarId x = VarId::jet(i, p);
                FracPoly lhs = g.apply(substitute(Poly::var(x), sub));
                FracPoly rhs = substitute(s.coeff(x), sub);
                ++checked;
                if (!(lhs == rhs)) {
                    ++failed;
                    if (first.empty()) first = "l=" + std::to_string(l) + " on " + x.name();
                }
            }
    }
    return result("vertical-forms " + cfg.label(), checked, failed, first);
}

IdentityResult check_Dt_oracle(const JetConfig& cfg, std::uint64_t seed, int curves) {
    int checked = 0, failed = 0;
    std::string first;
    for (int c = 0; c < curves; ++c) {
        Rng rng(derive_seed(seed, c));
        TruncCurve curve = TruncCurve::random(cfg.n, cfg.k, rng);
        Point fixed;
        for (int j = 1; j <= cfg.c(); ++j)
            for (auto& a : cfg.params(j)) fixed[VarId::param(j, a)] = rng.uniform(-3, 3);
        for (int j = 1; j <= cfg.c(); ++j) {
            ++checked;
            if (!oracle_check_Dt(cfg, universal_poly(cfg, j), curve, fixed)) {
                ++failed;
                if (first.empty()) first = "curve " + std::to_string(c);
            }
        }
    }
    return result("Dt-oracle " + cfg.label(), checked, failed, first);
}

std::vector<IdentityResult> identity_suite(int n, int k, std::uint64_t seed, int curves) {
    if (n < 1 || k < 1) throw InvalidConfig("identity suite needs n >= 1 and k >= 1");
    // one coordinate leaves no room for a compact hat index, so n = 1 runs in the log case
    JetConfig cfg = JetConfig::make(n, k, {2}, n == 1 ? Case::Logarithmic : Case::Compact);
    std::vector<IdentityResult> out;
    out.push_back(check_bell_inverse(cfg));
    out.push_back(check_faa_di_bruno(k, seed, curves));
    out.push_back(check_geo_jets_oracle(cfg, seed, curves));
    out.push_back(check_DtD1(cfg));
    out.push_back(check_binomial(cfg, 4));
    out.push_back(check_tgt_sym(k));
    out.push_back(check_vertical_forms(cfg));
    if (!cfg.is_log()) out.push_back(check_Dt_oracle(cfg, seed, std::min(curves, 20)));
    return out;
}

}  // namespace jetframe
