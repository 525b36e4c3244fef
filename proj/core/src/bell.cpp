#include <jetframe/bell.hpp>
#include <jetframe/errors.hpp>

namespace jetframe {

std::vector<BellTerm> bell_terms(int p, int q) {
    std::vector<BellTerm> out;
    if (q < 1 || q > p) return out;
    std::vector<int> mu(p, 0);
    std::function<void(int, int, int)> rec = [&](int i, int weight, int len) {
        if (i > p) {
            if (weight == p && len == q) {
                Integer c = factorial(q);
                for (int m : mu) c /= factorial(m);
                out.push_back({mu, c});
            }
            return;
        }
        for (int m = 0; weight + m * i <= p && len + m <= q; ++m) {
            mu[i - 1] = m;
            rec(i + 1, weight + m * i, len + m);
        }
        mu[i - 1] = 0;
    };
    rec(1, 0, 0);
    return out;
}

Poly bell(int p, int q, const std::function<Poly(int)>& h) {
    Poly r;
    for (auto& t : bell_terms(p, q)) {
        Poly term(Rational(t.coef));
        for (int i = 1; i <= p; ++i)
            if (t.mu[i - 1]) term = term * h(i).pow(t.mu[i - 1]);
        r += term;
    }
    return r;
}

Rational bell_value(int p, int q, const std::vector<Rational>& h) {
    Rational r = 0;
    for (auto& t : bell_terms(p, q)) {
        Rational term(t.coef);
        for (int i = 1; i <= p; ++i)
            for (int m = 0; m < t.mu[i - 1]; ++m) term *= h.at(i - 1);
        r += term;
    }
    return r;
}

BellMatrix bell_matrix_z1(const JetConfig& cfg) {
    BellMatrix m(cfg.k, std::vector<Poly>(cfg.k));
    auto h = [&](int i) { return Poly::var(VarId::jet(cfg.pivot, i)); };
    for (int p = 1; p <= cfg.k; ++p)
        for (int q = 1; q <= p; ++q) m[p - 1][q - 1] = bell(p, q, h);
    return m;
}

BellMatrix bell_matrix_t(int k) {
    BellMatrix m(k, std::vector<Poly>(k));
    auto h = [](int i) { return Poly::var(VarId::t(i)); };
    for (int p = 1; p <= k; ++p)
        for (int q = 1; q <= p; ++q) m[p - 1][q - 1] = bell(p, q, h);
    return m;
}

namespace {

// Solve delta_{1,p} = sum_q M[p][q] x_q for lower triangular M with monomial diagonal.
std::vector<FracPoly> invert_first_column(const std::vector<std::vector<FracPoly>>& m, int k) {
    std::vector<FracPoly> x(k + 1);
    for (int p = 1; p <= k; ++p) {
        FracPoly rhs(p == 1 ? 1 : 0);
        for (int q = 1; q < p; ++q) rhs -= m[p - 1][q - 1] * x[q];
        x[p] = rhs * m[p - 1][p - 1].inverse();
    }
    return x;
}

}  // namespace

Substitution geo_in_std(const JetConfig& cfg) {
    const int k = cfg.k;
    BellMatrix bz = bell_matrix_z1(cfg);
    std::vector<std::vector<FracPoly>> m(k, std::vector<FracPoly>(k));
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) m[p][q] = FracPoly(bz[p][q]);
    std::vector<FracPoly> tj = invert_first_column(m, k);

    Substitution s;
    Substitution tsub;
    for (int p = 1; p <= k; ++p) {
        s[VarId::t(p)] = tj[p];
        tsub[VarId::t(p)] = tj[p];
    }
    BellMatrix bt = bell_matrix_t(k);
    for (int i : cfg.non_pivot()) {
        for (int p = 1; p <= k; ++p) {
            FracPoly acc;
            for (int q = 1; q <= p; ++q)
                acc += substitute(bt[p - 1][q - 1], tsub) * FracPoly(Poly::var(VarId::jet(i, q)));
            s[VarId::geo(i, p)] = acc;
        }
    }
    return s;
}

Substitution std_in_geo(const JetConfig& cfg) {
    const int k = cfg.k;
    BellMatrix bt = bell_matrix_t(k);
    std::vector<std::vector<FracPoly>> m(k, std::vector<FracPoly>(k));
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) m[p][q] = FracPoly(bt[p][q]);
    std::vector<FracPoly> zj = invert_first_column(m, k);

    Substitution s;
    Substitution zsub;
    for (int p = 1; p <= k; ++p) {
        s[VarId::jet(cfg.pivot, p)] = zj[p];
        zsub[VarId::jet(cfg.pivot, p)] = zj[p];
    }
    BellMatrix bz = bell_matrix_z1(cfg);
    for (int i : cfg.non_pivot()) {
        for (int p = 1; p <= k; ++p) {
            FracPoly acc;
            for (int q = 1; q <= p; ++q)
                acc += substitute(bz[p - 1][q - 1], zsub) * FracPoly(Poly::var(VarId::geo(i, q)));
            s[VarId::jet(i, p)] = acc;
        }
    }
    return s;
}

VectorField geo_field(const JetConfig& cfg, int i, int p) {
    if (i < 1 || i > cfg.n) throw RangeError("coordinate index out of range");
    if (p < 0 || p > cfg.k) throw RangeError("geometric order out of range");
    if (p == 0) return VectorField::basis(VarId::z(i));
    if (i == cfg.pivot) throw InvalidDirection("the pivot has no geometric jet directions");
    VectorField v;
    auto h = [&](int r) { return Poly::var(VarId::jet(cfg.pivot, r)); };
    for (int q = p; q <= cfg.k; ++q) v.add(VarId::jet(i, q), FracPoly(bell(q, p, h)));
    return v;
}

VectorField log_geo_field(const JetConfig& cfg, int j, int p) {
    if (!cfg.is_log()) throw WrongCase("logarithmic directions need the log case");
    if (p < 0 || p > cfg.k) throw RangeError("geometric order out of range");
    if (p == 0) return VectorField::basis(VarId::w(j), FracPoly(Poly::var(VarId::w(j))));
    VectorField v;
    auto h = [&](int r) { return Poly::var(VarId::jet(cfg.pivot, r)); };
    for (int q = p; q <= cfg.k; ++q) v.add(VarId::logw(j, q), FracPoly(bell(q, p, h)));
    return v;
}

VectorField vertical_T(const JetConfig& cfg, int l) {
    if (l < 1 || l > cfg.k) throw RangeError("vertical index out of range");
    VectorField v;
    for (int i = 1; i <= cfg.n; ++i)
        for (int p = 1; p <= cfg.k - l + 1; ++p)
            v.add(VarId::jet(i, p + l - 1), FracPoly(Poly::var(VarId::jet(i, p)) * Rational(-p)));
    if (cfg.is_log())
        for (int j = 1; j <= cfg.c(); ++j)
            for (int p = 1; p <= cfg.k - l + 1; ++p)
                v.add(VarId::logw(j, p + l - 1), FracPoly(Poly::var(VarId::logw(j, p)) * Rational(-p)));
    return v;
}

VectorField vertical_T_geometric(const JetConfig& cfg, int l) {
    BellMatrix bt = bell_matrix_t(cfg.k);
    VectorField v;
    for (int m = 1; m <= cfg.k; ++m) v.add(VarId::t(m), FracPoly(bt[m - 1][l - 1]));
    return v;
}

VectorField build_Dz1_geometric(const JetConfig& cfg) {
    VectorField d = VectorField::basis(VarId::z(cfg.pivot));
    for (int i : cfg.non_pivot())
        for (int p = 0; p < cfg.k; ++p) {
            VarId from = p == 0 ? VarId::z(i) : VarId::geo(i, p);
            d.add(from, FracPoly(Poly::var(VarId::geo(i, p + 1)) * Rational(p + 1)));
        }
    return d;
}

std::vector<FracPoly> log_geo_jets_std(const JetConfig& cfg, int j) {
    VectorField dz = build_Dz1(cfg);
    std::vector<FracPoly> out(cfg.k + 1);
    // d^i log w / dz_1^i = D_{z_1}^{i-1} (L^{(1)} / z_1')
    FracPoly cur = FracPoly(Poly::var(VarId::logw(j, 1))).divide_by(Monomial(cfg.pivot_jet()));
    for (int i = 1; i <= cfg.k; ++i) {
        out[i] = FracPoly(Rational(1) / Rational(factorial(i))) * cur;
        if (i < cfg.k) cur = dz.apply(cur);
    }
    return out;
}

VectorField log_dual_field(const JetConfig& cfg, int j, int p) {
    if (!cfg.is_log()) throw WrongCase("w-directions need the log case");
    if (p < 0 || p > cfg.k) throw RangeError("geometric order out of range");
    auto wv = [&](int q) { return q == 0 ? VarId::w(j) : VarId::wjet(j, q); };
    VectorField v;
    for (int q = p; q <= cfg.k; ++q) v.add(wv(q), FracPoly(Poly::var(wv(q - p))));
    return v;
}

VectorField dz1_w_geometric(const JetConfig& cfg, int j) {
    auto wv = [&](int q) { return q == 0 ? VarId::w(j) : VarId::wjet(j, q); };
    VectorField v;
    for (int q = 0; q < cfg.k; ++q) v.add(wv(q), FracPoly(Poly::var(wv(q + 1)) * Rational(q + 1)));
    return v;
}

VectorField dual_w_field(const JetConfig& cfg, int j, int q) {
    if (!cfg.is_log()) throw WrongCase("w-directions need the log case");
    const int k = cfg.k;
    // w(z_1) = w exp(sum_i L^{[i]} x^i), so dL^{[r]}/dw^{[q]} = (1/w) [x^{r-q}] exp(-sum_i L^{[i]} x^i)
    std::vector<FracPoly> lg = log_geo_jets_std(cfg, j);
    std::vector<FracPoly> e(k + 1);
    e[0] = FracPoly(1);
    // E' = -(sum_i i L^{[i]} x^{i-1}) E  gives  m e_m = -sum_i i L^{[i]} e_{m-i}
    for (int m = 1; m <= k; ++m) {
        FracPoly acc;
        for (int i = 1; i <= m; ++i) acc -= FracPoly(Rational(i)) * lg[i] * e[m - i];
        e[m] = FracPoly(Rational(1) / m) * acc;
    }
    VectorField v;
    Monomial wden(VarId::w(j));
    for (int r = q; r <= k; ++r) v += e[r - q].divide_by(wden) * log_geo_field(cfg, j, r);
    return v;
}

}  // namespace jetframe
