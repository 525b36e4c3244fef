#include <jetframe/errors.hpp>
#include <jetframe/series.hpp>

namespace jetframe {

TruncSeries::TruncSeries(std::vector<Rational> c, int order) : c_(std::move(c)) { c_.resize(order + 1); }

TruncSeries TruncSeries::constant(const Rational& a, int order) {
    TruncSeries s(order);
    s.c_[0] = a;
    return s;
}

TruncSeries TruncSeries::variable(int order, const Rational& a) {
    TruncSeries s(order);
    s.c_[0] = a;
    if (order >= 1) s.c_[1] = 1;
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    for (int i = 0; i <= std::min(order(), o.order()); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    for (int i = 0; i <= std::min(order(), o.order()); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int k = std::min(a.order(), b.order());
    TruncSeries r(k);
    for (int i = 0; i <= k; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= k; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

TruncSeries operator*(const Rational& c, TruncSeries a) {
    for (auto& x : a.c_) x *= c;
    return a;
}

TruncSeries TruncSeries::pow(int e) const {
    TruncSeries r = constant(1, order());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
    if (inner[0] != 0) throw RangeError("composition needs an inner series without constant term");
    int k = std::min(order(), inner.order());
    TruncSeries r(k), pw = constant(1, k);
    for (int i = 0; i <= k; ++i) {
        if (i) pw = pw * inner;
        r += c_[i] * pw;
    }
    return r;
}

TruncSeries TruncSeries::reversion() const {
    if (c_[0] != 0) throw RangeError("reversion needs a series without constant term");
    if (order() < 1 || c_[1] == 0) throw NonInvertibleCurve("first derivative vanishes");
    int k = order();
    TruncSeries g(k);
    g.c_[1] = 1 / c_[1];
    for (int m = 2; m <= k; ++m) {
        TruncSeries fg = compose(g);
        g.c_[m] = -fg.c_[m] / c_[1];
    }
    return g;
}

TruncSeries TruncSeries::without_constant() const {
    TruncSeries r = *this;
    r.c_[0] = 0;
    return r;
}

TruncCurve TruncCurve::random(int n, int k, Rng& rng, int box) {
    TruncCurve c;
    c.k = k;
    for (int i = 0; i < n; ++i) {
        TruncSeries s(k);
        for (int p = 0; p <= k; ++p) s[p] = Rational(rng.uniform(-box, box)) / rng.uniform(1, 2);
        c.f.push_back(s);
    }
    return c;
}

Point oracle_jet(const TruncCurve& c) {
    Point pt;
    for (int i = 1; i <= c.n(); ++i)
        for (int p = 0; p <= c.k; ++p) pt[VarId::zjet(i, p)] = c.f[i - 1][p];
    return pt;
}

TruncSeries compose_along(const Poly& p, const TruncCurve& c, const Point& fixed) {
    TruncSeries out(c.k);
    for (auto& [m, coef] : p.terms()) {
        TruncSeries term = TruncSeries::constant(coef, c.k);
        for (auto& [v, e] : m.entries()) {
            if (v.kind() == VarKind::Z && v.i() <= c.n()) {
                term = term * c.f[v.i() - 1].pow(e);
            } else {
                auto it = fixed.find(v);
                if (it == fixed.end()) throw UnassignedVariable(v.name());
                Rational x = 1;
                for (int q = 0; q < e; ++q) x *= it->second;
                term = x * term;
            }
        }
        out += term;
    }
    return out;
}

bool oracle_check_Dt(const JetConfig& cfg, const Poly& p, const TruncCurve& c, const Point& fixed) {
    TruncSeries along = compose_along(p, c, fixed);
    Point pt = fixed;
    for (auto& [v, x] : oracle_jet(c)) pt[v] = x;
    VectorField dt = build_Dt(cfg);
    FracPoly cur(p);
    for (int q = 0; q <= c.k; ++q) {
        if (cur.eval(pt) != Rational(factorial(q)) * along[q]) return false;
        cur = dt.apply(cur);
    }
    return true;
}

Point oracle_geo_jets(const TruncCurve& c, int pivot) {
    const TruncSeries& f1 = c.f.at(pivot - 1);
    if (c.k >= 1 && f1[1] == 0) throw NonInvertibleCurve("pivot derivative vanishes");
    TruncSeries inv = f1.without_constant().reversion();
    Point pt;
    for (int p = 1; p <= c.k; ++p) pt[VarId::t(p)] = inv[p];
    for (int i = 1; i <= c.n(); ++i) {
        if (i == pivot) continue;
        TruncSeries g = c.f[i - 1].compose(inv);
        for (int p = 1; p <= c.k; ++p) pt[VarId::geo(i, p)] = g[p];
    }
    return pt;
}

}  // namespace jetframe
