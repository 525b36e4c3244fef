#ifndef JETFRAME_SERIES_HPP
#define JETFRAME_SERIES_HPP

#include <jetframe/jetcalc.hpp>
#include <jetframe/rng.hpp>

#include <vector>

namespace jetframe {

/// Power series in one formal variable, truncated after degree `order`.
class TruncSeries {
public:
    explicit TruncSeries(int order = 0) : c_(order + 1) {}
    TruncSeries(std::vector<Rational> c, int order);
    static TruncSeries constant(const Rational& a, int order);
    /// the series a + s
    static TruncSeries variable(int order, const Rational& a = 0);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int i) const { return c_.at(i); }
    Rational& operator[](int i) { return c_.at(i); }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const Rational& c, TruncSeries a);
    TruncSeries pow(int e) const;

    /// this(inner(s)); requires inner[0] == 0
    TruncSeries compose(const TruncSeries& inner) const;
    /// compositional inverse; requires c0 == 0 and c1 != 0
    TruncSeries reversion() const;
    TruncSeries without_constant() const;

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
};

/// A curve germ f = (f_1, ..., f_n) given by its order-k Taylor polynomials.
struct TruncCurve {
    int k = 1;
    std::vector<TruncSeries> f;

    int n() const { return static_cast<int>(f.size()); }
    static TruncCurve random(int n, int k, Rng& rng, int box = 3);
};

/// z_i and z_i^{(p)} read as Taylor coefficients (f^{(p)} := f^{(p)}(0)/p!)
Point oracle_jet(const TruncCurve& c);
/// P(f(t)) mod t^{k+1}; parameters and other symbols are taken from `fixed`
TruncSeries compose_along(const Poly& p, const TruncCurve& c, const Point& fixed);
/// eval(D_t^q P, jets of f) == q! [t^q] P(f(t)) for every q <= k
bool oracle_check_Dt(const JetConfig& cfg, const Poly& p, const TruncCurve& c, const Point& fixed);
/// z_i^{[p]} and t^{[p]} by reparametrizing the curve by its pivot coordinate
Point oracle_geo_jets(const TruncCurve& c, int pivot = 1);

}  // namespace jetframe

#endif
