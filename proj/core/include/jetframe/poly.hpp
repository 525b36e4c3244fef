#ifndef JETFRAME_POLY_HPP
#define JETFRAME_POLY_HPP

#include <jetframe/rational.hpp>
#include <jetframe/varid.hpp>

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jetframe {

using Point = std::map<VarId, Rational>;

class Monomial {
public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;
    explicit Monomial(VarId v, int e = 1);
    /// entries need not be sorted; zero exponents are dropped
    static Monomial from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }
    int degree(const VarId& v) const;
    int total_degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// exact quotient, requires divides(o)
    Monomial quotient_of(const Monomial& o) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);
    Monomial without(const VarId& v) const;

    std::string to_string() const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Entry> e_;
};

class Poly {
public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}
    static Poly var(const VarId& v, int e = 1);
    static Poly term(const Monomial& m, const Rational& c);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    std::size_t size() const { return t_.size(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    void add_term(const Monomial& m, const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;
    Poly pow(int e) const;
    Poly mul_monomial(const Monomial& m) const;

    Poly partial(const VarId& v) const;
    Rational eval(const Point& pt) const;
    /// substitute only the variables present in the map
    Poly partial_eval(const Point& pt) const;
    std::vector<VarId> vars() const;
    int degree_in(const VarId& v) const;
    /// gcd of all term monomials; one for zero
    Monomial content_monomial() const;
    /// exact division by a monomial dividing every term
    Poly div_monomial(const Monomial& m) const;

    /// group terms by the monomial in variables matching `pred`
    std::map<Monomial, Poly> collect(const std::function<bool(const VarId&)>& pred) const;

    std::string to_string() const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }

private:
    Terms t_;
};

Poly partial(const Poly& p, const VarId& v);
Rational eval(const Poly& p, const Point& pt);

/// Quotient num / den with den a monomial. Frame coefficients only ever need
/// powers of z_1' and, in the logarithmic chart, powers of w_j.
class FracPoly {
public:
    FracPoly() = default;
    FracPoly(const Poly& num);
    FracPoly(const Rational& c) : FracPoly(Poly(c)) {}
    FracPoly(long c) : FracPoly(Poly(c)) {}
    FracPoly(int c) : FracPoly(Poly(c)) {}
    FracPoly(Poly num, Monomial den);

    const Poly& num() const { return num_; }
    const Monomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }
    /// exponent of v in the denominator, e.g. the power of z_1'
    int epow(const VarId& v) const { return den_.degree(v); }

    FracPoly& operator+=(const FracPoly& o);
    FracPoly& operator-=(const FracPoly& o);
    friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
    friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
    friend FracPoly operator*(const FracPoly& a, const FracPoly& b);
    FracPoly operator-() const;
    FracPoly pow(int e) const;
    /// requires a single-term numerator
    FracPoly inverse() const;
    FracPoly divide_by(const Monomial& m) const;

    FracPoly partial(const VarId& v) const;
    Rational eval(const Point& pt) const;
    std::vector<VarId> vars() const;

    std::string to_string() const;

    bool operator==(const FracPoly& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void normalize();
    Poly num_;
    Monomial den_;
};

using Substitution = std::map<VarId, FracPoly>;

/// Replace variables by the given FracPolys; others are kept.
FracPoly substitute(const Poly& p, const Substitution& s);
FracPoly substitute(const FracPoly& f, const Substitution& s);

/// Weight rule along the hyperplane at infinity: z_i -> 1, z_i^{(p)} -> p+1,
/// w_j -> 1, (log w_j)^{(p)} and w_j^{[p]} -> p+1, parameters -> 0.
/// Geometric jet coordinates have no weight and raise UnsupportedVariable.
int var_weight(const VarId& v);
int pole_order(const Monomial& m);
/// max over terms; 0 for the zero polynomial
int pole_order(const Poly& p);
int pole_order(const FracPoly& f);
/// max total degree in parameter variables
int a_degree(const Poly& p);
int a_degree(const FracPoly& f);

}  // namespace jetframe

#endif
