#ifndef JETFRAME_JETCALC_HPP
#define JETFRAME_JETCALC_HPP

#include <jetframe/poly.hpp>

#include <map>
#include <string>
#include <vector>

namespace jetframe {

enum class Case { Compact, Logarithmic };

const char* case_name(Case c);
Case parse_case(const std::string& s);

struct JetConfig {
    int n = 2;
    int k = 1;
    std::vector<int> degrees{2};
    Case kase = Case::Compact;
    /// compact case: the removed multi-index per component (its coefficient is 1)
    std::vector<MultiIndex> hat_alpha;
    /// chart index i with z_i' != 0; plays the role of z_1 everywhere
    int pivot = 1;

    /// fills a default hat_alpha and validates
    static JetConfig make(int n, int k, std::vector<int> degrees, Case kase = Case::Compact,
                          int pivot = 1);

    void validate() const;
    std::vector<std::string> warnings() const;

    int c() const { return static_cast<int>(degrees.size()); }
    int d(int j) const { return degrees.at(j - 1); }
    bool is_log() const { return kase == Case::Logarithmic; }
    MultiIndex pivot_unit(int times = 1) const { return unit(n, pivot, times); }
    VarId pivot_jet() const { return VarId::jet(pivot, 1); }
    std::vector<int> non_pivot() const;

    bool has_param(int j, const MultiIndex& a) const;
    /// parameter multi-indices of component j, graded lexicographic
    std::vector<MultiIndex> params(int j) const;
    /// every coordinate of the ambient chart, canonical order
    std::vector<VarId> ambient_vars() const;

    std::string label() const;

    bool operator==(const JetConfig&) const = default;
};

class VectorField {
public:
    using Coeffs = std::map<VarId, FracPoly>;

    VectorField() = default;
    static VectorField basis(const VarId& v, const FracPoly& coef = FracPoly(1));

    const Coeffs& coeffs() const { return c_; }
    FracPoly coeff(const VarId& v) const;
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }

    void add(const VarId& v, const FracPoly& f);
    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const FracPoly& f, const VectorField& v);
    VectorField operator-() const;

    FracPoly apply(const FracPoly& f) const;
    Poly apply_poly(const Poly& p) const;

    int pole_order() const;
    int a_degree() const;

    std::string to_string() const;

    bool operator==(const VectorField& o) const { return c_ == o.c_; }

private:
    Coeffs c_;
};

FracPoly apply(const VectorField& v, const FracPoly& f);
/// (A ad B): the commutator, coefficients A(B_v) - B(A_v)
VectorField adjoint(const VectorField& a, const VectorField& b);
/// (D^p ad V), by p-fold adjoint
VectorField adjoint_power(const VectorField& d, const VectorField& v, int p);
/// D^p f
FracPoly apply_power(const VectorField& d, const FracPoly& f, int p);

struct LambdaVec {
    std::vector<FracPoly> entries;
    bool is_zero() const;
    /// first nonzero slot or -1
    int witness() const;
};

enum class Base { Dt, Dz1 };

/// sum_{|alpha|<=d} a_alpha z^alpha, with a_hat = 1 in the compact case
Poly affine_part(const JetConfig& cfg, int j);
/// compact P = affine part; logarithmic Q = w^d - affine part
Poly universal_poly(const JetConfig& cfg, int j);
/// sign s with universal_poly = s * affine_part + (terms free of parameters)
int param_sign(const JetConfig& cfg);

VectorField build_Dt(const JetConfig& cfg);
VectorField build_Dz1(const JetConfig& cfg);
VectorField build_base(const JetConfig& cfg, Base b);

/// entries[p] = (D^p ad V) . P_j
LambdaVec lambda(const VectorField& d, const VectorField& v, const Poly& p, int k);
LambdaVec lambda(const JetConfig& cfg, Base b, const VectorField& v, int j);

/// the k+1 equations D^q P_j, q = 0..k, per component
std::vector<std::vector<FracPoly>> defining_equations(const JetConfig& cfg, Base b);

struct BinomialSides {
    FracPoly lhs;
    FracPoly rhs;
    bool holds() const { return lhs == rhs; }
};

/// (D^q ad V) f  vs  sum_p (-1)^p C(q,p) D^{q-p} V D^p f
BinomialSides binomial_forward(const VectorField& d, const VectorField& v, const FracPoly& f, int q);
/// V D^q f  vs  sum_p (-1)^p C(q,p) D^{q-p} ((D^p ad V) f)
BinomialSides binomial_inverse(const VectorField& d, const VectorField& v, const FracPoly& f, int q);

}  // namespace jetframe

#endif
