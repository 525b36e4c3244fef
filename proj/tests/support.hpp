#ifndef JETFRAME_TEST_SUPPORT_HPP
#define JETFRAME_TEST_SUPPORT_HPP

#include <jetframe/fields.hpp>
#include <jetframe/rng.hpp>

#include <vector>

namespace jt {

using namespace jetframe;

inline Poly Z(int i) { return Poly::var(VarId::z(i)); }
inline Poly J(int i, int p) { return Poly::var(VarId::jet(i, p)); }
inline Poly A(int j, MultiIndex a) { return Poly::var(VarId::param(j, a)); }
inline FracPoly F(const Poly& p) { return FracPoly(p); }

/// z^beta as a polynomial
inline Poly zpow(const MultiIndex& beta) {
    Poly r(1);
    for (std::size_t i = 0; i < beta.size(); ++i) r = r * Z(static_cast<int>(i) + 1).pow(beta[i]);
    return r;
}

inline Rational small_rational(Rng& rng) { return Rational(rng.uniform(-3, 3)) / Rational(rng.uniform(1, 3)); }

/// random polynomial over the given variables
inline Poly random_poly(Rng& rng, const std::vector<VarId>& vars, int terms = 4, int max_exp = 2) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Entry> e;
        for (auto& v : vars) e.emplace_back(v, rng.uniform(0, max_exp));
        p.add_term(Monomial::from_entries(std::move(e)), small_rational(rng));
    }
    return p;
}

/// random field with polynomial coefficients
inline VectorField random_field(Rng& rng, const std::vector<VarId>& dirs, const std::vector<VarId>& vars,
                                int terms = 2) {
    VectorField v;
    for (auto& d : dirs)
        if (rng.uniform(0, 2) > 0) v.add(d, FracPoly(random_poly(rng, vars, terms, 1)));
    return v;
}

inline Point random_point(Rng& rng, const std::vector<VarId>& vars) {
    Point pt;
    for (auto& v : vars) pt[v] = small_rational(rng);
    return pt;
}

/// the expected Lambda vector z^beta e_q (times sign)
inline bool lambda_is(const LambdaVec& lv, const Poly& value, int q) {
    for (int p = 0; p < static_cast<int>(lv.entries.size()); ++p)
        if (!(lv.entries[p] == (p == q ? FracPoly(value) : FracPoly{}))) return false;
    return true;
}

}  // namespace jt

#endif
