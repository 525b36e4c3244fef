#ifndef JETFRAME_IDENTITIES_HPP
#define JETFRAME_IDENTITIES_HPP

#include <jetframe/bell.hpp>
#include <jetframe/jetcalc.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace jetframe {

struct IdentityResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// B(z_1) B[t] = I after writing t^{[p]} in standard jets
IdentityResult check_bell_inverse(const JetConfig& cfg);
/// g^{(p)} = sum_q B_{p,q}(h) (g o h^{-1})^{(q)} o h on random series
IdentityResult check_faa_di_bruno(int k, std::uint64_t seed, int curves = 100);
/// the same relation for geometric jets: symbolic substitution vs series reversion
IdentityResult check_geo_jets_oracle(const JetConfig& cfg, std::uint64_t seed, int curves = 100);
/// D_t^p / p! = sum_q B_{p,q}(z_1) D_{z_1}^q / q! on z_i and on P
IdentityResult check_DtD1(const JetConfig& cfg);
/// both adjoint binomial formulas, q <= qmax, on a spread of fields
IdentityResult check_binomial(const JetConfig& cfg, int qmax = 4);
/// sum_m B_{m,l}[t] d/dt^{[m]} B_{p,q}[t] = factor * B_{p,q+l-1}[t], factor = q (literal = false) or l
IdentityResult check_tgt_sym(int k, bool literal = false);
/// T_l in geometric coordinates agrees with its standard-coordinate form
IdentityResult check_vertical_forms(const JetConfig& cfg);
/// eval(D_t^q P) = q! [t^q] P(f(t)) on random curves
IdentityResult check_Dt_oracle(const JetConfig& cfg, std::uint64_t seed, int curves = 20);

/// everything above for one (n, k)
std::vector<IdentityResult> identity_suite(int n, int k, std::uint64_t seed, int curves = 100);

}  // namespace jetframe

#endif
