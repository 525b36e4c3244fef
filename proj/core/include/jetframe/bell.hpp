#ifndef JETFRAME_BELL_HPP
#define JETFRAME_BELL_HPP

#include <jetframe/jetcalc.hpp>

#include <functional>
#include <vector>

namespace jetframe {

struct BellTerm {
    /// mu[i-1] = multiplicity of h^{(i)}
    std::vector<int> mu;
    Integer coef;
};

/// mu with weight sum i*mu_i = p and length sum mu_i = q; coefficient q!/mu!
std::vector<BellTerm> bell_terms(int p, int q);

/// B_{p,q}(h) with h^{(i)} supplied by `h`; zero unless 1 <= q <= p
Poly bell(int p, int q, const std::function<Poly(int)>& h);
/// numeric version, h[i-1] = h^{(i)}
Rational bell_value(int p, int q, const std::vector<Rational>& h);

/// k x k, entry [p-1][q-1] = B_{p,q}
using BellMatrix = std::vector<std::vector<Poly>>;

/// B(z_1) in the pivot's standard jets
BellMatrix bell_matrix_z1(const JetConfig& cfg);
/// B[t] in the abstract t^{[p]}
BellMatrix bell_matrix_t(int k);

/// t^{[p]} and z_i^{[p]} expressed in standard jets (denominators are powers of z_1')
Substitution geo_in_std(const JetConfig& cfg);
/// z_i^{(p)} (pivot included) expressed in z_i^{[q]} and t^{[q]}
Substitution std_in_geo(const JetConfig& cfg);

/// d/dz_i^{[p]} in standard coordinates; p = 0 gives d/dz_i
VectorField geo_field(const JetConfig& cfg, int i, int p);
/// d/d(log w_j)^{[p]} in standard coordinates; p = 0 gives w_j d/dw_j
VectorField log_geo_field(const JetConfig& cfg, int j, int p);

/// T_l = -sum_i sum_{p=1}^{k-l+1} p z_i^{(p)} d/dz_i^{(p+l-1)}, log-jets included in the log case
VectorField vertical_T(const JetConfig& cfg, int l);
/// sum_m B_{m,l}[t] d/dt^{[m]}, in geometric coordinates
VectorField vertical_T_geometric(const JetConfig& cfg, int l);

/// d/dz_1 + sum_{i != pivot} sum_p (p+1) z_i^{[p+1]} d/dz_i^{[p]}
VectorField build_Dz1_geometric(const JetConfig& cfg);

/// (log w_j)^{[i]}, i = 1..k, in standard coordinates
std::vector<FracPoly> log_geo_jets_std(const JetConfig& cfg, int j);
/// sum_{q>=p} w^{[q-p]} d/dw^{[q]}, in the coordinates w_j, w_j^{[q]}
VectorField log_dual_field(const JetConfig& cfg, int j, int p);
/// D_{z_1} restricted to the w-chain in coordinates w_j, w_j^{[q]}
VectorField dz1_w_geometric(const JetConfig& cfg, int j);
/// d/dw_j^{[q]} (geometric w-jets held fixed) rewritten in standard coordinates
VectorField dual_w_field(const JetConfig& cfg, int j, int q);

}  // namespace jetframe

#endif
