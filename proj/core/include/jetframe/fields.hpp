#ifndef JETFRAME_FIELDS_HPP
#define JETFRAME_FIELDS_HPP

#include <jetframe/bell.hpp>
#include <jetframe/jetcalc.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace jetframe {

struct FrameField {
    std::string tag;     ///< T_jq, T_10, T_l, T_beta, T_wq
    std::string family;  ///< slanted, vertical, parameter, logarithmic
    int component = 0;
    int j = 0;
    int q = 0;
    int l = 0;
    MultiIndex beta;
    MultiIndex lambda;
    std::string variant;  ///< T_beta: merker | cleared; T_wq: w | log
    VectorField field;
    int pole_order = 0;
    int a_degree = 0;

    std::string describe() const;
};

struct FrameSpec {
    JetConfig cfg;
    std::vector<FrameField> fields;
    std::vector<std::string> notes;

    std::map<std::string, int> family_counts() const;
    int max_pole_order() const;
};

/// How a U_0^beta block with |beta| > d was obtained.
enum class BlockMethod { Recursion, RecursionFlipped, Taylor };
const char* block_method_name(BlockMethod m);

/// Builds the building blocks and frame fields of one configuration.
/// Blocks are cached; every extended block is checked before it is returned.
class FieldForge {
public:
    explicit FieldForge(JetConfig cfg);

    const JetConfig& cfg() const { return cfg_; }
    const VectorField& dz1() const { return dz1_; }

    /// sum_p (-1)^p / (p!(q-p)!) z_1^{q-p} d/da_{beta+p 1_1}; needs |beta| + q <= d
    VectorField U_q_beta(int j, int q, const MultiIndex& beta) const;
    /// sum_{gamma<=lambda} (-1)^{|gamma|} C(lambda,gamma) z^gamma d/da_{beta-gamma}
    VectorField T_merker(int j, const MultiIndex& beta, const MultiIndex& lambda) const;
    /// every lambda <= beta with |lambda| = k+1, pivot coordinate compared first
    std::vector<MultiIndex> merker_lambdas(const MultiIndex& beta) const;
    /// Lambda_{z_1} = z^beta e_0 for any beta, built from the Merker relation
    VectorField U0_extended(int j, const MultiIndex& beta);
    BlockMethod U0_method(int j, const MultiIndex& beta);
    /// Lambda_{z_1} = z^beta e_q, for all q <= k and all beta
    VectorField U_general(int j, int q, const MultiIndex& beta);

    /// corrected d/dz_j^{[q]}; (pivot, 0) gives T_{1,0}
    VectorField T_jq(int jdir, int q);
    VectorField T_param(int j, const MultiIndex& beta, MultiIndex* lambda_used = nullptr);
    VectorField T_wq(int j, int q, std::string* base_used = nullptr);

    bool is_reserved(const MultiIndex& beta) const;

    /// the d/da_gamma block with Lambda = z^gamma e_0 (plain when gamma is a parameter)
    VectorField block0(int j, const MultiIndex& gamma);

    std::vector<std::string> notes() const;

private:
    VectorField taylor_block(int j, const MultiIndex& beta) const;
    bool check_block(int j, const VectorField& u, const MultiIndex& beta, int q) const;
    Poly z_power(const MultiIndex& beta) const;

    JetConfig cfg_;
    VectorField dz1_;
    std::vector<Poly> polys_;
    std::map<std::pair<int, MultiIndex>, std::pair<VectorField, BlockMethod>> u0_cache_;
    std::map<std::tuple<int, int, MultiIndex>, VectorField> ug_cache_;
    std::vector<std::string> notes_;
};

/// the ModuloQ rewrite w_j^{d_j} -> affine part, until w-degrees drop below d_j
Poly reduce_modulo_Q(const JetConfig& cfg, const Poly& p);

struct FrameOptions {
    bool include_T10 = true;
};

FrameSpec assemble_frame(const JetConfig& cfg, const FrameOptions& opt = {});

}  // namespace jetframe

#endif
