#ifndef JETFRAME_VERIFY_HPP
#define JETFRAME_VERIFY_HPP

#include <jetframe/fields.hpp>
#include <jetframe/identities.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace jetframe {

enum class TangencyMode { Identical, ModuloQ };
const char* mode_name(TangencyMode m);

struct TangencyVerdict {
    bool pass = true;
    /// first failing component and Lambda slot, or 0 / -1
    int component = 0;
    int witness = -1;
};

/// Lambda_{z_1}(V) against every component; ModuloQ rewrites w^d -> affine part first
TangencyVerdict check_tangency(const JetConfig& cfg, const VectorField& v, TangencyMode mode);
/// Identical in the compact case, ModuloQ in the log case
TangencyMode required_mode(const JetConfig& cfg);

struct VerticalPoint {
    Point assignment;
    std::uint64_t seed = 0;
    int attempts = 1;
};

/// a point of the vertical jet space with z_1' = 1; throws SamplingExhausted
VerticalPoint sample_vertical_point(const JetConfig& cfg, std::uint64_t seed, int box = 3);

int expected_dimension(const JetConfig& cfg);

/// exact rank of a rational matrix (fraction-free elimination)
int exact_rank(std::vector<std::vector<Rational>> rows);
/// exact solution of a square system, or nullopt when singular
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> b);

/// rows = coefficient vectors of the fields at the point, columns = ambient coordinates
std::vector<std::vector<Rational>> frame_matrix(const JetConfig& cfg, const std::vector<VectorField>& fields,
                                                 const Point& pt);
int rank_at_point(const JetConfig& cfg, const std::vector<VectorField>& fields, const Point& pt);

/// indices of fields V with eval(V . E) != 0 for some defining equation E
std::vector<int> gradient_failures(const JetConfig& cfg, const std::vector<VectorField>& fields,
                                   const Point& pt);

struct PoleRow {
    std::string field;
    int computed = 0;
    std::optional<int> predicted;
    bool matches = true;
    int a_degree = 0;
};

struct PoleTable {
    std::vector<PoleRow> rows;
    int max = 0;
    std::string achiever;
    int bound = 0;  ///< 5k - 2
    bool all_match = true;
    bool a_degree_ok = true;
    bool max_ok() const { return max <= bound; }
};

std::optional<int> predicted_pole_order(const JetConfig& cfg, const FrameField& f);
/// U_q^beta: q, or 2q + k + |beta| - d once |beta| + q > d
int predicted_U_pole_order(const JetConfig& cfg, int j, int q, const MultiIndex& beta);
PoleTable pole_audit(const FrameSpec& spec);

struct FiberCurveResult {
    int curves = 0;
    int on_fiber = 0;   ///< oracle jets satisfying every equation
    int perturbed_rejected = 0;
    bool pass() const { return on_fiber == curves && perturbed_rejected == curves; }
};

/// curves forced into a fiber by solving the reserved a's along them (compact case)
FiberCurveResult fiber_curve_check(const JetConfig& cfg, std::uint64_t seed, int curves);

struct TangencyRecord {
    std::string field;
    TangencyMode mode = TangencyMode::Identical;
    TangencyVerdict verdict;
};

struct RankRecord {
    std::uint64_t seed = 0;
    int rank = 0;
    int expected = 0;
    bool gradients_ok = true;
    std::vector<std::string> gradient_failures;
};

struct VerifyOptions {
    bool tangency = true;
    bool rank = true;
    bool gradients = true;
    bool pole = true;
    bool identities = false;
    int points = 3;
    std::uint64_t seed = 1;
    int identity_k = 0;  ///< 0: use the frame's k
};

struct Report {
    std::optional<JetConfig> cfg;
    std::uint64_t seed = 0;
    int expected_dimension = 0;
    int frame_size = 0;
    std::vector<TangencyRecord> verdicts;
    std::vector<RankRecord> rank_results;
    std::optional<PoleTable> pole_table;
    std::vector<IdentityResult> identity_suite;
    std::vector<std::string> notes;
    bool pass = false;

    void finalize();
};

Report verify_frame(const FrameSpec& spec, const VerifyOptions& opt);
Report verify_identities(int n, int k, std::uint64_t seed);

/// runs body(i) for i < count on up to JETFRAME_THREADS threads
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace jetframe

#endif
