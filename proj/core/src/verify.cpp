#include <jetframe/errors.hpp>
#include <jetframe/rng.hpp>
#include <jetframe/series.hpp>
#include <jetframe/verify.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace jetframe {

const char* mode_name(TangencyMode m) { return m == TangencyMode::Identical ? "identical" : "modulo-Q"; }

TangencyMode required_mode(const JetConfig& cfg) {
    return cfg.is_log() ? TangencyMode::ModuloQ : TangencyMode::Identical;
}

TangencyVerdict check_tangency(const JetConfig& cfg, const VectorField& v, TangencyMode mode) {
    VectorField d = build_Dz1(cfg);
    TangencyVerdict out;
    for (int j = 1; j <= cfg.c(); ++j) {
        LambdaVec lv = lambda(d, v, universal_poly(cfg, j), cfg.k);
        for (int p = 0; p <= cfg.k; ++p) {
            const FracPoly& e = lv.entries[p];
            bool zero = mode == TangencyMode::Identical ? e.is_zero() : reduce_modulo_Q(cfg, e.num()).is_zero();
            if (!zero) {
                out.pass = false;
                out.component = j;
                out.witness = p;
                return out;
            }
        }
    }
    return out;
}

// ------------------------------------------------------------ linear algebra

int exact_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<Integer>> m;
    for (auto& r : rows) {
        Integer l = 1;
        for (auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> ir;
        for (auto& x : r) ir.push_back(Integer(x * Rational(l)));
        m.push_back(std::move(ir));
    }
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            for (std::size_t cc = c + 1; cc < cols; ++cc) {
                Integer t = m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[r][cc] = t;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
            b[r] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
    return x;
}

// ----------------------------------------------------------------- sampling

namespace {

std::vector<VarId> reserved_params(const JetConfig& cfg, int j) {
    std::vector<VarId> r;
    for (int m = 0; m <= cfg.k; ++m)
        if (cfg.has_param(j, cfg.pivot_unit(m))) r.push_back(VarId::param(j, cfg.pivot_unit(m)));
    return r;
}

bool is_reserved_var(const JetConfig& cfg, const VarId& v) {
    if (v.kind() != VarKind::Param) return false;
    for (int m = 0; m <= cfg.k; ++m)
        if (v.alpha() == cfg.pivot_unit(m)) return true;
    return false;
}

/// linear system for the unknowns from equations linear in them
std::optional<std::vector<Rational>> solve_affine(const std::vector<Poly>& eqs, const std::vector<VarId>& unknowns) {
    const std::size_t n = unknowns.size();
    if (eqs.size() != n) return std::nullopt;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<Rational> b(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (auto& [mono, c] : eqs[r].terms()) {
            if (mono.is_one()) {
                b[r] -= c;
                continue;
            }
            auto& e = mono.entries();
            if (e.size() != 1 || e[0].second != 1) throw RangeError("equation is not affine in the unknowns");
            auto it = std::find(unknowns.begin(), unknowns.end(), e[0].first);
            if (it == unknowns.end()) throw RangeError("unexpected variable " + e[0].first.name());
            m[r][it - unknowns.begin()] += c;
        }
    }
    return solve_linear(std::move(m), std::move(b));
}

}  // namespace

VerticalPoint sample_vertical_point(const JetConfig& cfg, std::uint64_t seed, int box) {
    auto eqs = defining_equations(cfg, Base::Dt);
    constexpr int kMaxAttempts = 32;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        Point pt;
        for (auto& v : cfg.ambient_vars()) {
            if (is_reserved_var(cfg, v)) continue;
            if (v == cfg.pivot_jet())
                pt[v] = 1;
            else if (v.kind() == VarKind::W)
                pt[v] = rng.nonzero(-box, box);
            else
                pt[v] = rng.uniform(-box, box);
        }
        bool ok = true;
        for (int j = 1; j <= cfg.c() && ok; ++j) {
            auto unknowns = reserved_params(cfg, j);
            std::vector<Poly> lin;
            for (std::size_t q = 0; q < unknowns.size(); ++q) lin.push_back(eqs[j - 1][q].num().partial_eval(pt));
            auto sol = solve_affine(lin, unknowns);
            if (!sol) {
                ok = false;
                break;
            }
            for (std::size_t i = 0; i < unknowns.size(); ++i) pt[unknowns[i]] = (*sol)[i];
        }
        if (!ok) continue;
        for (auto& comp : eqs)
            for (auto& e : comp)
                if (e.eval(pt) != 0) ok = false;
        if (!ok) continue;
        return VerticalPoint{std::move(pt), seed, attempt + 1};
    }
    throw SamplingExhausted("no vertical point after 32 attempts for " + cfg.label());
}

int expected_dimension(const JetConfig& cfg) {
    int dim = 0;
    for (int j = 1; j <= cfg.c(); ++j) dim += static_cast<int>(cfg.params(j).size());
    int jets = cfg.n * (cfg.k + 1);
    if (cfg.is_log()) jets += cfg.c() * (cfg.k + 1);
    return dim + jets - cfg.c() * (cfg.k + 1);
}

std::vector<std::vector<Rational>> frame_matrix(const JetConfig& cfg, const std::vector<VectorField>& fields,
                                                 const Point& pt) {
    auto cols = cfg.ambient_vars();
    std::vector<std::vector<Rational>> rows;
    for (auto& f : fields) {
        std::vector<Rational> row(cols.size());
        for (auto& [v, c] : f.coeffs()) {
            auto it = std::lower_bound(cols.begin(), cols.end(), v);
            if (it == cols.end() || *it != v) throw UnsupportedVariable(v.name() + " is not an ambient coordinate");
            row[it - cols.begin()] = c.eval(pt);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int rank_at_point(const JetConfig& cfg, const std::vector<VectorField>& fields, const Point& pt) {
    return exact_rank(frame_matrix(cfg, fields, pt));
}

std::vector<int> gradient_failures(const JetConfig& cfg, const std::vector<VectorField>& fields,
                                   const Point& pt) {
    auto eqs = defining_equations(cfg, Base::Dt);
    std::vector<int> bad;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        bool ok = true;
        for (auto& comp : eqs) {
            for (auto& e : comp)
                if (fields[i].apply(e).eval(pt) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (!ok) bad.push_back(static_cast<int>(i));
    }
    return bad;
}

// --------------------------------------------------------------- pole audit

int predicted_U_pole_order(const JetConfig& cfg, int j, int q, const MultiIndex& beta) {
    if (length(beta) + q <= cfg.d(j)) return q;
    return q + cfg.k + length(beta) + q - cfg.d(j);
}

std::optional<int> predicted_pole_order(const JetConfig& cfg, const FrameField& f) {
    const int k = cfg.k;
    if (f.tag == "T_jq" || f.tag == "T_10") return f.q <= 1 ? k + f.q : k - 1 + 2 * f.q;
    if (f.tag == "T_l") return 2 * (k - f.l);
    if (f.tag == "T_beta") return length(f.beta) >= k + 1 ? k + 1 : 4 * k + length(f.beta) - 2;
    return std::nullopt;
}

PoleTable pole_audit(const FrameSpec& spec) {
    PoleTable t;
    t.bound = 5 * spec.cfg.k - 2;
    t.max = -1;
    for (auto& f : spec.fields) {
        PoleRow r;
        r.field = f.describe();
        r.computed = f.pole_order;
        r.predicted = predicted_pole_order(spec.cfg, f);
        r.matches = !r.predicted || *r.predicted == r.computed;
        r.a_degree = f.a_degree;
        t.all_match = t.all_match && r.matches;
        t.a_degree_ok = t.a_degree_ok && r.a_degree <= 1;
        if (r.computed > t.max) {
            t.max = r.computed;
            t.achiever = r.field;
        }
        t.rows.push_back(std::move(r));
    }
    if (t.max < 0) t.max = 0;
    return t;
}

// -------------------------------------------------------------- fiber oracle

FiberCurveResult fiber_curve_check(const JetConfig& cfg, std::uint64_t seed, int curves) {
    if (cfg.is_log()) throw WrongCase("fiber curves are drawn in the compact case");
    auto eqs = defining_equations(cfg, Base::Dt);
    FiberCurveResult res;
    int produced = 0;
    for (std::uint64_t counter = 0; produced < curves; ++counter) {
        if (counter > static_cast<std::uint64_t>(curves) * 8)
            throw SamplingExhausted("too many degenerate fiber curves");
        Rng rng(derive_seed(seed, counter));
        TruncCurve curve = TruncCurve::random(cfg.n, cfg.k, rng);
        Point fixed;
        for (int j = 1; j <= cfg.c(); ++j)
            for (auto& a : cfg.params(j)) {
                VarId v = VarId::param(j, a);
                if (!is_reserved_var(cfg, v)) fixed[v] = rng.uniform(-3, 3);
            }
        // the series coefficients of P(f(t)) are affine in the reserved a's
        bool ok = true;
        for (int j = 1; j <= cfg.c() && ok; ++j) {
            auto unknowns = reserved_params(cfg, j);
            Poly p = universal_poly(cfg, j);
            std::size_t m = unknowns.size();
            Point base = fixed;
            for (auto& u : unknowns) base[u] = 0;
            TruncSeries s0 = compose_along(p, curve, base);
            std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m));
            std::vector<Rational> rhs(m);
            for (std::size_t q = 0; q < m; ++q) rhs[q] = -s0[static_cast<int>(q)];
            for (std::size_t c = 0; c < m; ++c) {
                Point probe = base;
                probe[unknowns[c]] = 1;
                TruncSeries s = compose_along(p, curve, probe);
                for (std::size_t q = 0; q < m; ++q) mat[q][c] = s[static_cast<int>(q)] - s0[static_cast<int>(q)];
            }
            auto sol = solve_linear(mat, rhs);
            if (!sol) {
                ok = false;
                break;
            }
            for (std::size_t c = 0; c < m; ++c) fixed[unknowns[c]] = (*sol)[c];
        }
        if (!ok) continue;
        // move one Taylor coefficient of order >= 1 along a coordinate where grad P_1 at f(0)
        // is nonzero; the t^order coefficient of P_1(f) then shifts by that partial times the step
        Point origin = fixed;
        for (int c = 1; c <= cfg.n; ++c) origin[VarId::z(c)] = curve.f[c - 1][0];
        Poly p1 = universal_poly(cfg, 1);
        int start = rng.uniform(0, cfg.n - 1), i = 0;
        for (int s = 0; s < cfg.n && !i; ++s) {
            int c = (start + s) % cfg.n + 1;
            if (p1.partial(VarId::z(c)).eval(origin) != 0) i = c;
        }
        if (i == 0) continue;  // singular point of the fiber
        ++produced;
        ++res.curves;

        Point pt = oracle_jet(curve);
        for (auto& [v, x] : fixed) pt[v] = x;
        bool on = true;
        for (auto& comp : eqs)
            for (auto& e : comp)
                if (e.eval(pt) != 0) on = false;
        if (on) ++res.on_fiber;

        int order = rng.uniform(1, cfg.k);
        TruncCurve moved = curve;
        moved.f[i - 1][order] += rng.nonzero(-3, 3);
        Point mp = oracle_jet(moved);
        for (auto& [v, x] : fixed) mp[v] = x;
        bool still = true;
        for (auto& comp : eqs)
            for (auto& e : comp)
                if (e.eval(mp) != 0) still = false;
        if (!still) ++res.perturbed_rejected;
    }
    return res;
}

// ------------------------------------------------------------------- report

void Report::finalize() {
    pass = true;
    for (auto& v : verdicts) pass = pass && v.verdict.pass;
    for (auto& r : rank_results) pass = pass && r.rank == r.expected && r.gradients_ok;
    if (pole_table) pass = pass && pole_table->max_ok() && pole_table->a_degree_ok;
    for (auto& i : identity_suite) pass = pass && i.pass;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("JETFRAME_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) threads = std::min<std::size_t>(threads, static_cast<std::size_t>(cap));
    }
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next++;
                if (i >= count || failed) return;
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

Report verify_frame(const FrameSpec& spec, const VerifyOptions& opt) {
    const JetConfig& cfg = spec.cfg;
    Report rep;
    rep.cfg = cfg;
    rep.seed = opt.seed;
    rep.expected_dimension = expected_dimension(cfg);
    rep.frame_size = static_cast<int>(spec.fields.size());
    rep.notes = spec.notes;

    if (opt.tangency) {
        rep.verdicts.resize(spec.fields.size());
        TangencyMode mode = required_mode(cfg);
        parallel_for(spec.fields.size(), [&](std::size_t i) {
            rep.verdicts[i] = TangencyRecord{spec.fields[i].describe(), mode,
                                             check_tangency(cfg, spec.fields[i].field, mode)};
        });
    }

    if (opt.rank || opt.gradients) {
        std::vector<VectorField> fields;
        for (auto& f : spec.fields) fields.push_back(f.field);
        rep.rank_results.resize(opt.points);
        parallel_for(static_cast<std::size_t>(opt.points), [&](std::size_t i) {
            RankRecord r;
            r.seed = derive_seed(opt.seed, i);
            VerticalPoint vp = sample_vertical_point(cfg, r.seed);
            r.expected = rep.expected_dimension;
            r.rank = opt.rank ? rank_at_point(cfg, fields, vp.assignment) : r.expected;
            if (opt.gradients) {
                for (int b : gradient_failures(cfg, fields, vp.assignment))
                    r.gradient_failures.push_back(spec.fields[b].describe());
                r.gradients_ok = r.gradient_failures.empty();
            }
            rep.rank_results[i] = std::move(r);
        });
    }

    if (opt.pole) rep.pole_table = pole_audit(spec);
    if (opt.identities) {
        int k = opt.identity_k > 0 ? opt.identity_k : cfg.k;
        rep.identity_suite = identity_suite(cfg.n, k, opt.seed);
    }
    rep.finalize();
    return rep;
}

Report verify_identities(int n, int k, std::uint64_t seed) {
    Report rep;
    rep.seed = seed;
    rep.identity_suite = identity_suite(n, k, seed);
    rep.finalize();
    return rep;
}

}  // namespace jetframe
