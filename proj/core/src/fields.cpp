#include <jetframe/errors.hpp>
#include <jetframe/fields.hpp>

#include <algorithm>

namespace jetframe {

namespace {

Rational sign(int e) { return e % 2 ? Rational(-1) : Rational(1); }

Integer multi_binomial(const MultiIndex& a, const MultiIndex& b) {
    Integer r = 1;
    for (std::size_t i = 0; i < a.size(); ++i) r *= binomial(a[i], b[i]);
    return r;
}

MultiIndex z_exponents(const Monomial& m, int n) {
    MultiIndex b(n, 0);
    for (auto& [v, e] : m.entries()) {
        if (v.kind() != VarKind::Z) throw RangeError("expected a monomial in z only");
        b.at(v.i() - 1) = e;
    }
    return b;
}

}  // namespace

std::string FrameField::describe() const {
    if (tag == "T_jq" || tag == "T_10") return tag + "(j=" + std::to_string(j) + ",q=" + std::to_string(q) + ")";
    if (tag == "T_l") return "T_l(l=" + std::to_string(l) + ")";
    if (tag == "T_beta") return "T_beta(c=" + std::to_string(component) + ",beta=" + to_string(beta) + ")";
    if (tag == "T_wq") return "T_wq(c=" + std::to_string(component) + ",q=" + std::to_string(q) + ")";
    return tag;
}

std::map<std::string, int> FrameSpec::family_counts() const {
    std::map<std::string, int> m;
    for (auto& f : fields) ++m[f.family];
    return m;
}

int FrameSpec::max_pole_order() const {
    int best = 0;
    for (auto& f : fields) best = std::max(best, f.pole_order);
    return best;
}

const char* block_method_name(BlockMethod m) {
    switch (m) {
        case BlockMethod::Recursion: return "recursion";
        case BlockMethod::RecursionFlipped: return "recursion-flipped";
        case BlockMethod::Taylor: return "taylor";
    }
    return "?";
}

// --------------------------------------------------------------- FieldForge

FieldForge::FieldForge(JetConfig cfg) : cfg_(std::move(cfg)), dz1_(build_Dz1(cfg_)) {
    cfg_.validate();
    for (int j = 1; j <= cfg_.c(); ++j) polys_.push_back(universal_poly(cfg_, j));
}

Poly FieldForge::z_power(const MultiIndex& beta) const {
    std::vector<Monomial::Entry> e;
    for (int i = 0; i < cfg_.n; ++i) e.emplace_back(VarId::z(i + 1), beta.at(i));
    return Poly::term(Monomial::from_entries(std::move(e)), 1);
}

bool FieldForge::is_reserved(const MultiIndex& beta) const {
    for (int m = 0; m <= cfg_.k; ++m)
        if (beta == cfg_.pivot_unit(m)) return true;
    return false;
}

VectorField FieldForge::U_q_beta(int j, int q, const MultiIndex& beta) const {
    if (q < 0 || q > cfg_.k) throw RangeError("q out of range");
    if (length(beta) + q > cfg_.d(j)) throw RangeError("|beta| + q exceeds the degree; use U_general");
    VectorField u;
    Poly z1 = Poly::var(VarId::z(cfg_.pivot));
    for (int p = 0; p <= q; ++p) {
        MultiIndex g = beta + cfg_.pivot_unit(p);
        if (!cfg_.has_param(j, g)) throw ReservedIndex("a_" + to_string(g) + " is not a coordinate");
        Rational c = sign(p) / Rational(factorial(p) * factorial(q - p));
        u.add(VarId::param(j, g), FracPoly(z1.pow(q - p) * c));
    }
    return u;
}

std::vector<MultiIndex> FieldForge::merker_lambdas(const MultiIndex& beta) const {
    std::vector<MultiIndex> out;
    for (auto& l : indices_below(beta))
        if (length(l) == cfg_.k + 1) out.push_back(l);
    const int piv = cfg_.pivot - 1;
    std::sort(out.begin(), out.end(), [piv](const MultiIndex& a, const MultiIndex& b) {
        if (a[piv] != b[piv]) return a[piv] < b[piv];
        return a < b;
    });
    return out;
}

VectorField FieldForge::T_merker(int j, const MultiIndex& beta, const MultiIndex& lambda) const {
    const int k = cfg_.k;
    if (length(beta) < k + 1 || length(beta) > cfg_.d(j)) throw RangeError("Merker fields need k+1 <= |beta| <= d");
    if (length(lambda) != k + 1 || !leq(lambda, beta)) throw NoValidLambda("lambda must satisfy lambda <= beta, |lambda| = k+1");
    VectorField t;
    for (auto& g : indices_below(lambda)) {
        MultiIndex s = beta - g;
        if (!cfg_.has_param(j, s)) throw ReservedIndex("a_" + to_string(s) + " is not a coordinate");
        Rational c = sign(length(g)) * Rational(multi_binomial(lambda, g));
        t.add(VarId::param(j, s), FracPoly(z_power(g) * c));
    }
    return t;
}

bool FieldForge::check_block(int j, const VectorField& u, const MultiIndex& beta, int q) const {
    LambdaVec lv = lambda(dz1_, u, polys_[j - 1], cfg_.k);
    FracPoly want(z_power(beta) * Rational(param_sign(cfg_)));
    for (int p = 0; p <= cfg_.k; ++p)
        if (!(lv.entries[p] == (p == q ? want : FracPoly{}))) return false;
    return true;
}

VectorField FieldForge::taylor_block(int j, const MultiIndex& beta) const {
    // order-k Taylor polynomial of y^beta at z, expanded in powers of y:
    // c_gamma = z^{beta-gamma} sum_{gamma<=m<=beta, |m|<=k} (-1)^{|m-gamma|} C(beta,m) C(m,gamma)
    VectorField u;
    for (auto& g : indices_below(beta)) {
        if (length(g) > cfg_.k) continue;
        Rational c = 0;
        for (auto& m : indices_below(beta)) {
            if (length(m) > cfg_.k || !leq(g, m)) continue;
            c += sign(length(m) - length(g)) * Rational(multi_binomial(beta, m) * multi_binomial(m, g));
        }
        if (c == 0) continue;
        if (!cfg_.has_param(j, g)) throw Unrepresentable("no block with Lambda = z^" + to_string(beta) + " e_0 avoids a_" + to_string(g));
        u.add(VarId::param(j, g), FracPoly(z_power(beta - g) * c));
    }
    return u;
}

VectorField FieldForge::block0(int j, const MultiIndex& gamma) {
    if (cfg_.has_param(j, gamma)) return VectorField::basis(VarId::param(j, gamma));
    return U0_extended(j, gamma);
}

VectorField FieldForge::U0_extended(int j, const MultiIndex& beta) {
    auto key = std::make_pair(j, beta);
    if (auto it = u0_cache_.find(key); it != u0_cache_.end()) return it->second.first;
    if (cfg_.has_param(j, beta)) throw RangeError("a_" + to_string(beta) + " is a coordinate; use d/da directly");

    for (auto& lam : merker_lambdas(beta)) {
        // the recursion as displayed: sum_{0<gamma<=lambda} (-1)^{|gamma|} C(lambda,gamma) z^gamma U_0^{beta-gamma}
        VectorField u;
        for (auto& g : indices_below(lam)) {
            if (length(g) == 0) continue;
            Rational c = sign(length(g)) * Rational(multi_binomial(lam, g));
            u += FracPoly(z_power(g) * c) * block0(j, beta - g);
        }
        if (check_block(j, u, beta, 0)) {
            u0_cache_.emplace(key, std::make_pair(u, BlockMethod::Recursion));
            return u;
        }
        u = -u;
        if (check_block(j, u, beta, 0)) {
            u0_cache_.emplace(key, std::make_pair(u, BlockMethod::RecursionFlipped));
            return u;
        }
    }
    VectorField u = taylor_block(j, beta);
    if (!check_block(j, u, beta, 0)) throw Unrepresentable("Taylor block for " + to_string(beta) + " failed its check");
    notes_.push_back("U_0^" + to_string(beta) + " (component " + std::to_string(j) + ") built from the Taylor expansion");
    u0_cache_.emplace(key, std::make_pair(u, BlockMethod::Taylor));
    return u;
}

BlockMethod FieldForge::U0_method(int j, const MultiIndex& beta) {
    U0_extended(j, beta);
    return u0_cache_.at(std::make_pair(j, beta)).second;
}

VectorField FieldForge::U_general(int j, int q, const MultiIndex& beta) {
    if (q < 0 || q > cfg_.k) throw RangeError("q out of range");
    auto key = std::make_tuple(j, q, beta);
    if (auto it = ug_cache_.find(key); it != ug_cache_.end()) return it->second;
    VectorField u;
    Poly z1 = Poly::var(VarId::z(cfg_.pivot));
    for (int p = 0; p <= q; ++p) {
        Rational c = sign(p) / Rational(factorial(p) * factorial(q - p));
        u += FracPoly(z1.pow(q - p) * c) * block0(j, beta + cfg_.pivot_unit(p));
    }
    ug_cache_.emplace(key, u);
    return u;
}

VectorField FieldForge::T_jq(int jdir, int q) {
    if (jdir < 1 || jdir > cfg_.n) throw InvalidDirection("coordinate out of range");
    if (jdir == cfg_.pivot && q != 0) throw InvalidDirection("the pivot direction only admits q = 0");
    if (q < 0 || q > cfg_.k) throw RangeError("q out of range");
    VectorField t = geo_field(cfg_, jdir, q);
    Rational scale = sign(q) * Rational(factorial(q));
    for (int c = 1; c <= cfg_.c(); ++c) {
        Poly da = affine_part(cfg_, c).partial(VarId::z(jdir));
        auto grouped = da.collect([](const VarId& v) { return v.kind() == VarKind::Z; });
        for (auto& [zm, coef] : grouped) {
            MultiIndex beta = z_exponents(zm, cfg_.n);
            t -= FracPoly(coef * scale) * U_general(c, q, beta);
        }
    }
    return t;
}

VectorField FieldForge::T_param(int j, const MultiIndex& beta, MultiIndex* lambda_used) {
    if (is_reserved(beta)) throw ReservedIndex("a_" + to_string(beta) + " is consumed by the corrections");
    if (!cfg_.has_param(j, beta)) throw RangeError("a_" + to_string(beta) + " is not a coordinate");
    const int k = cfg_.k;
    if (length(beta) >= k + 1) {
        auto ls = merker_lambdas(beta);
        if (ls.empty()) throw NoValidLambda("no lambda for " + to_string(beta));
        if (lambda_used) *lambda_used = ls.front();
        return T_merker(j, beta, ls.front());
    }
    VectorField inner = VectorField::basis(VarId::param(j, beta));
    FracPoly zb(z_power(beta));
    FracPoly dq = zb;
    for (int q = 0; q <= k; ++q) {
        if (q > 0) dq = dz1_.apply(dq);
        inner -= (FracPoly(sign(q)) * dq) * U_general(j, q, MultiIndex(cfg_.n, 0));
    }
    FracPoly clear(Poly::var(cfg_.pivot_jet(), 2 * k - 1));
    VectorField t = clear * inner;
    for (auto& [v, f] : t.coeffs())
        if (!f.is_poly()) throw Unrepresentable("T_beta kept a denominator on " + v.name());
    return t;
}

VectorField FieldForge::T_wq(int j, int q, std::string* base_used) {
    if (!cfg_.is_log()) throw WrongCase("T_wq exists only in the log case");
    if (q < 0 || q > cfg_.k) throw RangeError("q out of range");
    VectorField corr;
    Rational scale = sign(q) * Rational(factorial(q)) * cfg_.d(j);
    for (auto& a : cfg_.params(j))
        corr += FracPoly(Poly::var(VarId::param(j, a)) * scale) * U_general(j, q, a);

    auto tangent_mod_q = [&](const VectorField& v) {
        for (int c = 1; c <= cfg_.c(); ++c) {
            LambdaVec lv = lambda(dz1_, v, polys_[c - 1], cfg_.k);
            for (auto& e : lv.entries)
                if (!reduce_modulo_Q(cfg_, e.num()).is_zero()) return false;
        }
        return true;
    };

    VectorField as_written = dual_w_field(cfg_, j, q) + corr;
    if (tangent_mod_q(as_written)) {
        if (base_used) *base_used = "w";
        return as_written;
    }
    VectorField log_based = log_geo_field(cfg_, j, q) + corr;
    if (base_used) *base_used = "log";
    return log_based;
}

std::vector<std::string> FieldForge::notes() const {
    std::vector<std::string> out = notes_;
    int flipped = 0;
    for (auto& [key, val] : u0_cache_)
        if (val.second == BlockMethod::RecursionFlipped) ++flipped;
    if (flipped)
        out.push_back(std::to_string(flipped) +
                      " extended U_0 blocks needed the opposite overall sign of the displayed recursion");
    return out;
}

// ------------------------------------------------------------------ reduction

Poly reduce_modulo_Q(const JetConfig& cfg, const Poly& p) {
    if (!cfg.is_log()) return p;
    std::vector<Poly> rhs;
    for (int j = 1; j <= cfg.c(); ++j) rhs.push_back(affine_part(cfg, j));
    Poly cur = p;
    for (;;) {
        Poly next;
        bool changed = false;
        for (auto& [m, c] : cur.terms()) {
            int hit = 0;
            for (int j = 1; j <= cfg.c() && !hit; ++j)
                if (m.degree(VarId::w(j)) >= cfg.d(j)) hit = j;
            if (!hit) {
                next.add_term(m, c);
                continue;
            }
            changed = true;
            Monomial wd(VarId::w(hit), cfg.d(hit));
            next += Poly::term(wd.quotient_of(m), c) * rhs[hit - 1];
        }
        cur = std::move(next);
        if (!changed) return cur;
    }
}

// ------------------------------------------------------------------ assembly

FrameSpec assemble_frame(const JetConfig& cfg, const FrameOptions& opt) {
    FieldForge forge(cfg);
    FrameSpec spec;
    spec.cfg = cfg;
    auto push = [&](FrameField f) {
        f.pole_order = f.field.pole_order();
        f.a_degree = f.field.a_degree();
        spec.fields.push_back(std::move(f));
    };

    for (int jdir : cfg.non_pivot())
        for (int q = 0; q <= cfg.k; ++q) {
            FrameField f;
            f.tag = "T_jq";
            f.family = "slanted";
            f.j = jdir;
            f.q = q;
            f.field = forge.T_jq(jdir, q);
            push(std::move(f));
        }

    if (opt.include_T10) {
        FrameField f;
        f.tag = "T_10";
        f.family = "vertical";
        f.j = cfg.pivot;
        f.q = 0;
        f.field = forge.T_jq(cfg.pivot, 0);
        push(std::move(f));
    }
    for (int l = 1; l <= cfg.k; ++l) {
        FrameField f;
        f.tag = "T_l";
        f.family = "vertical";
        f.l = l;
        f.field = vertical_T(cfg, l);
        push(std::move(f));
    }

    for (int j = 1; j <= cfg.c(); ++j) {
        auto betas = cfg.params(j);
        std::sort(betas.begin(), betas.end());
        for (auto& beta : betas) {
            if (forge.is_reserved(beta)) continue;
            FrameField f;
            f.tag = "T_beta";
            f.family = "parameter";
            f.component = j;
            f.beta = beta;
            f.variant = length(beta) >= cfg.k + 1 ? "merker" : "cleared";
            f.field = forge.T_param(j, beta, &f.lambda);
            push(std::move(f));
        }
    }

    if (cfg.is_log())
        for (int j = 1; j <= cfg.c(); ++j)
            for (int q = 0; q <= cfg.k; ++q) {
                FrameField f;
                f.tag = "T_wq";
                f.family = "logarithmic";
                f.component = j;
                f.q = q;
                f.field = forge.T_wq(j, q, &f.variant);
                push(std::move(f));
            }

    spec.notes = forge.notes();
    bool any_w = false;
    for (auto& f : spec.fields)
        if (f.tag == "T_wq" && f.variant == "log") any_w = true;
    if (any_w)
        spec.notes.push_back("T_wq: the d/dw^{[q]} base fails the reduction check; the d/d(log w)^{[q]} base is used");
    for (auto& w : cfg.warnings()) spec.notes.push_back("warning: " + w);
    return spec;
}

}  // namespace jetframe
