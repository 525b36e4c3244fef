#include <jetframe/errors.hpp>
#include <jetframe/jetcalc.hpp>

#include <algorithm>

namespace jetframe {

const char* case_name(Case c) { return c == Case::Compact ? "compact" : "log"; }

Case parse_case(const std::string& s) {
    if (s == "compact") return Case::Compact;
    if (s == "log" || s == "logarithmic") return Case::Logarithmic;
    throw InvalidConfig("unknown case '" + s + "'");
}

// ---------------------------------------------------------------- JetConfig

JetConfig JetConfig::make(int n, int k, std::vector<int> degrees, Case kase, int pivot) {
    JetConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.degrees = std::move(degrees);
    cfg.kase = kase;
    cfg.pivot = pivot;
    if (kase == Case::Compact && n >= 2) {
        int last = pivot == n ? n - 1 : n;
        for (int d : cfg.degrees) cfg.hat_alpha.push_back(unit(n, last, d));
    }
    cfg.validate();
    return cfg;
}

void JetConfig::validate() const {
    if (n < 1 || n > VarId::max_coords) throw InvalidConfig("n must lie in 1.." + std::to_string(VarId::max_coords));
    if (k < 1) throw InvalidConfig("k must be >= 1");
    if (degrees.empty()) throw InvalidConfig("at least one degree is required");
    for (int d : degrees)
        if (d < 1) throw InvalidConfig("degrees must be >= 1");
    if (pivot < 1 || pivot > n) throw InvalidConfig("pivot out of range");
    if (kase == Case::Compact) {
        if (hat_alpha.size() != degrees.size()) throw InvalidConfig("one hat_alpha per component is required");
        for (int j = 1; j <= c(); ++j) {
            const auto& h = hat_alpha[j - 1];
            if (static_cast<int>(h.size()) != n) throw InvalidConfig("hat_alpha has wrong length");
            for (int x : h)
                if (x < 0) throw InvalidConfig("negative hat_alpha entry");
            if (length(h) != d(j)) throw InvalidConfig("|hat_alpha| must equal the degree");
            if (h[pivot - 1] != 0) throw InvalidConfig("hat_alpha must vanish at the pivot coordinate");
        }
    } else if (!hat_alpha.empty()) {
        throw InvalidConfig("hat_alpha is only meaningful in the compact case");
    }
}

std::vector<std::string> JetConfig::warnings() const {
    std::vector<std::string> w;
    int dmin = *std::min_element(degrees.begin(), degrees.end());
    if (k >= dmin) w.push_back("jet order k=" + std::to_string(k) + " is not below min degree " + std::to_string(dmin));
    return w;
}

std::vector<int> JetConfig::non_pivot() const {
    std::vector<int> r;
    for (int i = 1; i <= n; ++i)
        if (i != pivot) r.push_back(i);
    return r;
}

bool JetConfig::has_param(int j, const MultiIndex& a) const {
    if (j < 1 || j > c()) return false;
    if (static_cast<int>(a.size()) != n) return false;
    for (int x : a)
        if (x < 0) return false;
    if (length(a) > d(j)) return false;
    if (kase == Case::Compact && a == hat_alpha.at(j - 1)) return false;
    return true;
}

std::vector<MultiIndex> JetConfig::params(int j) const {
    std::vector<MultiIndex> r;
    for (auto& a : indices_upto(n, d(j)))
        if (has_param(j, a)) r.push_back(a);
    return r;
}

std::vector<VarId> JetConfig::ambient_vars() const {
    std::vector<VarId> v;
    for (int i = 1; i <= n; ++i) {
        v.push_back(VarId::z(i));
        for (int p = 1; p <= k; ++p) v.push_back(VarId::jet(i, p));
    }
    for (int j = 1; j <= c(); ++j) {
        for (auto& a : params(j)) v.push_back(VarId::param(j, a));
        if (is_log()) {
            v.push_back(VarId::w(j));
            for (int p = 1; p <= k; ++p) v.push_back(VarId::logw(j, p));
        }
    }
    std::sort(v.begin(), v.end());
    return v;
}

std::string JetConfig::label() const {
    std::string s = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " d=";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
    s += std::string(" ") + case_name(kase);
    if (pivot != 1) s += " pivot=" + std::to_string(pivot);
    return s;
}

// -------------------------------------------------------------- VectorField

VectorField VectorField::basis(const VarId& v, const FracPoly& coef) {
    VectorField r;
    r.add(v, coef);
    return r;
}

FracPoly VectorField::coeff(const VarId& v) const {
    auto it = c_.find(v);
    return it == c_.end() ? FracPoly{} : it->second;
}

void VectorField::add(const VarId& v, const FracPoly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(v, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) c_.erase(it);
    }
}

VectorField& VectorField::operator+=(const VectorField& o) {
    for (auto& [v, f] : o.c_) add(v, f);
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    for (auto& [v, f] : o.c_) add(v, -f);
    return *this;
}

VectorField operator*(const FracPoly& f, const VectorField& v) {
    VectorField r;
    if (f.is_zero()) return r;
    for (auto& [u, g] : v.c_) r.add(u, f * g);
    return r;
}

VectorField VectorField::operator-() const { return FracPoly(-1) * *this; }

FracPoly VectorField::apply(const FracPoly& f) const {
    FracPoly acc;
    for (auto& v : f.vars()) {
        auto it = c_.find(v);
        if (it == c_.end()) continue;
        acc += it->second * f.partial(v);
    }
    return acc;
}

Poly VectorField::apply_poly(const Poly& p) const {
    FracPoly r = apply(FracPoly(p));
    if (!r.is_poly()) throw Unrepresentable("field application left a denominator");
    return r.num();
}

int VectorField::pole_order() const {
    int best = 0;
    bool first = true;
    for (auto& [v, f] : c_) {
        int p = jetframe::pole_order(f);
        if (first || p > best) best = p;
        first = false;
    }
    return best;
}

int VectorField::a_degree() const {
    int best = 0;
    for (auto& [v, f] : c_) best = std::max(best, jetframe::a_degree(f));
    return best;
}

std::string VectorField::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [v, f] : c_) {
        if (!s.empty()) s += "\n";
        s += "d/d" + v.name() + " : " + f.to_string();
    }
    return s;
}

FracPoly apply(const VectorField& v, const FracPoly& f) { return v.apply(f); }

VectorField adjoint(const VectorField& a, const VectorField& b) {
    VectorField r;
    for (auto& [v, f] : b.coeffs()) r.add(v, a.apply(f));
    for (auto& [v, f] : a.coeffs()) r.add(v, -b.apply(f));
    return r;
}

VectorField adjoint_power(const VectorField& d, const VectorField& v, int p) {
    VectorField r = v;
    for (int i = 0; i < p && !r.is_zero(); ++i) r = adjoint(d, r);
    return r;
}

FracPoly apply_power(const VectorField& d, const FracPoly& f, int p) {
    FracPoly r = f;
    for (int i = 0; i < p && !r.is_zero(); ++i) r = d.apply(r);
    return r;
}

bool LambdaVec::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const FracPoly& f) { return f.is_zero(); });
}

int LambdaVec::witness() const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!entries[i].is_zero()) return static_cast<int>(i);
    return -1;
}

// ------------------------------------------------------- defining equations

Poly affine_part(const JetConfig& cfg, int j) {
    Poly a;
    for (auto& alpha : indices_upto(cfg.n, cfg.d(j))) {
        Monomial zm = Monomial::from_entries([&] {
            std::vector<Monomial::Entry> e;
            for (int i = 0; i < cfg.n; ++i) e.emplace_back(VarId::z(i + 1), alpha[i]);
            return e;
        }());
        if (cfg.has_param(j, alpha))
            a += Poly::term(zm * Monomial(VarId::param(j, alpha)), 1);
        else
            a += Poly::term(zm, 1);
    }
    return a;
}

Poly universal_poly(const JetConfig& cfg, int j) {
    if (cfg.is_log()) return Poly::var(VarId::w(j), cfg.d(j)) - affine_part(cfg, j);
    return affine_part(cfg, j);
}

int param_sign(const JetConfig& cfg) { return cfg.is_log() ? -1 : 1; }

VectorField build_Dt(const JetConfig& cfg) {
    VectorField d;
    for (int i = 1; i <= cfg.n; ++i)
        for (int p = 0; p < cfg.k; ++p)
            d.add(VarId::zjet(i, p), Poly::var(VarId::jet(i, p + 1)) * Rational(p + 1));
    if (cfg.is_log()) {
        for (int j = 1; j <= cfg.c(); ++j) {
            d.add(VarId::w(j), Poly::var(VarId::w(j)) * Poly::var(VarId::logw(j, 1)));
            for (int p = 1; p < cfg.k; ++p)
                d.add(VarId::logw(j, p), Poly::var(VarId::logw(j, p + 1)) * Rational(p + 1));
        }
    }
    return d;
}

VectorField build_Dz1(const JetConfig& cfg) {
    VectorField d;
    Monomial den(cfg.pivot_jet());
    VectorField dt = build_Dt(cfg);
    for (auto& [v, f] : dt.coeffs()) d.add(v, f.divide_by(den));
    return d;
}

VectorField build_base(const JetConfig& cfg, Base b) { return b == Base::Dt ? build_Dt(cfg) : build_Dz1(cfg); }

LambdaVec lambda(const VectorField& d, const VectorField& v, const Poly& p, int k) {
    LambdaVec out;
    out.entries.reserve(k + 1);
    VectorField cur = v;
    FracPoly fp(p);
    for (int q = 0; q <= k; ++q) {
        out.entries.push_back(cur.apply(fp));
        if (q < k) cur = adjoint(d, cur);
    }
    return out;
}

LambdaVec lambda(const JetConfig& cfg, Base b, const VectorField& v, int j) {
    return lambda(build_base(cfg, b), v, universal_poly(cfg, j), cfg.k);
}

std::vector<std::vector<FracPoly>> defining_equations(const JetConfig& cfg, Base b) {
    VectorField d = build_base(cfg, b);
    std::vector<std::vector<FracPoly>> out;
    for (int j = 1; j <= cfg.c(); ++j) {
        std::vector<FracPoly> eqs;
        FracPoly cur(universal_poly(cfg, j));
        for (int q = 0; q <= cfg.k; ++q) {
            eqs.push_back(cur);
            if (q < cfg.k) cur = d.apply(cur);
        }
        out.push_back(std::move(eqs));
    }
    return out;
}

BinomialSides binomial_forward(const VectorField& d, const VectorField& v, const FracPoly& f, int q) {
    BinomialSides s;
    s.lhs = adjoint_power(d, v, q).apply(f);
    for (int p = 0; p <= q; ++p) {
        FracPoly term = apply_power(d, v.apply(apply_power(d, f, p)), q - p);
        Rational c = Rational(binomial(q, p)) * (p % 2 ? -1 : 1);
        s.rhs += FracPoly(c) * term;
    }
    return s;
}

BinomialSides binomial_inverse(const VectorField& d, const VectorField& v, const FracPoly& f, int q) {
    BinomialSides s;
    s.lhs = v.apply(apply_power(d, f, q));
    for (int p = 0; p <= q; ++p) {
        FracPoly term = apply_power(d, adjoint_power(d, v, p).apply(f), q - p);
        Rational c = Rational(binomial(q, p)) * (p % 2 ? -1 : 1);
        s.rhs += FracPoly(c) * term;
    }
    return s;
}

}  // namespace jetframe
