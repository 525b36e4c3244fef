#include <jetframe/errors.hpp>
#include <jetframe/poly.hpp>

#include <algorithm>
#include <set>

namespace jetframe {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, int e) {
    if (e < 0) throw RangeError("negative exponent");
    if (e > 0) e_.emplace_back(v, e);
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [v, e] : entries) {
        if (e < 0) throw RangeError("negative exponent");
        if (e == 0) continue;
        if (!m.e_.empty() && m.e_.back().first == v)
            m.e_.back().second += e;
        else
            m.e_.emplace_back(v, e);
    }
    return m;
}

int Monomial::degree(const VarId& v) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), v,
                               [](const Entry& a, const VarId& b) { return a.first < b; });
    return (it != e_.end() && it->first == v) ? it->second : 0;
}

int Monomial::total_degree() const {
    int s = 0;
    for (auto& [v, e] : e_) s += e;
    return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
            r.e_.push_back(*a++);
        } else if (a == e_.end() || b->first < a->first) {
            r.e_.push_back(*b++);
        } else {
            r.e_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (auto& [v, e] : e_)
        if (o.degree(v) < e) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r;
    for (auto& [v, e] : o.e_) {
        int d = e - degree(v);
        if (d < 0) throw RangeError("monomial does not divide");
        if (d > 0) r.e_.emplace_back(v, d);
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (auto& [v, e] : a.e_) {
        int d = std::min(e, b.degree(v));
        if (d > 0) r.e_.emplace_back(v, d);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<Entry> all;
    for (auto& [v, e] : a.e_) all.emplace_back(v, std::max(e, b.degree(v)));
    for (auto& [v, e] : b.e_)
        if (a.degree(v) == 0) all.emplace_back(v, e);
    return from_entries(std::move(all));
}

Monomial Monomial::without(const VarId& v) const {
    Monomial r;
    for (auto& en : e_)
        if (en.first != v) r.e_.push_back(en);
    return r;
}

std::string Monomial::to_string() const {
    std::string s;
    for (auto& [v, e] : e_) {
        if (!s.empty()) s += " * ";
        s += v.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
    if (c != 0) t_.emplace(Monomial{}, c);
}

Poly Poly::var(const VarId& v, int e) { return term(Monomial(v, e), 1); }

Poly Poly::term(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.t_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

Rational Poly::constant_term() const {
    auto it = t_.find(Monomial{});
    return it == t_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, v] : t_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw RangeError("negative power of a polynomial");
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly Poly::mul_monomial(const Monomial& m) const {
    Poly r;
    for (auto& [mm, c] : t_) r.t_.emplace_hint(r.t_.end(), mm * m, c);
    return r;
}

Poly Poly::partial(const VarId& v) const {
    Poly r;
    for (auto& [m, c] : t_) {
        int e = m.degree(v);
        if (e == 0) continue;
        std::vector<Monomial::Entry> ent;
        for (auto& en : m.entries()) ent.emplace_back(en.first, en.first == v ? en.second - 1 : en.second);
        r.add_term(Monomial::from_entries(std::move(ent)), c * e);
    }
    return r;
}

Rational Poly::eval(const Point& pt) const {
    Rational s = 0;
    for (auto& [m, c] : t_) {
        Rational x = c;
        for (auto& [v, e] : m.entries()) {
            auto it = pt.find(v);
            if (it == pt.end()) throw UnassignedVariable(v.name());
            Rational pw;
            mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(it->second.get_mpq_t()), e);
            mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(it->second.get_mpq_t()), e);
            x *= pw;
        }
        s += x;
    }
    return s;
}

Poly Poly::partial_eval(const Point& pt) const {
    Poly r;
    for (auto& [m, c] : t_) {
        Rational x = c;
        std::vector<Monomial::Entry> rest;
        for (auto& [v, e] : m.entries()) {
            auto it = pt.find(v);
            if (it == pt.end()) {
                rest.emplace_back(v, e);
                continue;
            }
            for (int k = 0; k < e; ++k) x *= it->second;
        }
        r.add_term(Monomial::from_entries(std::move(rest)), x);
    }
    return r;
}

std::vector<VarId> Poly::vars() const {
    std::set<VarId> s;
    for (auto& [m, c] : t_)
        for (auto& [v, e] : m.entries()) s.insert(v);
    return {s.begin(), s.end()};
}

int Poly::degree_in(const VarId& v) const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.degree(v));
    return d;
}

Monomial Poly::content_monomial() const {
    if (t_.empty()) return {};
    Monomial g = t_.begin()->first;
    for (auto& [m, c] : t_) {
        if (g.is_one()) break;
        g = Monomial::gcd(g, m);
    }
    return g;
}

Poly Poly::div_monomial(const Monomial& m) const {
    if (m.is_one()) return *this;
    Poly r;
    for (auto& [mm, c] : t_) r.t_.emplace(m.quotient_of(mm), c);
    return r;
}

std::map<Monomial, Poly> Poly::collect(const std::function<bool(const VarId&)>& pred) const {
    std::map<Monomial, Poly> out;
    for (auto& [m, c] : t_) {
        std::vector<Monomial::Entry> in, rest;
        for (auto& en : m.entries()) (pred(en.first) ? in : rest).push_back(en);
        out[Monomial::from_entries(std::move(in))].add_term(Monomial::from_entries(std::move(rest)), c);
    }
    return out;
}

std::string Poly::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : t_) {
        Rational a = c;
        if (!first) {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        s += a.get_str();
        if (!m.is_one()) s += " * " + m.to_string();
    }
    return s;
}

Poly partial(const Poly& p, const VarId& v) { return p.partial(v); }
Rational eval(const Poly& p, const Point& pt) { return p.eval(pt); }

// ---------------------------------------------------------------- FracPoly

FracPoly::FracPoly(const Poly& num) : num_(num) {}

FracPoly::FracPoly(Poly num, Monomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void FracPoly::normalize() {
    if (num_.is_zero()) {
        den_ = Monomial{};
        return;
    }
    if (den_.is_one()) return;
    Monomial g = Monomial::gcd(num_.content_monomial(), den_);
    if (g.is_one()) return;
    num_ = num_.div_monomial(g);
    den_ = g.quotient_of(den_);
}

FracPoly& FracPoly::operator+=(const FracPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        Monomial l = Monomial::lcm(den_, o.den_);
        num_ = num_.mul_monomial(den_.quotient_of(l)) + o.num_.mul_monomial(o.den_.quotient_of(l));
        den_ = l;
    }
    normalize();
    return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& o) { return *this += -o; }

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return FracPoly(a.num_ * b.num_, a.den_ * b.den_);
}

FracPoly FracPoly::operator-() const {
    FracPoly r = *this;
    r.num_ = -r.num_;
    return r;
}

FracPoly FracPoly::pow(int e) const {
    if (e >= 0) return FracPoly(num_.pow(e), Monomial::from_entries([&] {
                                    auto v = den_.entries();
                                    for (auto& en : v) en.second *= e;
                                    return v;
                                }()));
    return inverse().pow(-e);
}

FracPoly FracPoly::inverse() const {
    if (num_.size() != 1) throw Unrepresentable("inverse of a non-monomial " + num_.to_string());
    auto& [m, c] = *num_.terms().begin();
    return FracPoly(Poly::term(den_, 1 / c), m);
}

FracPoly FracPoly::divide_by(const Monomial& m) const { return FracPoly(num_, den_ * m); }

FracPoly FracPoly::partial(const VarId& v) const {
    int e = den_.degree(v);
    if (e == 0) return FracPoly(num_.partial(v), den_);
    // d(n / (v^e m)) = (v dn - e n) / (v^{e+1} m)
    Poly top = num_.partial(v).mul_monomial(Monomial(v)) - num_ * Rational(e);
    return FracPoly(std::move(top), den_ * Monomial(v));
}

Rational FracPoly::eval(const Point& pt) const {
    Rational d = Poly::term(den_, 1).eval(pt);
    if (d == 0) throw RangeError("denominator " + den_.to_string() + " vanishes at point");
    return num_.eval(pt) / d;
}

std::vector<VarId> FracPoly::vars() const {
    std::set<VarId> s;
    for (auto& v : num_.vars()) s.insert(v);
    for (auto& [v, e] : den_.entries()) s.insert(v);
    return {s.begin(), s.end()};
}

std::string FracPoly::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ------------------------------------------------------------ substitution

FracPoly substitute(const Poly& p, const Substitution& s) {
    FracPoly out;
    for (auto& [m, c] : p.terms()) {
        FracPoly term{Poly(c)};
        std::vector<Monomial::Entry> kept;
        for (auto& [v, e] : m.entries()) {
            auto it = s.find(v);
            if (it == s.end())
                kept.emplace_back(v, e);
            else
                term = term * it->second.pow(e);
        }
        out += term * FracPoly(Poly::term(Monomial::from_entries(std::move(kept)), 1));
    }
    return out;
}

FracPoly substitute(const FracPoly& f, const Substitution& s) {
    FracPoly top = substitute(f.num(), s);
    FracPoly bottom = substitute(Poly::term(f.den(), 1), s);
    return top * bottom.inverse();
}

// --------------------------------------------------------------- weights

int var_weight(const VarId& v) {
    switch (v.kind()) {
        case VarKind::Z:
        case VarKind::W: return 1;
        case VarKind::Jet:
        case VarKind::LogWJet:
        case VarKind::WJet: return v.p() + 1;
        case VarKind::Param: return 0;
        case VarKind::GeoJet:
        case VarKind::TJet: throw UnsupportedVariable(v.name() + " has no pole weight");
    }
    return 0;
}

int pole_order(const Monomial& m) {
    int s = 0;
    for (auto& [v, e] : m.entries()) s += e * var_weight(v);
    return s;
}

int pole_order(const Poly& p) {
    bool first = true;
    int best = 0;
    for (auto& [m, c] : p.terms()) {
        int w = pole_order(m);
        if (first || w > best) best = w;
        first = false;
    }
    return best;
}

int pole_order(const FracPoly& f) {
    if (f.is_zero()) return 0;
    return pole_order(f.num()) - pole_order(f.den());
}

int a_degree(const Poly& p) {
    int best = 0;
    for (auto& [m, c] : p.terms()) {
        int d = 0;
        for (auto& [v, e] : m.entries())
            if (v.kind() == VarKind::Param) d += e;
        best = std::max(best, d);
    }
    return best;
}

int a_degree(const FracPoly& f) { return a_degree(f.num()); }

}  // namespace jetframe
