#include <jetframe/errors.hpp>
#include <jetframe/rational.hpp>
#include <jetframe/varid.hpp>

#include <functional>
#include <numeric>

namespace jetframe {

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int length(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

MultiIndex unit(int n, int i, int times) {
    MultiIndex r(n, 0);
    r.at(i - 1) = times;
    return r;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
    return r;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
    return r;
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b.at(i)) return false;
    return true;
}

std::string to_string(const MultiIndex& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

std::vector<MultiIndex> indices_of(int n, int d) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(0, d);
    return out;
}

std::vector<MultiIndex> indices_upto(int n, int d) {
    std::vector<MultiIndex> out;
    for (int e = 0; e <= d; ++e) {
        auto layer = indices_of(n, e);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<MultiIndex> indices_below(const MultiIndex& a) {
    std::vector<MultiIndex> out;
    MultiIndex cur(a.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == a.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= a[pos]; ++v) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

const char* kind_name(VarKind k) {
    switch (k) {
        case VarKind::Z: return "Z";
        case VarKind::Jet: return "Jet";
        case VarKind::GeoJet: return "GeoJet";
        case VarKind::TJet: return "TJet";
        case VarKind::Param: return "Param";
        case VarKind::W: return "W";
        case VarKind::LogWJet: return "LogWJet";
        case VarKind::WJet: return "WJet";
    }
    return "?";
}

namespace {

std::uint8_t byte(int v, const char* what) {
    if (v < 0 || v > 255) throw RangeError(std::string(what) + " index out of range");
    return static_cast<std::uint8_t>(v);
}

}  // namespace

VarId VarId::z(int i) {
    VarId v;
    v.b_[0] = 0;
    v.b_[1] = byte(i, "z");
    return v;
}

VarId VarId::jet(int i, int p) {
    if (p < 1) throw RangeError("jet order must be >= 1");
    VarId v;
    v.b_[0] = 1;
    v.b_[1] = byte(i, "jet");
    v.b_[2] = byte(p, "jet");
    return v;
}

VarId VarId::geo(int i, int p) {
    VarId v;
    v.b_[0] = 2;
    v.b_[1] = byte(i, "geo");
    v.b_[2] = byte(p, "geo");
    return v;
}

VarId VarId::t(int p) {
    VarId v;
    v.b_[0] = 3;
    v.b_[1] = byte(p, "t");
    return v;
}

VarId VarId::param(int j, const MultiIndex& alpha) {
    if (alpha.size() > static_cast<std::size_t>(max_coords))
        throw RangeError("too many coordinates for a parameter index");
    VarId v;
    v.b_[0] = 4;
    v.b_[1] = byte(j, "param");
    v.b_[2] = byte(static_cast<int>(alpha.size()), "param");
    for (std::size_t i = 0; i < alpha.size(); ++i) v.b_[3 + i] = byte(alpha[i], "param");
    return v;
}

VarId VarId::w(int j) {
    VarId v;
    v.b_[0] = 5;
    v.b_[1] = byte(j, "w");
    return v;
}

VarId VarId::logw(int j, int p) {
    VarId v;
    v.b_[0] = 6;
    v.b_[1] = byte(j, "logw");
    v.b_[2] = byte(p, "logw");
    return v;
}

VarId VarId::wjet(int j, int p) {
    VarId v;
    v.b_[0] = 7;
    v.b_[1] = byte(j, "wjet");
    v.b_[2] = byte(p, "wjet");
    return v;
}

int VarId::p() const {
    switch (kind()) {
        case VarKind::Jet:
        case VarKind::GeoJet:
        case VarKind::LogWJet:
        case VarKind::WJet: return b_[2];
        case VarKind::TJet: return b_[1];
        default: return 0;
    }
}

MultiIndex VarId::alpha() const {
    if (kind() != VarKind::Param) return {};
    MultiIndex a(b_[2]);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = b_[3 + i];
    return a;
}

bool VarId::is_jet_like() const {
    switch (kind()) {
        case VarKind::Jet:
        case VarKind::GeoJet:
        case VarKind::TJet:
        case VarKind::LogWJet:
        case VarKind::WJet: return true;
        default: return false;
    }
}

std::string VarId::name() const {
    auto s = [](int x) { return std::to_string(x); };
    switch (kind()) {
        case VarKind::Z: return "z" + s(i());
        case VarKind::Jet: return "z" + s(i()) + "(" + s(p()) + ")";
        case VarKind::GeoJet: return "z" + s(i()) + "[" + s(p()) + "]";
        case VarKind::TJet: return "t[" + s(p()) + "]";
        case VarKind::Param: {
            std::string r = "a" + s(component()) + "_";
            auto a = alpha();
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (k) r += ".";
                r += s(a[k]);
            }
            return r;
        }
        case VarKind::W: return "w" + s(component());
        case VarKind::LogWJet: return "L" + s(component()) + "(" + s(p()) + ")";
        case VarKind::WJet: return "w" + s(component()) + "[" + s(p()) + "]";
    }
    return "?";
}

std::size_t VarId::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto c : b_) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace jetframe
