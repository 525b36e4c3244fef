#ifndef JETFRAME_VARID_HPP
#define JETFRAME_VARID_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace jetframe {

using MultiIndex = std::vector<int>;

int length(const MultiIndex& a);
MultiIndex unit(int n, int i, int times = 1);
MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
bool leq(const MultiIndex& a, const MultiIndex& b);
std::string to_string(const MultiIndex& a);

/// All multi-indices of length n with |a| <= d, graded then lexicographic.
std::vector<MultiIndex> indices_upto(int n, int d);
/// All multi-indices of length n with |a| == d, lexicographic.
std::vector<MultiIndex> indices_of(int n, int d);
/// All g with 0 <= g <= a componentwise, lexicographic.
std::vector<MultiIndex> indices_below(const MultiIndex& a);

enum class VarKind : std::uint8_t {
    Z = 0,
    Jet = 1,
    GeoJet = 2,
    TJet = 3,
    Param = 4,
    W = 5,
    LogWJet = 6,
    WJet = 7,
};

const char* kind_name(VarKind k);

/// One symbol of the ambient jet space. The byte layout doubles as the
/// canonical order: kind first, then indices lexicographically.
class VarId {
public:
    static constexpr int max_coords = 9;

    VarId() = default;

    static VarId z(int i);
    static VarId jet(int i, int p);
    static VarId geo(int i, int p);
    static VarId t(int p);
    static VarId param(int j, const MultiIndex& alpha);
    static VarId w(int j);
    static VarId logw(int j, int p);
    static VarId wjet(int j, int p);

    /// z_i^{(p)} with the convention that order 0 is z_i itself.
    static VarId zjet(int i, int p) { return p == 0 ? z(i) : jet(i, p); }
    /// (log w_j)^{(p)} for p >= 1.
    static VarId ljet(int j, int p) { return logw(j, p); }

    VarKind kind() const { return static_cast<VarKind>(b_[0]); }
    /// coordinate index for Z/Jet/GeoJet
    int i() const { return b_[1]; }
    /// component index for Param/W/LogWJet/WJet
    int component() const { return b_[1]; }
    /// jet order; 0 for Z, W, Param
    int p() const;
    MultiIndex alpha() const;

    bool is_jet_like() const;

    std::string name() const;

    auto operator<=>(const VarId&) const = default;
    bool operator==(const VarId&) const = default;

    std::size_t hash() const;

private:
    std::array<std::uint8_t, 12> b_{};
};

}  // namespace jetframe

template <>
struct std::hash<jetframe::VarId> {
    std::size_t operator()(const jetframe::VarId& v) const noexcept { return v.hash(); }
};

#endif
