#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdforge {

/// Identifies the ambient group: d wreath factors, each either the
/// lamplighter Z2 wr Z (modulus == 0) or the finite quotient
/// Z2 wr (Z/N) (modulus == N >= 2).
struct GroupDescriptor {
    int d = 1;
    int64_t modulus = 0;

    bool finite() const { return modulus != 0; }
    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

    std::string str() const {
        if (finite()) return "L_" + std::to_string(modulus) + "^" + std::to_string(d);
        return "L^" + std::to_string(d);
    }
};

/// One wreath factor in canonical form: lamp positions strictly increasing,
/// shift an integer (reduced to [0, N) in finite quotients). Conventions:
/// the generator t is (no lamps, shift 1), the generator a is (lamp {0},
/// shift 0), and (f,s)(g,u) = (f xor (g + s), s + u) where g + s translates
/// every lamp position of g by s.
struct WreathFactor {
    std::vector<int64_t> lamps;
    int64_t shift = 0;

    friend bool operator==(const WreathFactor&, const WreathFactor&) = default;
};

struct GroupElement {
    std::vector<WreathFactor> factors;

    int d() const { return static_cast<int>(factors.size()); }
    bool is_identity() const {
        for (const auto& f : factors)
            if (f.shift != 0 || !f.lamps.empty()) return false;
        return true;
    }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Canonical term order: lexicographic by the shift vector, then by the lamp
/// sets compared as integer sequences. This is the serialization order.
inline bool canonical_less(const GroupElement& a, const GroupElement& b) {
    const size_t n = std::min(a.factors.size(), b.factors.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.factors[i].shift != b.factors[i].shift)
            return a.factors[i].shift < b.factors[i].shift;
    }
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& x = a.factors[i].lamps;
        const auto& y = b.factors[i].lamps;
        if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
    return false;
}

struct CanonicalLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        return canonical_less(a, b);
    }
};

namespace detail {

inline int64_t mod_reduce(int64_t v, int64_t n) {
    int64_t r = v % n;
    return r < 0 ? r + n : r;
}

/// Symmetric difference of two sorted lamp lists.
inline std::vector<int64_t> lamp_xor(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    std::vector<int64_t> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) out.push_back(a[i++]);
        else if (b[j] < a[i]) out.push_back(b[j++]);
        else { ++i; ++j; }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

/// Translate lamp positions by s, reducing mod N when finite. Reduction can
/// make positions collide; colliding pairs cancel (Z2 coefficients).
inline std::vector<int64_t> lamp_translate(const std::vector<int64_t>& a, int64_t s, int64_t modulus) {
    std::vector<int64_t> out;
    out.reserve(a.size());
    for (int64_t p : a) out.push_back(modulus ? mod_reduce(p + s, modulus) : p + s);
    std::sort(out.begin(), out.end());
    // cancel duplicate pairs
    std::vector<int64_t> res;
    for (size_t i = 0; i < out.size();) {
        size_t j = i;
        while (j < out.size() && out[j] == out[i]) ++j;
        if ((j - i) % 2 == 1) res.push_back(out[i]);
        i = j;
    }
    return res;
}

}  // namespace detail

inline GroupElement group_identity(const GroupDescriptor& G) {
    GroupElement e;
    e.factors.resize(G.d);
    return e;
}

inline void check_same_d(const GroupDescriptor& G, const GroupElement& g) {
    if (g.d() != G.d) throw std::invalid_argument("group element dimension mismatch");
}

inline GroupElement group_mul(const GroupDescriptor& G, const GroupElement& a, const GroupElement& b) {
    if (a.d() != b.d()) throw std::invalid_argument("group_mul: dimension mismatch");
    check_same_d(G, a);
    GroupElement r;
    r.factors.resize(a.d());
    for (int i = 0; i < a.d(); ++i) {
        const auto& f = a.factors[i];
        const auto& g = b.factors[i];
        r.factors[i].lamps = detail::lamp_xor(f.lamps, detail::lamp_translate(g.lamps, f.shift, G.modulus));
        r.factors[i].shift = G.finite() ? detail::mod_reduce(f.shift + g.shift, G.modulus)
                                        : f.shift + g.shift;
    }
    return r;
}

inline GroupElement group_inv(const GroupDescriptor& G, const GroupElement& a) {
    check_same_d(G, a);
    GroupElement r;
    r.factors.resize(a.d());
    for (int i = 0; i < a.d(); ++i) {
        const auto& f = a.factors[i];
        r.factors[i].lamps = detail::lamp_translate(f.lamps, -f.shift, G.modulus);
        r.factors[i].shift = G.finite() ? detail::mod_reduce(-f.shift, G.modulus) : -f.shift;
    }
    return r;
}

/// Generator t of factor `which` (0-based): shift by one, no lamps.
inline GroupElement gen_t(const GroupDescriptor& G, int which = 0, int64_t power = 1) {
    GroupElement g = group_identity(G);
    g.factors.at(which).shift = G.finite() ? detail::mod_reduce(power, G.modulus) : power;
    return g;
}

/// Lamp generator of factor `which` at position pos.
inline GroupElement gen_lamp(const GroupDescriptor& G, int which = 0, int64_t pos = 0) {
    GroupElement g = group_identity(G);
    g.factors.at(which).lamps = {G.finite() ? detail::mod_reduce(pos, G.modulus) : pos};
    return g;
}

/// Reduction homomorphism onto the finite quotient (Z2 wr Z/N)^d: lamp
/// positions and shifts are taken mod N; lamps colliding mod N cancel.
inline GroupElement quotient_map(const GroupDescriptor& target, const GroupElement& g) {
    if (!target.finite()) throw std::invalid_argument("quotient_map: target must be finite");
    if (g.d() != target.d) throw std::invalid_argument("quotient_map: dimension mismatch");
    GroupElement r;
    r.factors.resize(g.d());
    for (int i = 0; i < g.d(); ++i) {
        r.factors[i].lamps = detail::lamp_translate(g.factors[i].lamps, 0, target.modulus);
        r.factors[i].shift = detail::mod_reduce(g.factors[i].shift, target.modulus);
    }
    return r;
}

}  // namespace zdforge
