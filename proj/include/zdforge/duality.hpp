#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zdforge/fgroup.hpp"
#include "zdforge/ring.hpp"

namespace zdforge {

/// A cylinder subset of the lamp configuration space {0,1}^Z: finitely many
/// positions pinned to bits. The empty map is the full space.
struct BitCylinder {
    std::map<int64_t, int> constraints;  // position -> bit

    static BitCylinder full() { return {}; }
    BitCylinder& pin(int64_t pos, int bit) {
        auto [it, fresh] = constraints.emplace(pos, bit);
        if (!fresh && it->second != bit)
            throw std::invalid_argument("BitCylinder: conflicting constraint");
        return *this;
    }
};

/// Fourier transform of the cylinder's characteristic function: the product
/// over pinned positions of (1 + (-1)^bit a_pos)/2. An idempotent supported
/// in the lamp subgroup with trace 2^-(number of constraints).
inline RingElement cylinder_to_ring(const BitCylinder& c, const GroupDescriptor& G = {1, 0},
                                    int factor = 0) {
    RingElement out = RingElement::one(G);
    for (const auto& [pos, bit] : c.constraints) {
        RingElement f = RingElement::one(G);
        f.add_term(gen_lamp(G, factor, pos), bit ? Rat(-1) : Rat(1));
        out = out * (f * Rat(1, 2));
    }
    return out;
}

/// chi_j of the matrix-unit construction: the cylinder [0 1^{j-1} 1_ 1^{n-j} 0]
/// with the underlined cell at position 0 (so positions -j and n-j+1 carry 0,
/// everything between carries 1).
inline RingElement matrix_unit_chi(int n, int j, const GroupDescriptor& G = {1, 0}, int factor = 0) {
    if (j < 1 || j > n) throw std::out_of_range("matrix_unit_chi: index out of range");
    BitCylinder c;
    c.pin(-j, 0);
    for (int p = -j + 1; p <= n - j; ++p) c.pin(p, 1);
    c.pin(n - j + 1, 0);
    return cylinder_to_ring(c, G, factor);
}

/// E_ij = t^{i-j} chi_j. These satisfy E_kl E_ij = delta_i^l E_kj, embedding
/// M_n(Q) into the group ring of the lamplighter factor.
inline RingElement matrix_unit(int n, int i, int j, const GroupDescriptor& G = {1, 0}, int factor = 0) {
    if (i < 1 || i > n) throw std::out_of_range("matrix_unit: index out of range");
    return RingElement::monomial(G, gen_t(G, factor, i - j)) * matrix_unit_chi(n, j, G, factor);
}

/// Dense rational matrix, row-major.
struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rat(0)) {}
    Rat& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("RatMatrix: size mismatch");
        RatMatrix z(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (x.at(i, k) == 0) continue;
                for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return z;
    }

    Rat trace() const {
        Rat s(0);
        for (int i = 0; i < rows && i < cols; ++i) s += at(i, i);
        return s;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

/// i_n: M_n(Q) -> Q[Z2 wr Z], M |-> sum m_ij E_ij. A ring homomorphism on
/// the matrix algebra; satisfies tr(M) = 2^{n+2} tr_vN(i_n(M)).
inline RingElement embed_matrix(int n, const RatMatrix& m, const GroupDescriptor& G = {1, 0},
                                int factor = 0) {
    if (m.rows != n || m.cols != n) throw std::invalid_argument("embed_matrix: shape mismatch");
    RingElement out(G);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Rat& c = m.at(i - 1, j - 1);
            if (c == 0) continue;
            out += matrix_unit(n, i, j, G, factor) * c;
        }
    return out;
}

/// Left regular representation of a finite group, extended linearly:
/// the permutation matrix of g has a 1 in row g*j, column j. The normalized
/// trace of the image equals the identity coefficient of x.
inline RatMatrix regular_representation(const FiniteGroupTable& H, const FiniteGroupRingElement& x) {
    const int h = H.order();
    RatMatrix m(h, h);
    for (const auto& [g, c] : x) {
        if (c == 0) continue;
        for (int j = 0; j < h; ++j) m.at(H.mul(g, j), j) += c;
    }
    return m;
}

/// Trace scale of the composite Q[H] -> M_h(Q) -> Q[Z2 wr Z]:
/// tr_vN(image(x)) = c(H) * (identity coefficient of x).
inline Rat finite_group_trace_scale(const FiniteGroupTable& H) {
    const int h = H.order();
    Rat scale(h);
    scale /= pow_int(Int(2), static_cast<unsigned long>(h + 2));
    return scale;
}

inline RingElement embed_finite_group_ring(const FiniteGroupTable& H, const FiniteGroupRingElement& x,
                                           const GroupDescriptor& G = {1, 0}, int factor = 0) {
    return embed_matrix(H.order(), regular_representation(H, x), G, factor);
}

/// An element of Z2^m wr Z: lamps carry nonzero vectors of F_2^m.
struct VecWreathElement {
    std::vector<std::pair<int64_t, uint32_t>> lamps;  // (position, value), positions increasing
    int64_t shift = 0;
};

/// The algorithmic isomorphism of Z2^m wr Z onto the subgroup of Z2 wr Z of
/// shifts divisible by m: lamp (k, v) spreads to bit positions k*m + b for
/// the set bits b of v; the shift scales by m.
inline GroupElement block_embed(int m, const VecWreathElement& g, const GroupDescriptor& G = {1, 0},
                                int factor = 0) {
    if (m < 1) throw std::invalid_argument("block_embed: m must be positive");
    GroupElement out = group_identity(G);
    auto& f = out.factors.at(factor);
    for (const auto& [pos, val] : g.lamps) {
        if (val == 0 || val >= (uint32_t(1) << m))
            throw std::invalid_argument("block_embed: lamp value out of F_2^m");
        for (int b = 0; b < m; ++b)
            if ((val >> b) & 1) f.lamps.push_back(pos * m + b);
    }
    std::sort(f.lamps.begin(), f.lamps.end());
    for (size_t i = 1; i < f.lamps.size(); ++i)
        if (f.lamps[i - 1] == f.lamps[i]) throw std::invalid_argument("block_embed: duplicate lamp");
    f.shift = g.shift * m;
    return out;
}

/// Multiplication in Z2^m wr Z, for checking block_embed is a homomorphism.
inline VecWreathElement vec_wreath_mul(const VecWreathElement& a, const VecWreathElement& b) {
    std::map<int64_t, uint32_t> acc;
    for (const auto& [p, v] : a.lamps) acc[p] ^= v;
    for (const auto& [p, v] : b.lamps) acc[p + a.shift] ^= v;
    VecWreathElement r;
    for (const auto& [p, v] : acc)
        if (v) r.lamps.emplace_back(p, v);
    r.shift = a.shift + b.shift;
    return r;
}

/// One stage of an embedding chain, with its declared trace scale.
struct EmbeddingDescriptor {
    enum class Kind { MatrixUnit, BlockLamp, RegularRep, Tensor };
    Kind kind;
    int n = 0;       // matrix size / state exponent
    int m = 0;       // lamp block width
    int factor = 0;  // target lamplighter factor
    Rat trace_scale = 1;

    std::string kind_str() const {
        switch (kind) {
            case Kind::MatrixUnit: return "matrix-unit";
            case Kind::BlockLamp: return "block-lamp";
            case Kind::RegularRep: return "regular-rep";
            case Kind::Tensor: return "tensor";
        }
        return "?";
    }
};

}  // namespace zdforge
