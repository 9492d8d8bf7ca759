#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zdforge {

/// Vectors in F_2^n as bitmasks (component i = bit i), n <= 31.
using F2Vec = uint32_t;

inline int parity(uint32_t x) { return std::popcount(x) & 1; }

/// Row-major n x n matrix over F_2; row i is the bitmask of entries (i, *).
struct F2Matrix {
    int n = 0;
    std::vector<F2Vec> rows;

    static F2Matrix identity(int n) {
        F2Matrix m{n, std::vector<F2Vec>(n, 0)};
        for (int i = 0; i < n; ++i) m.rows[i] = F2Vec(1) << i;
        return m;
    }

    F2Vec apply(F2Vec x) const {
        F2Vec y = 0;
        for (int i = 0; i < n; ++i)
            if (parity(rows[i] & x)) y |= F2Vec(1) << i;
        return y;
    }

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
        if (a.n != b.n) throw std::invalid_argument("F2Matrix: size mismatch");
        F2Matrix c{a.n, std::vector<F2Vec>(a.n, 0)};
        // c_{ik} = sum_j a_{ij} b_{jk}: row i of c = xor of b-rows selected by a's row i
        for (int i = 0; i < a.n; ++i) {
            F2Vec r = 0;
            uint32_t sel = a.rows[i];
            while (sel) {
                int j = std::countr_zero(sel);
                sel &= sel - 1;
                r ^= b.rows[j];
            }
            c.rows[i] = r;
        }
        return c;
    }

    F2Matrix transpose() const {
        F2Matrix t{n, std::vector<F2Vec>(n, 0)};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((rows[i] >> j) & 1) t.rows[j] |= F2Vec(1) << i;
        return t;
    }

    bool invertible() const {
        std::vector<F2Vec> work = rows;
        int rank = 0;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = rank; r < n; ++r)
                if ((work[r] >> col) & 1) { piv = r; break; }
            if (piv < 0) return false;
            std::swap(work[rank], work[piv]);
            for (int r = 0; r < n; ++r)
                if (r != rank && ((work[r] >> col) & 1)) work[r] ^= work[rank];
            ++rank;
        }
        return rank == n;
    }

    F2Matrix inverse() const {
        std::vector<F2Vec> work = rows;
        F2Matrix inv = identity(n);
        int rank = 0;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = rank; r < n; ++r)
                if ((work[r] >> col) & 1) { piv = r; break; }
            if (piv < 0) throw std::domain_error("F2Matrix::inverse: singular");
            std::swap(work[rank], work[piv]);
            std::swap(inv.rows[rank], inv.rows[piv]);
            for (int r = 0; r < n; ++r)
                if (r != rank && ((work[r] >> col) & 1)) {
                    work[r] ^= work[rank];
                    inv.rows[r] ^= inv.rows[rank];
                }
            ++rank;
        }
        return inv;
    }

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
    friend bool operator<(const F2Matrix& a, const F2Matrix& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.rows < b.rows;
    }
};

/// The transvection x |-> x + phi(x)(sigma+tau) with phi(sigma) = 1 and
/// phi(sigma+tau) = 0; sends sigma to tau and is an involution. Requires
/// sigma, tau nonzero and distinct (then sigma and sigma+tau are
/// independent, so phi exists).
inline F2Matrix transvection(int n, F2Vec sigma, F2Vec tau) {
    if (sigma == tau) return F2Matrix::identity(n);
    if (sigma == 0 || tau == 0) throw std::invalid_argument("transvection: states must be nonzero");
    const F2Vec w = sigma ^ tau;
    F2Vec phi = 0;
    // lowest j with sigma_j = 1, w_j = 0; else support(sigma) subseteq support(w)
    uint32_t cand = sigma & ~w;
    if (cand) {
        phi = F2Vec(1) << std::countr_zero(cand);
    } else {
        int j = std::countr_zero(static_cast<uint32_t>(sigma));
        uint32_t extra = w & ~sigma;
        if (!extra) throw std::logic_error("transvection: sigma == sigma+tau");
        int k = std::countr_zero(extra);
        phi = (F2Vec(1) << j) | (F2Vec(1) << k);
    }
    F2Matrix m = F2Matrix::identity(n);
    for (int i = 0; i < n; ++i)
        if ((w >> i) & 1) m.rows[i] ^= phi;
    return m;
}

/// All invertible n x n matrices over F_2, in a fixed deterministic order.
/// Feasible for n <= 4 (|GL(4,2)| = 20160).
inline std::vector<F2Matrix> enumerate_gl(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("enumerate_gl: n out of range");
    std::vector<F2Matrix> out;
    const uint64_t total = uint64_t(1) << (n * n);
    for (uint64_t code = 0; code < total; ++code) {
        F2Matrix m{n, std::vector<F2Vec>(n, 0)};
        for (int i = 0; i < n; ++i)
            m.rows[i] = static_cast<F2Vec>((code >> (i * n)) & ((1u << n) - 1));
        if (m.invertible()) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace zdforge
