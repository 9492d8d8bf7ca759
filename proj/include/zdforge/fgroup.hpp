#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdforge/f2linear.hpp"
#include "zdforge/rational.hpp"

namespace zdforge {

/// A finite group given by its multiplication table. Group axioms are
/// verified on construction (associativity in full up to order 128, on a
/// deterministic sample above that).
class FiniteGroupTable {
public:
    FiniteGroupTable(std::vector<std::vector<int>> table, std::string name = "")
        : mul_(std::move(table)), name_(std::move(name)) {
        const int h = static_cast<int>(mul_.size());
        if (h == 0) throw std::invalid_argument("FiniteGroupTable: empty table");
        for (const auto& row : mul_) {
            if (static_cast<int>(row.size()) != h)
                throw std::invalid_argument("FiniteGroupTable: ragged table");
            for (int v : row)
                if (v < 0 || v >= h) throw std::invalid_argument("FiniteGroupTable: entry out of range");
        }
        // identity
        identity_ = -1;
        for (int e = 0; e < h; ++e) {
            bool ok = true;
            for (int g = 0; g < h && ok; ++g) ok = mul_[e][g] == g && mul_[g][e] == g;
            if (ok) { identity_ = e; break; }
        }
        if (identity_ < 0) throw std::invalid_argument("FiniteGroupTable: no identity");
        // inverses
        inv_.assign(h, -1);
        for (int g = 0; g < h; ++g) {
            for (int x = 0; x < h; ++x)
                if (mul_[g][x] == identity_ && mul_[x][g] == identity_) { inv_[g] = x; break; }
            if (inv_[g] < 0) throw std::invalid_argument("FiniteGroupTable: missing inverse");
        }
        // associativity
        if (h <= 128) {
            for (int a = 0; a < h; ++a)
                for (int b = 0; b < h; ++b)
                    for (int c = 0; c < h; ++c)
                        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                            throw std::invalid_argument("FiniteGroupTable: not associative");
        } else {
            uint64_t s = 0x9e3779b97f4a7c15ULL;
            for (int trial = 0; trial < 200000; ++trial) {
                s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                int a = static_cast<int>((s >> 33) % h);
                int b = static_cast<int>((s >> 17) % h);
                int c = static_cast<int>(s % h);
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw std::invalid_argument("FiniteGroupTable: not associative");
            }
        }
    }

    int order() const { return static_cast<int>(mul_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return mul_.at(a).at(b); }
    int inv(int a) const { return inv_.at(a); }
    const std::string& name() const { return name_; }

    static FiniteGroupTable cyclic(int n) {
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        return FiniteGroupTable(std::move(t), "Z" + std::to_string(n));
    }

private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int identity_ = 0;
    std::string name_;
};

/// A rational combination of elements of a FiniteGroupTable, by index.
using FiniteGroupRingElement = std::map<int, Rat>;

/// The state group H(n) = Z2^n x| GL(n, F2) with (v, A)(w, B) = (v + Aw, AB),
/// materialized as a table. Element index = gl_index * 2^n + vector.
/// Feasible only while 2^n |GL(n,2)| stays small (n <= 3 in practice).
struct SemidirectF2Group {
    int n;
    std::vector<F2Matrix> gl;            // fixed enumeration of GL(n,2)
    std::map<F2Matrix, int> gl_index;
    FiniteGroupTable table;

    int index_of(F2Vec v, const F2Matrix& a) const {
        auto it = gl_index.find(a);
        if (it == gl_index.end()) throw std::invalid_argument("SemidirectF2Group: matrix not in GL list");
        return it->second * (1 << n) + static_cast<int>(v);
    }
    F2Vec vec_of(int idx) const { return static_cast<F2Vec>(idx & ((1 << n) - 1)); }
    const F2Matrix& mat_of(int idx) const { return gl.at(idx >> n); }
};

inline SemidirectF2Group make_state_group(int n) {
    std::vector<F2Matrix> gl = enumerate_gl(n);
    const int vn = 1 << n;
    const int h = vn * static_cast<int>(gl.size());
    if (h > (1 << 12)) throw std::domain_error("make_state_group: order exceeds materialization guard");
    std::map<F2Matrix, int> idx;
    for (size_t i = 0; i < gl.size(); ++i) idx[gl[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> t(h, std::vector<int>(h));
    for (size_t ai = 0; ai < gl.size(); ++ai)
        for (int v = 0; v < vn; ++v)
            for (size_t bi = 0; bi < gl.size(); ++bi)
                for (int w = 0; w < vn; ++w) {
                    F2Vec rv = static_cast<F2Vec>(v) ^ gl[ai].apply(static_cast<F2Vec>(w));
                    const F2Matrix rm = gl[ai] * gl[bi];
                    int ri = idx.at(rm) * vn + static_cast<int>(rv);
                    t[ai * vn + v][bi * vn + w] = ri;
                }
    FiniteGroupTable table(std::move(t), "H" + std::to_string(n));
    return SemidirectF2Group{n, std::move(gl), std::move(idx), std::move(table)};
}

}  // namespace zdforge
