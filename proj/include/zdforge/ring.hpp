#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "zdforge/group.hpp"
#include "zdforge/rational.hpp"

namespace zdforge {

/// An element of the rational group ring Q[(Z2 wr Z)^d] (or of a finite
/// quotient's group ring): a finite map from canonical group elements to
/// nonzero rationals, kept in canonical term order.
class RingElement {
public:
    using TermMap = std::map<GroupElement, Rat, CanonicalLess>;

    RingElement() = default;
    explicit RingElement(GroupDescriptor G) : group_(std::move(G)) {}

    static RingElement zero(const GroupDescriptor& G) { return RingElement(G); }
    static RingElement one(const GroupDescriptor& G) {
        RingElement r(G);
        r.add_term(group_identity(G), 1);
        return r;
    }
    static RingElement monomial(const GroupDescriptor& G, const GroupElement& g, const Rat& c = Rat(1)) {
        RingElement r(G);
        r.add_term(g, c);
        return r;
    }

    const GroupDescriptor& group() const { return group_; }
    const TermMap& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rat coefficient(const GroupElement& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Accumulates c at g, dropping the term if the sum vanishes.
    void add_term(const GroupElement& g, Rat c) {
        c.canonicalize();  // GMP comparison requires canonical operands
        if (c == 0) return;
        check_same_d(group_, g);
        auto [it, fresh] = terms_.emplace(g, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const RingElement& x, const RingElement& y) {
        return x.group_ == y.group_ && x.terms_ == y.terms_;
    }

    RingElement& operator+=(const RingElement& o) {
        require_same_group(o);
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        require_same_group(o);
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }
    friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
    friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
    friend RingElement operator-(const RingElement& x) { return x * Rat(-1); }

    friend RingElement operator*(const RingElement& x, Rat c) {
        c.canonicalize();
        RingElement r(x.group_);
        if (c == 0) return r;
        for (const auto& [g, v] : x.terms_) r.terms_.emplace(g, v * c);
        return r;
    }
    friend RingElement operator*(const Rat& c, const RingElement& x) { return x * c; }

    /// Convolution product.
    friend RingElement operator*(const RingElement& x, const RingElement& y) {
        x.require_same_group(y);
        RingElement r(x.group_);
        for (const auto& [g, cg] : x.terms_)
            for (const auto& [h, ch] : y.terms_)
                r.add_term(group_mul(x.group_, g, h), cg * ch);
        return r;
    }

    /// The *-involution: sum c_g g  |->  sum c_g g^{-1}.
    RingElement star() const {
        RingElement r(group_);
        for (const auto& [g, c] : terms_) r.add_term(group_inv(group_, g), c);
        return r;
    }

    /// von Neumann trace: the coefficient of the identity element.
    Rat trace_vn() const { return coefficient(group_identity(group_)); }

    /// Sum of absolute values of the coefficients.
    Rat coeff_abs_sum() const {
        Rat s(0);
        for (const auto& [g, c] : terms_) s += abs(c);
        return s;
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    Int denominator_lcm() const {
        Int l(1);
        for (const auto& [g, c] : terms_) l = lcm(l, c.get_den());
        return l;
    }

    RingElement pow(unsigned long n) const {
        RingElement acc = one(group_);
        RingElement base = *this;
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

private:
    void require_same_group(const RingElement& o) const {
        if (!(group_ == o.group_)) throw std::invalid_argument("ring op: group descriptor mismatch");
    }

    GroupDescriptor group_;
    TermMap terms_;
};

/// Raised by normalize_positive on the zero element; callers decide the
/// zero-divisor convention themselves.
struct TriviallyZeroInput : std::domain_error {
    TriviallyZeroInput() : std::domain_error("normalize_positive: input is the zero element") {}
};

struct NormalizedPositive {
    RingElement P;  // self-adjoint, positive, coefficient-absolute-sum <= 1
    Int C;          // lcm of the denominators of P's coefficients
};

/// Replaces T by P = T*T / s with s the coefficient-absolute-sum of T*T.
/// Dividing by |T*T| (rather than the paper's |T|) guarantees the norm-<=-1
/// hypothesis of the moment bound for every input.
inline NormalizedPositive normalize_positive(const RingElement& T) {
    if (T.is_zero()) throw TriviallyZeroInput{};
    RingElement TT = T.star() * T;
    Rat s = TT.coeff_abs_sum();
    NormalizedPositive out{TT * (Rat(1) / s), Int(1)};
    out.C = out.P.denominator_lcm();
    return out;
}

}  // namespace zdforge
