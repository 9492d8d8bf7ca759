#include "doctest.h"

#include "zdforge/duality.hpp"
#include "zdforge/f2linear.hpp"
#include "zdforge/fgroup.hpp"

#include "test_helpers.hpp"

using namespace zdforge;

namespace {
const GroupDescriptor L1{1, 0};

RatMatrix random_rat_matrix(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rat(num(rng), den(rng));
    return m;
}
}  // namespace

TEST_CASE("F2 transvections send sigma to tau and square to identity") {
    for (int n = 2; n <= 5; ++n) {
        for (F2Vec s = 1; s < (F2Vec(1) << n); ++s)
            for (F2Vec t = 1; t < (F2Vec(1) << n); ++t) {
                F2Matrix g = transvection(n, s, t);
                CHECK(g.apply(s) == t);
                CHECK(g * g == F2Matrix::identity(n));
                CHECK(g.invertible());
            }
    }
}

TEST_CASE("GL enumeration sizes") {
    CHECK(enumerate_gl(1).size() == 1);
    CHECK(enumerate_gl(2).size() == 6);
    CHECK(enumerate_gl(3).size() == 168);
}

TEST_CASE("state group H(2) has order 24") {
    SemidirectF2Group H = make_state_group(2);
    CHECK(H.table.order() == 24);
    CHECK(H.table.identity() == H.index_of(0, F2Matrix::identity(2)));
}

TEST_CASE("cylinder_to_ring basics") {
    CHECK(cylinder_to_ring(BitCylinder::full()) == RingElement::one(L1));

    RingElement p = cylinder_to_ring(BitCylinder{}.pin(0, 0));
    RingElement expect = (RingElement::one(L1) + RingElement::monomial(L1, gen_lamp(L1))) * Rat(1, 2);
    CHECK(p == expect);
    CHECK(p * p == p);

    // [0 1_ 0] : positions -1 and 1 pinned to 0, position 0 pinned to 1
    RingElement q = cylinder_to_ring(BitCylinder{}.pin(-1, 0).pin(0, 1).pin(1, 0));
    CHECK(q * q == q);
    CHECK(q.trace_vn() == Rat(1, 8));
    CHECK(q == matrix_unit_chi(1, 1));
}

TEST_CASE("cylinder products: refinement, disjointness, partition of unity") {
    std::mt19937 rng(314);
    std::uniform_int_distribution<int> pos(-2, 2), bit(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        BitCylinder c1, c2;
        for (int i = 0; i < 2; ++i) c1.constraints[pos(rng)] = bit(rng);
        for (int i = 0; i < 2; ++i) c2.constraints[pos(rng)] = bit(rng);
        bool conflict = false;
        BitCylinder join = c1;
        for (const auto& [p, b] : c2.constraints) {
            auto it = join.constraints.find(p);
            if (it != join.constraints.end() && it->second != b) conflict = true;
            else join.constraints[p] = b;
        }
        RingElement prod = cylinder_to_ring(c1) * cylinder_to_ring(c2);
        if (conflict) CHECK(prod.is_zero());
        else CHECK(prod == cylinder_to_ring(join));
    }

    // partition of unity over all assignments of a fixed position set
    const std::vector<int64_t> positions{-1, 0, 3};
    RingElement sum(L1);
    for (int mask = 0; mask < 8; ++mask) {
        BitCylinder c;
        for (size_t i = 0; i < positions.size(); ++i) c.pin(positions[i], (mask >> i) & 1);
        sum += cylinder_to_ring(c);
    }
    CHECK(sum == RingElement::one(L1));
}

TEST_CASE("matrix unit relations") {
    CHECK(matrix_unit(1, 1, 1) * matrix_unit(1, 1, 1) == matrix_unit(1, 1, 1));
    CHECK(matrix_unit(2, 1, 2) * matrix_unit(2, 2, 1) == matrix_unit(2, 1, 1));
    CHECK((matrix_unit(2, 1, 2) * matrix_unit(2, 1, 1)).is_zero());

    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        RingElement prod = matrix_unit(n, k, l) * matrix_unit(n, i, j);
                        if (i == l) CHECK(prod == matrix_unit(n, k, j));
                        else CHECK(prod.is_zero());
                    }
}

TEST_CASE("chi_j trace is 2^-(n+2)") {
    for (int n = 1; n <= 4; ++n)
        for (int j = 1; j <= n; ++j) {
            Rat expect(1);
            expect /= Rat(pow_int(Int(2), n + 2));
            CHECK(matrix_unit_chi(n, j).trace_vn() == expect);
        }
}

TEST_CASE("embed_matrix is a trace-scaled ring homomorphism") {
    RingElement id2 = embed_matrix(2, RatMatrix::identity(2));
    CHECK(id2 == matrix_unit_chi(2, 1) + matrix_unit_chi(2, 2));
    CHECK(id2 * id2 == id2);
    CHECK(id2.trace_vn() == Rat(1, 8));

    CHECK(embed_matrix(2, RatMatrix(2, 2)).is_zero());

    std::mt19937 rng(2718);
    for (int n = 1; n <= 3; ++n) {
        Rat scale(pow_int(Int(2), n + 2));
        for (int trial = 0; trial < 8; ++trial) {
            RatMatrix M = random_rat_matrix(rng, n);
            RatMatrix N = random_rat_matrix(rng, n);
            CHECK(embed_matrix(n, M) * embed_matrix(n, N) == embed_matrix(n, M * N));
            CHECK(M.trace() == scale * embed_matrix(n, M).trace_vn());
        }
    }
}

TEST_CASE("regular representation") {
    FiniteGroupTable Z2 = FiniteGroupTable::cyclic(2);
    FiniteGroupRingElement x{{0, Rat(1)}, {1, Rat(1)}};  // 1 + s
    RatMatrix m = regular_representation(Z2, x);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(m.at(i, j) == 1);

    CHECK(regular_representation(Z2, {{0, Rat(1)}}) == RatMatrix::identity(2));

    std::mt19937 rng(1234);
    FiniteGroupTable Z3 = FiniteGroupTable::cyclic(3);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        FiniteGroupRingElement y;
        for (int g = 0; g < 3; ++g) y[g] = rat(num(rng), den(rng));
        RatMatrix my = regular_representation(Z3, y);
        CHECK(my.trace() == Rat(3) * y[0]);
    }
}

TEST_CASE("embed_finite_group_ring trace scale and multiplicativity") {
    FiniteGroupTable Z2 = FiniteGroupTable::cyclic(2);
    CHECK(finite_group_trace_scale(Z2) == Rat(1, 8));
    CHECK(embed_finite_group_ring(Z2, {{0, Rat(1)}}).trace_vn() == Rat(1, 8));
    CHECK(embed_finite_group_ring(Z2, {{1, Rat(1)}}).trace_vn() == 0);

    std::mt19937 rng(555);
    FiniteGroupTable Z3 = FiniteGroupTable::cyclic(3);
    std::uniform_int_distribution<int> num(-2, 2), den(1, 3);
    auto mul_in_z3 = [&](const FiniteGroupRingElement& x, const FiniteGroupRingElement& y) {
        FiniteGroupRingElement z;
        for (const auto& [g, c] : x)
            for (const auto& [h, d] : y) z[Z3.mul(g, h)] += c * d;
        return z;
    };
    for (int trial = 0; trial < 10; ++trial) {
        FiniteGroupRingElement x, y;
        for (int g = 0; g < 3; ++g) {
            x[g] = rat(num(rng), den(rng));
            y[g] = rat(num(rng), den(rng));
        }
        CHECK(embed_finite_group_ring(Z3, x) * embed_finite_group_ring(Z3, y) ==
              embed_finite_group_ring(Z3, mul_in_z3(x, y)));
        CHECK(embed_finite_group_ring(Z3, x).trace_vn() == finite_group_trace_scale(Z3) * x[0]);
    }
}

TEST_CASE("block_embed") {
    VecWreathElement lamp_val2{{{0, 2}}, 0};  // vector (0,1) at position 0
    GroupElement img = block_embed(2, lamp_val2);
    CHECK(img.factors[0].lamps == std::vector<int64_t>{1});
    CHECK(img.factors[0].shift == 0);

    VecWreathElement shift{{}, 1};
    CHECK(block_embed(2, shift) == gen_t(L1, 0, 2));

    std::mt19937 rng(808);
    std::uniform_int_distribution<int> npos(0, 2);
    std::uniform_int_distribution<int64_t> pos(-3, 3);
    const int m = 3;
    std::uniform_int_distribution<uint32_t> val(1, (1u << m) - 1);
    std::uniform_int_distribution<int64_t> sh(-2, 2);
    auto rand_vw = [&] {
        std::map<int64_t, uint32_t> lamps;
        int k = npos(rng);
        for (int i = 0; i < k; ++i) lamps[pos(rng)] = val(rng);
        VecWreathElement v;
        for (const auto& [p, x] : lamps) v.lamps.emplace_back(p, x);
        v.shift = sh(rng);
        return v;
    };
    for (int trial = 0; trial < 100; ++trial) {
        VecWreathElement a = rand_vw(), b = rand_vw();
        CHECK(block_embed(m, vec_wreath_mul(a, b)) ==
              group_mul(L1, block_embed(m, a), block_embed(m, b)));
    }
}
