#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semi2x2/matrix.hpp"
#include "semi2x2/rng.hpp"

using namespace semi2x2;

namespace {

const Ring kZ = Ring::integers();

GenericMatrix random_numeric(const Ring& r, int n, SplitMix64& rng) {
    GenericMatrix m(r, n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.set(i, j, Polynomial::constant(r, rng.range(-5, 5)));
    return m;
}

}  // namespace

TEST_CASE("generic matrices") {
    GenericMatrix x1 = generic_x(kZ, 1);
    CHECK(x1.at(1, 2) == Polynomial::variable(kZ, VariableId::x(1, 2, 1)));
    // entries are pairwise distinct variables
    std::set<std::string> entries;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) entries.insert(x1.at(i, j).str());
    CHECK(entries.size() == 4);

    Polynomial d = determinant(x1);
    Polynomial expected = Polynomial::variable(kZ, VariableId::x(1, 1, 1)) *
                              Polynomial::variable(kZ, VariableId::x(2, 2, 1)) -
                          Polynomial::variable(kZ, VariableId::x(1, 2, 1)) *
                              Polynomial::variable(kZ, VariableId::x(2, 1, 1));
    CHECK(d == expected);

    GenericMatrix t11 = generic_t(kZ, 1, 1);
    CHECK(t11.rows() == 1);
    CHECK(t11.at(1, 1) == Polynomial::variable(kZ, VariableId::t(1, 1, 1)));

    GenericMatrix t22 = generic_t(kZ, 2, 2);
    std::set<std::string> tvars;
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s) {
            tvars.insert(t22.at(r, s).str());
            // every entry carries the slot index
            CHECK(t22.at(r, s).terms().begin()->first.factors()[0].first.slot() == 2);
        }
    CHECK(tvars.size() == 4);
}

TEST_CASE("kronecker product") {
    GenericMatrix a = generic_x(kZ, 1);
    GenericMatrix iq = GenericMatrix::identity(kZ, 3);
    GenericMatrix k = kronecker(a, iq);
    CHECK(k.rows() == 6);
    // block diagonal with copies of a
    for (int b = 0; b < 3; ++b)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) CHECK(k.at(b * 2 + i, b * 2 + j) == a.at(i, j));
    CHECK(k.at(1, 3).is_zero());

    // identity (x) b has blocks b_rs * I
    GenericMatrix b = generic_t(kZ, 1, 2);
    GenericMatrix k2 = kronecker(GenericMatrix::identity(kZ, 2), b);
    CHECK(k2.at(1, 3) == b.at(1, 2));
    CHECK(k2.at(1, 4).is_zero());
    CHECK(k2.at(2, 4) == b.at(1, 2));

    // mixed product law on random numeric matrices
    SplitMix64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        GenericMatrix ma = random_numeric(kZ, 2, rng), mc = random_numeric(kZ, 2, rng);
        GenericMatrix mb = random_numeric(kZ, 2, rng), md = random_numeric(kZ, 2, rng);
        CHECK(kronecker(ma, mb) * kronecker(mc, md) == kronecker(ma * mc, mb * md));
    }
}

TEST_CASE("x_otimes_t") {
    GenericMatrix xt = x_otimes_t(kZ, 1, 1);
    CHECK(xt.rows() == 2);
    CHECK(xt.at(1, 1) == Polynomial::variable(kZ, VariableId::x(1, 1, 1)) *
                             Polynomial::variable(kZ, VariableId::t(1, 1, 1)));

    // every entry is bilinear: degree 1 in X and degree 1 in T
    GenericMatrix big = x_otimes_t(kZ, 3, 2);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (const auto& [mono, c] : big.at(i, j).terms()) {
                CHECK(mono.degree_in_class(VarClass::X) == 1);
                CHECK(mono.degree_in_class(VarClass::T) == 1);
            }

    // det(x (x) t) for m = q = 1 is t^2 det(x)
    Polynomial d = determinant(xt);
    Polynomial t = Polynomial::variable(kZ, VariableId::t(1, 1, 1));
    CHECK(d == t * t * determinant(generic_x(kZ, 1)));
}

TEST_CASE("assemble_block") {
    // the q=2 cyclic layout: [[z1 x1, w1 x3], [w2 x4, z2 x2]]
    BlockSpec spec;
    spec.q = 2;
    spec.placements = {{1, 1, BlockTag::z(1), 1},
                       {2, 2, BlockTag::z(2), 2},
                       {1, 2, BlockTag::w(1), 3},
                       {2, 1, BlockTag::w(2), 4}};
    GenericMatrix b = assemble_block(kZ, spec);
    CHECK(b.at(1, 1) == Polynomial::variable(kZ, VariableId::z(1)) *
                            Polynomial::variable(kZ, VariableId::x(1, 1, 1)));
    CHECK(b.at(1, 3) == Polynomial::variable(kZ, VariableId::w(1)) *
                            Polynomial::variable(kZ, VariableId::x(1, 1, 3)));
    CHECK(b.at(3, 1) == Polynomial::variable(kZ, VariableId::w(2)) *
                            Polynomial::variable(kZ, VariableId::x(1, 1, 4)));
    CHECK(b.at(4, 4) == Polynomial::variable(kZ, VariableId::z(2)) *
                            Polynomial::variable(kZ, VariableId::x(2, 2, 2)));

    // empty placements give the zero matrix
    GenericMatrix zero = assemble_block(kZ, BlockSpec{2, {}});
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(zero.at(i, j).is_zero());

    // diagonal-only spec: determinant is the product of the block determinants
    BlockSpec diag;
    diag.q = 2;
    diag.placements = {{1, 1, BlockTag::none(), 1}, {2, 2, BlockTag::none(), 2}};
    GenericMatrix d = assemble_block(kZ, diag);
    CHECK(determinant(d) == determinant(generic_x(kZ, 1)) * determinant(generic_x(kZ, 2)));

    BlockSpec bad;
    bad.q = 2;
    bad.placements = {{3, 1, BlockTag::none(), 1}};
    CHECK_THROWS_AS(assemble_block(kZ, bad), std::invalid_argument);
}

TEST_CASE("determinant basics") {
    CHECK(determinant(GenericMatrix::identity(kZ, 4)) == Polynomial::constant(kZ, 1));

    GenericMatrix zrow = generic_x(kZ, 1);
    zrow.set(2, 1, Polynomial::zero(kZ));
    zrow.set(2, 2, Polynomial::zero(kZ));
    CHECK(determinant(zrow).is_zero());

    // multiplicativity on random 3x3 integer matrices
    SplitMix64 rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        GenericMatrix a = random_numeric(kZ, 3, rng), b = random_numeric(kZ, 3, rng);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }

    CHECK_THROWS_AS(determinant(GenericMatrix(kZ, 17, 17)), std::invalid_argument);
    CHECK_THROWS_AS(determinant(GenericMatrix(kZ, 2, 3)), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    // fully symbolic matrices up to 5x5 via distinct t variables
    for (int n = 2; n <= 5; ++n) {
        GenericMatrix m(kZ, n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                m.set(i, j, Polynomial::variable(kZ, VariableId::t(i, j, 1)));
        CHECK(determinant(m) == determinant_cofactor(m));
    }
}

TEST_CASE("determinant is alternating") {
    for (int n = 3; n <= 4; ++n) {
        GenericMatrix m(kZ, n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                m.set(i, j, Polynomial::variable(kZ, VariableId::t(i, j, 1)));
        // swapping two rows negates
        GenericMatrix swapped = m;
        for (int j = 1; j <= n; ++j) {
            Polynomial tmp = swapped.at(1, j);
            swapped.set(1, j, swapped.at(2, j));
            swapped.set(2, j, tmp);
        }
        CHECK(determinant(swapped) == -determinant(m));
        // a repeated row kills the determinant
        GenericMatrix repeated = m;
        for (int j = 1; j <= n; ++j) repeated.set(2, j, repeated.at(1, j));
        CHECK(determinant(repeated).is_zero());
    }
}

TEST_CASE("Laplace block identity") {
    // [[A, B], [0, D]] with 2x2 generic blocks: det = det(A) det(D); this is
    // the expansion step the pattern analysis leans on
    GenericMatrix m(kZ, 4, 4);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            m.set(i, j, Polynomial::variable(kZ, VariableId::x(i, j, 1)));          // A
            m.set(i, j + 2, Polynomial::variable(kZ, VariableId::x(i, j, 2)));      // B
            m.set(i + 2, j + 2, Polynomial::variable(kZ, VariableId::x(i, j, 3)));  // D
        }
    CHECK(determinant(m) == determinant(generic_x(kZ, 1)) * determinant(generic_x(kZ, 3)));
}

TEST_CASE("matrix shape and ring guards") {
    GenericMatrix a(kZ, 2, 3), b(kZ, 2, 3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(kronecker(a, b), std::invalid_argument);
    GenericMatrix q2(Ring::rationals(), 2, 2);
    CHECK_THROWS_AS(generic_x(kZ, 1) * q2, std::invalid_argument);
}

#include "semi2x2/json_io.hpp"

TEST_CASE("matrix JSON form") {
    GenericMatrix m = x_otimes_t(kZ, 2, 2);
    auto doc = matrix_to_json(m);
    CHECK(doc.size() == 4);
    CHECK(matrix_from_json(doc, kZ) == m);
}
