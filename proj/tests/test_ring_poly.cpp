#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semi2x2/polynomial.hpp"
#include "semi2x2/rng.hpp"

using namespace semi2x2;

namespace {

const Ring kZ = Ring::integers();
const Ring kQ = Ring::rationals();
const Ring kF2 = Ring::prime_field(2);

Polynomial xvar(const Ring& r, int i, int j, int k) {
    return Polynomial::variable(r, VariableId::x(i, j, k));
}

// random polynomial with at most `max_terms` terms in a small variable pool
Polynomial random_poly(const Ring& r, SplitMix64& rng, int max_terms = 8) {
    std::vector<VariableId> pool = {VariableId::x(1, 1, 1), VariableId::x(1, 2, 1), VariableId::x(2, 1, 1),
                                    VariableId::x(2, 2, 1), VariableId::x(1, 1, 2), VariableId::x(2, 2, 2)};
    Polynomial f(r);
    int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<VariableId, unsigned>> factors;
        int nvars = static_cast<int>(rng.below(4));
        for (int v = 0; v < nvars; ++v)
            factors.push_back({pool[rng.below(pool.size())], 1 + static_cast<unsigned>(rng.below(3))});
        long coeff = rng.range(-9, 9);
        f = f + Polynomial::term(Scalar(r, coeff), Monomial::from_factors(std::move(factors)));
    }
    return f;
}

}  // namespace

TEST_CASE("ring construction and primality") {
    CHECK(is_prime_u64(65521));
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(101));
    CHECK_FALSE(is_prime_u64(91));
    CHECK_FALSE(is_prime_u64(1));
    CHECK(is_prime_u64((1ull << 61) - 1));  // Mersenne prime, the largest allowed size
    CHECK_THROWS_AS(Ring::prime_field(91), std::invalid_argument);
    CHECK_THROWS_AS(Ring::prime_field(1ull << 61), std::invalid_argument);
}

TEST_CASE("scalar arithmetic and conversion") {
    Scalar a(kZ, 7), b(kZ, -3);
    CHECK((a * b).str() == "-21");
    CHECK((a + b).str() == "4");
    CHECK_THROWS_AS(a.inverse(), std::invalid_argument);
    CHECK_THROWS_AS(a + Scalar(kQ, 1), std::invalid_argument);

    Scalar q(kQ, mpq_class(3, 4));
    CHECK((q.inverse()).str() == "4/3");
    CHECK(q.convert_to(Ring::prime_field(5)).str() == "2");  // 3 * inv(4) = 3 * 4 = 12 = 2 mod 5

    Scalar f(Ring::prime_field(65521), -1);
    CHECK(f.str() == "65520");
    CHECK((f * f).is_one());
}

TEST_CASE("poly_add identities") {
    SplitMix64 rng(11);
    for (const Ring& r : {kZ, kQ, kF2}) {
        Polynomial f = random_poly(r, rng);
        CHECK(f + Polynomial::zero(r) == f);
        CHECK((f + (-f)).is_zero());
    }
    // over F_2: f + f = 0
    Polynomial f2 = random_poly(kF2, rng);
    CHECK((f2 + f2).is_zero());
    CHECK_THROWS_AS(random_poly(kZ, rng) + random_poly(kQ, rng), std::invalid_argument);
}

TEST_CASE("poly_mul basics") {
    Polynomial one = Polynomial::constant(kZ, 1);
    SplitMix64 rng(12);
    Polynomial f = random_poly(kZ, rng);
    CHECK(f * one == f);

    // (x111 + x221)(x111 - x221) = x111^2 - x221^2
    Polynomial a = xvar(kZ, 1, 1, 1), d = xvar(kZ, 2, 2, 1);
    CHECK((a + d) * (a - d) == a * a - d * d);
}

TEST_CASE("ring axioms on random polynomials") {
    SplitMix64 rng(13);
    for (const Ring& r : {kZ, kQ, kF2}) {
        for (int i = 0; i < 400; ++i) {
            Polynomial f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
            CHECK(f + g == g + f);
            CHECK((f + g) + h == f + (g + h));
            CHECK(f * g == g * f);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
        }
    }
}

TEST_CASE("coeff_extract") {
    // z^2 det(x1) + zw <x1|x2> + w^2 det(x2) -> the zw coefficient is the bracket
    Polynomial z = Polynomial::variable(kZ, VariableId::z(1));
    Polynomial w = Polynomial::variable(kZ, VariableId::w(1));
    Polynomial det1 = xvar(kZ, 1, 1, 1) * xvar(kZ, 2, 2, 1) - xvar(kZ, 1, 2, 1) * xvar(kZ, 2, 1, 1);
    Polynomial det2 = xvar(kZ, 1, 1, 2) * xvar(kZ, 2, 2, 2) - xvar(kZ, 1, 2, 2) * xvar(kZ, 2, 1, 2);
    Polynomial br = xvar(kZ, 1, 1, 1) * xvar(kZ, 2, 2, 2) + xvar(kZ, 1, 1, 2) * xvar(kZ, 2, 2, 1) -
                    xvar(kZ, 1, 2, 1) * xvar(kZ, 2, 1, 2) - xvar(kZ, 1, 2, 2) * xvar(kZ, 2, 1, 1);
    Polynomial f = z * z * det1 + z * w * br + w * w * det2;
    Monomial zw = Monomial::from_factors({{VariableId::z(1), 1}, {VariableId::w(1), 1}});
    CHECK(f.coeff_extract(zw, {VarClass::Z, VarClass::W}) == br);

    // empty pattern selects the part free of the selected classes
    CHECK(f.coeff_extract(Monomial(), {VarClass::Z, VarClass::W}).is_zero());
    Polynomial g = f + det1;
    CHECK(g.coeff_extract(Monomial(), {VarClass::Z, VarClass::W}) == det1);

    // zero input
    CHECK(Polynomial::zero(kZ).coeff_extract(zw, {VarClass::Z, VarClass::W}).is_zero());

    // linearity
    SplitMix64 rng(14);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(kZ, rng), q = random_poly(kZ, rng);
        Monomial pat = Monomial::variable(VariableId::x(1, 1, 1), 1 + static_cast<unsigned>(rng.below(2)));
        CHECK((p + q).coeff_extract(pat, {VarClass::X}) ==
              p.coeff_extract(pat, {VarClass::X}) + q.coeff_extract(pat, {VarClass::X}));
    }
}

TEST_CASE("multidegree_split") {
    Polynomial det1 = xvar(kZ, 1, 1, 1) * xvar(kZ, 2, 2, 1) - xvar(kZ, 1, 2, 1) * xvar(kZ, 2, 1, 1);
    auto parts = det1.multidegree_split(3);
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first == MultiDegree{2, 0, 0});

    Polynomial br = xvar(kZ, 1, 1, 1) * xvar(kZ, 2, 2, 2) + xvar(kZ, 1, 1, 2) * xvar(kZ, 2, 2, 1) -
                    xvar(kZ, 1, 2, 1) * xvar(kZ, 2, 1, 2) - xvar(kZ, 1, 2, 2) * xvar(kZ, 2, 1, 1);
    auto bparts = br.multidegree_split(2);
    REQUIRE(bparts.size() == 1);
    CHECK(bparts.begin()->first == MultiDegree{1, 1});

    // det(x1 + x2) has three components; they sum back to the input
    std::map<VariableId, Polynomial> shift;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            shift.emplace(VariableId::x(i, j, 1), xvar(kZ, i, j, 1) + xvar(kZ, i, j, 2));
    Polynomial dsum = det1.substitute(shift);
    auto sparts = dsum.multidegree_split(2);
    CHECK(sparts.size() == 3);
    Polynomial back(kZ);
    for (const auto& [d, part] : sparts) back = back + part;
    CHECK(back == dsum);

    Polynomial withz = Polynomial::variable(kZ, VariableId::z(1));
    CHECK_THROWS_AS(withz.multidegree_split(1), std::invalid_argument);
}

TEST_CASE("substitute") {
    Polynomial det1 = xvar(kZ, 1, 1, 1) * xvar(kZ, 2, 2, 1) - xvar(kZ, 1, 2, 1) * xvar(kZ, 2, 1, 1);
    Polynomial br = xvar(kZ, 1, 1, 1) * xvar(kZ, 2, 2, 2) + xvar(kZ, 1, 1, 2) * xvar(kZ, 2, 2, 1) -
                    xvar(kZ, 1, 2, 1) * xvar(kZ, 2, 1, 2) - xvar(kZ, 1, 2, 2) * xvar(kZ, 2, 1, 1);

    // x2 -> x1 entrywise turns the bracket into 2 det(x1)
    std::map<VariableId, Polynomial> collapse;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) collapse.emplace(VariableId::x(i, j, 2), xvar(kZ, i, j, 1));
    CHECK(br.substitute(collapse) == det1 + det1);

    // the same over F_2 is zero
    std::map<VariableId, Polynomial> collapse2;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            collapse2.emplace(VariableId::x(i, j, 2), Polynomial::variable(kF2, VariableId::x(i, j, 1)));
    CHECK(br.convert_to(kF2).substitute(collapse2).is_zero());

    // det at [[1,2],[3,4]] = -2
    std::map<VariableId, Scalar> numeric{{VariableId::x(1, 1, 1), Scalar(kZ, 1)},
                                         {VariableId::x(1, 2, 1), Scalar(kZ, 2)},
                                         {VariableId::x(2, 1, 1), Scalar(kZ, 3)},
                                         {VariableId::x(2, 2, 1), Scalar(kZ, 4)}};
    CHECK(det1.evaluate(numeric).str() == "-2");

    // substitution is a ring homomorphism
    SplitMix64 rng(15);
    for (int i = 0; i < 40; ++i) {
        Polynomial f = random_poly(kZ, rng), g = random_poly(kZ, rng);
        std::map<VariableId, Polynomial> a{{VariableId::x(1, 1, 1), random_poly(kZ, rng, 3)}};
        CHECK((f * g).substitute(a) == f.substitute(a) * g.substitute(a));
        CHECK((f + g).substitute(a) == f.substitute(a) + g.substitute(a));
    }
}

TEST_CASE("canonical serialization") {
    CHECK(Polynomial::zero(kZ).str() == "0");
    CHECK(Polynomial::parse("0", kZ).is_zero());

    SplitMix64 rng(16);
    for (const Ring& r : {kZ, kQ, kF2}) {
        for (int i = 0; i < 60; ++i) {
            Polynomial f = random_poly(r, rng);
            CHECK(Polynomial::parse(f.str(), r) == f);
            CHECK(Polynomial::parse(f.str(), r).str() == f.str());
        }
    }

    // serialization is independent of summand order
    for (int i = 0; i < 30; ++i) {
        Polynomial f = random_poly(kZ, rng), g = random_poly(kZ, rng);
        CHECK((f + g).str() == (g + f).str());
    }

    // rational coefficients round-trip
    Polynomial h = Polynomial::term(Scalar(kQ, mpq_class(-7, 3)), Monomial::variable(VariableId::x(1, 1, 1), 2));
    CHECK(Polynomial::parse(h.str(), kQ) == h);
}

TEST_CASE("variable order and parsing") {
    CHECK(VariableId::x(2, 2, 9) < VariableId::t(1, 1, 1));
    CHECK(VariableId::t(3, 3, 3) < VariableId::z(1));
    CHECK(VariableId::z(9) < VariableId::w(1));
    CHECK(VariableId::x(1, 1, 1) < VariableId::x(1, 1, 2));
    CHECK(VariableId::x(1, 1, 2) < VariableId::x(1, 2, 1));
    CHECK(VariableId::parse("x[1,2,3]") == VariableId::x(1, 2, 3));
    CHECK(VariableId::parse("w[4]") == VariableId::w(4));
    CHECK_THROWS_AS(VariableId::parse("y[1]"), std::invalid_argument);
    CHECK(VariableId::x(1, 2, 3).str() == "x[1,2,3]");
}

TEST_CASE("scalar residue of rationals") {
    Scalar q(kQ, mpq_class(1, 3));
    CHECK(q.residue(65521) == mod_mul(1, mod_inv(3, 65521), 65521));
    Scalar bad(kQ, mpq_class(1, 2));
    CHECK_THROWS_AS(bad.residue(2), std::invalid_argument);
}

TEST_CASE("arithmetic at the largest supported prime") {
    std::uint64_t p = (1ull << 61) - 1;
    Ring f = Ring::prime_field(p);
    Scalar a(f, -2);  // p - 2
    CHECK(a.as_residue() == p - 2);
    Scalar b = a * a;  // (p-2)^2 = 4 mod p
    CHECK(b.as_residue() == 4);
    CHECK((a * a.inverse()).is_one());
    CHECK(mod_pow(3, p - 1, p) == 1);  // Fermat
}

#include "semi2x2/json_io.hpp"

TEST_CASE("polynomial JSON form") {
    SplitMix64 rng(17);
    for (const Ring& r : {kZ, kQ, kF2}) {
        for (int i = 0; i < 25; ++i) {
            Polynomial f = random_poly(r, rng);
            CHECK(polynomial_from_json(polynomial_to_json(f), r) == f);
        }
    }
    CHECK(polynomial_to_json(Polynomial::zero(kZ)).empty());
}
