#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semi2x2/catalog.hpp"

using namespace semi2x2;

namespace {

const Ring kZ = Ring::integers();
const Ring kF2 = Ring::prime_field(2);

Scalar eval_at(const Polynomial& f, const std::vector<std::array<long, 4>>& mats) {
    std::map<VariableId, Scalar> point;
    for (std::size_t k = 0; k < mats.size(); ++k)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                point.emplace(VariableId::x(i, j, static_cast<int>(k) + 1),
                              Scalar(kZ, mats[k][static_cast<std::size_t>((i - 1) * 2 + j - 1)]));
    return f.evaluate(point);
}

}  // namespace

TEST_CASE("det_generator") {
    Polynomial d = det_generator(kZ, 1);
    CHECK(d.str() == "1 * x[1,1,1] * x[2,2,1] + -1 * x[1,2,1] * x[2,1,1]");
    CHECK(eval_at(d, {{1, 0, 0, 1}}).is_one());
    CHECK(eval_at(d, {{1, 1, 1, 1}}).is_zero());
    CHECK_THROWS_AS(det_generator(kZ, 0), std::invalid_argument);
}

TEST_CASE("bracket") {
    Polynomial br = bracket(kZ, 1, 2);
    auto x = [&](int i, int j, int k) { return Polynomial::variable(kZ, VariableId::x(i, j, k)); };
    CHECK(br == x(1, 1, 1) * x(2, 2, 2) + x(1, 1, 2) * x(2, 2, 1) - x(1, 2, 1) * x(2, 1, 2) -
                    x(1, 2, 2) * x(2, 1, 1));
    CHECK(bracket(kZ, 1, 2) == bracket(kZ, 2, 1));
    CHECK(bracket(kZ, 1, 1) == det_generator(kZ, 1) + det_generator(kZ, 1));
    // dual route: the zw coefficient of det(z x1 + w x2)
    GenericMatrix zx = generic_x(kZ, 1).scaled(Polynomial::variable(kZ, VariableId::z(1)));
    GenericMatrix wx = generic_x(kZ, 2).scaled(Polynomial::variable(kZ, VariableId::w(1)));
    Monomial zw = Monomial::from_factors({{VariableId::z(1), 1}, {VariableId::w(1), 1}});
    CHECK(determinant(zx + wx).coeff_extract(zw, {VarClass::Z, VarClass::W}) == br);
    // trace route
    CHECK(br == trace_poly(kZ, {1}) * trace_poly(kZ, {2}) - trace_poly(kZ, {1, 2}));
}

TEST_CASE("xi") {
    CHECK_THROWS_AS(xi(kZ, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(xi(kZ, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(xi(kZ, {1, 2, 3, 4, 5}), std::invalid_argument);

    Polynomial f = xi(kZ, {1, 2, 3, 4});
    auto d = f.multidegree(4);
    REQUIRE(d.has_value());
    CHECK(*d == MultiDegree{1, 1, 1, 1});

    // substituting the identity for the last slot gives the trace identity
    Polynomial traced = sigma_star(f, 4);
    CHECK(traced == trace_poly(kZ, {1, 2, 3}) - trace_poly(kZ, {1, 2}) * trace_poly(kZ, {3}));

    // the y-collapse at q=2 is an exact identity, not only a congruence
    CHECK(xi(kZ, {1, 2, 1, 4}) == -(det_generator(kZ, 1) * bracket(kZ, 2, 4)));

    // repeated slots are taken verbatim, no sign normalization
    CHECK_FALSE(xi(kZ, {1, 2, 1, 4}).is_zero());
}

TEST_CASE("xi is additive in each argument") {
    // substitute x1 -> x5 + x6 entrywise; the result equals xi(5,...) + xi(6,...)
    std::map<VariableId, Polynomial> split;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            split.emplace(VariableId::x(i, j, 1), Polynomial::variable(kZ, VariableId::x(i, j, 5)) +
                                                      Polynomial::variable(kZ, VariableId::x(i, j, 6)));
    CHECK(xi(kZ, {1, 2, 3, 4}).substitute(split) == xi(kZ, {5, 2, 3, 4}) + xi(kZ, {6, 2, 3, 4}));
    // and in a non-leading argument
    CHECK(xi(kZ, {2, 1, 3, 4}).substitute(split) == xi(kZ, {2, 5, 3, 4}) + xi(kZ, {2, 6, 3, 4}));
}

TEST_CASE("sigma_star") {
    CHECK(sigma_star(det_generator(kZ, 3), 3) == Polynomial::constant(kZ, 1));
    CHECK(sigma_star(bracket(kZ, 1, 3), 3) == trace_poly(kZ, {1}));
}

TEST_CASE("trace_poly") {
    Polynomial t1 = trace_poly(kZ, {1});
    CHECK(t1 == Polynomial::variable(kZ, VariableId::x(1, 1, 1)) +
                    Polynomial::variable(kZ, VariableId::x(2, 2, 1)));
    CHECK(trace_poly(kZ, {1, 2}) == trace_poly(kZ, {2, 1}));
    CHECK(trace_poly(kZ, {1, 2, 3}) == trace_poly(kZ, {3, 1, 2}));
    CHECK_THROWS_AS(trace_poly(kZ, {}), std::invalid_argument);
}

TEST_CASE("enumerate_generators counts") {
    CHECK(enumerate_generators(4, CharRegime::Two).size() == 11);
    CHECK(enumerate_generators(6, CharRegime::Two).size() == 37);
    CHECK(enumerate_generators(5, CharRegime::ZeroOrOdd).size() == 20);
    CHECK(enumerate_generators(1, CharRegime::Two).size() == 1);
    CHECK(enumerate_generators(2, CharRegime::ZeroOrOdd).size() == 3);
    CHECK(enumerate_generators(3, CharRegime::ZeroOrOdd).size() == 6);

    // descriptor tokens round-trip
    for (const auto& g : enumerate_generators(6, CharRegime::Two))
        CHECK(GeneratorDescriptor::parse(g.token()) == g);

    // every generator is multihomogeneous with the descriptor's multidegree
    for (const auto& g : enumerate_generators(5, CharRegime::Two)) {
        auto d = g.expand(kZ).multidegree(5);
        REQUIRE(d.has_value());
        CHECK(*d == g.multidegree(5));
    }
}

TEST_CASE("spanning_element at q=1") {
    ExponentPattern det_pattern;
    det_pattern.q = 1;
    det_pattern.alpha[{1, 1, 2}] = 2;
    CHECK(spanning_element(kZ, det_pattern, 3) == det_generator(kZ, 2));

    ExponentPattern br_pattern;
    br_pattern.q = 1;
    br_pattern.alpha[{1, 1, 1}] = 1;
    br_pattern.alpha[{1, 1, 3}] = 1;
    CHECK(spanning_element(kZ, br_pattern, 3) == bracket(kZ, 1, 3));
}

TEST_CASE("spanning_element reproduces xi on the standard cycle pattern") {
    // q = 2
    ExponentPattern c2;
    c2.q = 2;
    c2.alpha[{1, 1, 1}] = 1;
    c2.alpha[{2, 2, 2}] = 1;
    c2.alpha[{1, 2, 3}] = 1;
    c2.alpha[{2, 1, 4}] = 1;
    CHECK(spanning_element(kZ, c2, 4) == xi(kZ, {1, 2, 3, 4}));

    // q = 3
    ExponentPattern c3;
    c3.q = 3;
    c3.alpha[{1, 1, 1}] = 1;
    c3.alpha[{2, 2, 2}] = 1;
    c3.alpha[{3, 3, 3}] = 1;
    c3.alpha[{1, 2, 4}] = 1;
    c3.alpha[{2, 3, 5}] = 1;
    c3.alpha[{3, 1, 6}] = 1;
    CHECK(spanning_element(kZ, c3, 6) == xi(kZ, {1, 2, 3, 4, 5, 6}));
}

TEST_CASE("canonicalize_alpha verdicts") {
    // wrong total degree: zero
    ExponentPattern bad_total;
    bad_total.q = 2;
    bad_total.alpha[{1, 1, 1}] = 1;
    CHECK(canonicalize_alpha(bad_total).verdict == CanonicalForm::Verdict::Zero);
    CHECK(spanning_element(kZ, bad_total, 2).is_zero());

    // right total, wrong row sums: zero
    ExponentPattern bad_rows;
    bad_rows.q = 2;
    bad_rows.alpha[{1, 1, 1}] = 2;
    bad_rows.alpha[{1, 2, 2}] = 2;
    CHECK(canonicalize_alpha(bad_rows).verdict == CanonicalForm::Verdict::Zero);
    CHECK(spanning_element(kZ, bad_rows, 2).is_zero());

    // a cell of summed exponent 2 splits off a det factor
    ExponentPattern detf;
    detf.q = 2;
    detf.alpha[{1, 1, 1}] = 2;
    detf.alpha[{2, 2, 2}] = 1;
    detf.alpha[{2, 2, 3}] = 1;
    auto form = canonicalize_alpha(detf);
    REQUIRE(form.verdict == CanonicalForm::Verdict::DetFactor);
    CHECK(form.det_factor->slots == std::vector<int>{1, 1});
    CHECK(reconstruct(form, kZ) == det_generator(kZ, 1) * bracket(kZ, 2, 3));
    CHECK(spanning_element(kZ, detf, 3) == reconstruct(form, kZ));

    // the standard cycle is a single cycle of sign +1
    ExponentPattern cyc;
    cyc.q = 2;
    cyc.alpha[{1, 1, 1}] = 1;
    cyc.alpha[{2, 2, 2}] = 1;
    cyc.alpha[{1, 2, 3}] = 1;
    cyc.alpha[{2, 1, 4}] = 1;
    auto cform = canonicalize_alpha(cyc);
    REQUIRE(cform.verdict == CanonicalForm::Verdict::SingleCycle);
    REQUIRE(cform.cycles.size() == 1);
    CHECK(cform.cycles[0].slots == std::vector<int>{1, 2, 3, 4});
    CHECK(cform.cycles[0].sign == 1);

    // a block-diagonal two-cycle pattern at q=4 splits into two cycles, and
    // the signed product matches the direct determinant computation exactly
    ExponentPattern two;
    two.q = 4;
    two.alpha[{1, 1, 1}] = 1;
    two.alpha[{2, 2, 2}] = 1;
    two.alpha[{1, 2, 3}] = 1;
    two.alpha[{2, 1, 4}] = 1;
    two.alpha[{3, 3, 5}] = 1;
    two.alpha[{4, 4, 6}] = 1;
    two.alpha[{3, 4, 1}] = 1;
    two.alpha[{4, 3, 2}] = 1;
    auto pform = canonicalize_alpha(two);
    REQUIRE(pform.verdict == CanonicalForm::Verdict::Product);
    CHECK(pform.cycles.size() == 2);
    CHECK(reconstruct(pform, kZ) == spanning_element(kZ, two, 6));
}

TEST_CASE("reconstruction matches the determinant route on random patterns") {
    SplitMix64 rng(101);
    int checked = 0;
    while (checked < 60) {
        int q = 2 + static_cast<int>(rng.below(3));  // 2..4
        int m = 2 + static_cast<int>(rng.below(5));  // 2..6
        ExponentPattern alpha = random_alpha(q, m, rng);
        CHECK(reconstruct(canonicalize_alpha(alpha), kZ) == spanning_element(kZ, alpha, m));
        ++checked;
    }
}

TEST_CASE("nonzero spanning elements have even total degree") {
    SplitMix64 rng(102);
    for (int i = 0; i < 40; ++i) {
        int q = 1 + static_cast<int>(rng.below(3));
        ExponentPattern alpha = random_alpha(q, 4, rng);
        // drop a random cell to break validity half the time
        if (rng.below(2) == 0 && !alpha.alpha.empty()) alpha.alpha.erase(alpha.alpha.begin());
        Polynomial f = spanning_element(kZ, alpha, 4);
        if (!f.is_zero()) {
            CHECK(f.total_degree() % 2 == 0);
            CHECK(f.total_degree() == 2 * static_cast<unsigned>(q));
            CHECK(f.multidegree_split(4).size() == 1);
        }
    }
}

TEST_CASE("collapse identities") {
    for (const Ring& ring : {kZ, kF2}) {
        for (int q : {2, 3}) {
            auto rep = collapse_identity(ring, q);
            CHECK(rep.ok);
            CHECK(rep.difference.is_zero());
        }
    }
    CHECK_THROWS_AS(collapse_identity(kZ, 1), std::invalid_argument);
}

TEST_CASE("collapse identity at q=4") {
    auto rep = collapse_identity(kZ, 4);
    CHECK(rep.ok);
}

TEST_CASE("alpha orbit enumeration") {
    // q=1: the 2-cell patterns are det(k) and bracket(k,l) selectors
    auto o1 = enumerate_alpha_orbits(1, 6);
    CHECK(o1.size() == 21);  // 6 dets + 15 bracket pairs

    auto supports = enumerate_supports(2);
    CHECK(supports.size() == 3);
    auto s3 = enumerate_supports(3);
    CHECK(s3.size() == 21);

    // orbit representatives stay valid patterns
    for (const auto& alpha : enumerate_alpha_orbits(2, 3)) {
        CHECK(alpha.total() == 4);
        CHECK(canonicalize_alpha(alpha).verdict != CanonicalForm::Verdict::Zero);
    }
}

TEST_CASE("exponent pattern plumbing") {
    ExponentPattern a;
    a.q = 2;
    a.alpha[{1, 1, 2}] = 2;
    a.alpha[{2, 2, 1}] = 1;
    a.alpha[{2, 2, 3}] = 1;
    CHECK(a.total() == 4);
    CHECK(a.cell_sum(1, 1) == 2);
    CHECK(a.slots_at(2, 2) == std::vector<int>{1, 3});
    CHECK(a.multidegree(3) == MultiDegree{1, 2, 1});
    CHECK_THROWS_AS(a.multidegree(2), std::invalid_argument);

    ExponentPattern bad;
    bad.q = 1;
    bad.alpha[{2, 1, 1}] = 2;  // cell outside the grid
    CHECK_THROWS_AS(canonicalize_alpha(bad), std::invalid_argument);
}
