#include "semi2x2/verifier.hpp"

#include <algorithm>

namespace semi2x2 {

GroupElementPair::GroupElementPair(ScalarMat2 g_, ScalarMat2 h_) : g(std::move(g_)), h(std::move(h_)) {
    if (!g.det().is_one() || !h.det().is_one())
        throw std::invalid_argument("GroupElementPair: determinants must be 1");
}

/******** ExactSpan ********/

ExactSpan::ExactSpan(const Ring& field) : field_(field) {
    if (!field.is_field()) throw std::invalid_argument("ExactSpan: need a field (Q or F_p)");
}

std::pair<Polynomial, std::map<std::string, Scalar>> ExactSpan::reduce(const Polynomial& f) const {
    if (!(f.ring() == field_)) throw std::invalid_argument("ExactSpan::reduce: ring mismatch");
    std::map<Monomial, Scalar> v(f.terms().begin(), f.terms().end());
    std::map<std::string, Scalar> comb;
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Scalar coef = it->second;  // row is pivot-normalized
        for (const auto& [mono, c] : row->second.v) {
            auto vt = v.find(mono);
            if (vt == v.end()) {
                Scalar nc = -(coef * c);
                if (!nc.is_zero()) v.emplace(mono, nc);
            } else {
                vt->second = vt->second - coef * c;
                if (vt->second.is_zero()) v.erase(vt);
            }
        }
        for (const auto& [label, c] : row->second.comb) {
            auto ct = comb.find(label);
            if (ct == comb.end()) comb.emplace(label, coef * c);
            else ct->second = ct->second + coef * c;
        }
        it = v.upper_bound(row->first);  // only columns past the pivot changed
    }
    Polynomial residual(field_);
    for (const auto& [mono, c] : v) residual = residual + Polynomial::term(c, mono);
    for (auto ct = comb.begin(); ct != comb.end();)
        ct = ct->second.is_zero() ? comb.erase(ct) : std::next(ct);
    return {residual, comb};
}

bool ExactSpan::insert(const Polynomial& f, const std::string& label) {
    auto [residual, comb] = reduce(f);
    if (residual.is_zero()) return false;
    const auto& pivot = residual.terms().begin()->first;
    Scalar lead = residual.terms().begin()->second;
    Scalar inv = lead.inverse();
    Row row;
    for (const auto& [mono, c] : residual.terms()) row.v.emplace(mono, c * inv);
    // residual = f - sum(comb), so residual/lead = (f - sum(comb))/lead
    row.comb.emplace(label, inv);
    for (const auto& [l, c] : comb) {
        Scalar val = -(c * inv);
        auto it = row.comb.find(l);
        if (it == row.comb.end()) row.comb.emplace(l, val);
        else it->second = it->second + val;
    }
    for (auto it = row.comb.begin(); it != row.comb.end();)
        it = it->second.is_zero() ? row.comb.erase(it) : std::next(it);
    rows_.emplace(pivot, std::move(row));
    return true;
}

/******** SpanBasis / in_span ********/

SpanBasis SpanBasis::make(MultiDegree multidegree, const Ring& field,
                          std::vector<std::pair<std::string, Polynomial>> vectors) {
    if (!field.is_field()) throw std::invalid_argument("SpanBasis: field must be Q or F_p");
    int m = static_cast<int>(multidegree.size());
    for (const auto& [label, f] : vectors) {
        if (!(f.ring() == field)) throw std::invalid_argument("SpanBasis: vector ring mismatch");
        if (f.is_zero()) continue;
        auto d = f.multidegree(m);
        if (!d || *d != multidegree)
            throw std::invalid_argument("SpanBasis: vector '" + label + "' has the wrong multidegree");
    }
    return SpanBasis{std::move(multidegree), field, std::move(vectors)};
}

MembershipCertificate in_span(const Polynomial& query, const SpanBasis& basis) {
    if (!(query.ring() == basis.field)) throw std::invalid_argument("in_span: query ring mismatch");
    if (!query.is_zero()) {
        auto d = query.multidegree(static_cast<int>(basis.multidegree.size()));
        if (!d || *d != basis.multidegree) throw std::invalid_argument("in_span: multidegree mismatch");
    }
    ExactSpan span(basis.field);
    for (const auto& [label, f] : basis.vectors) span.insert(f, label);
    auto [residual, comb] = span.reduce(query);
    MembershipCertificate cert;
    if (!residual.is_zero()) return cert;
    cert.inside = true;
    cert.combination = std::move(comb);
    // re-substitute the combination before trusting it
    Polynomial rebuilt(basis.field);
    for (const auto& [label, c] : cert.combination) {
        auto it = std::find_if(basis.vectors.begin(), basis.vectors.end(),
                               [&](const auto& lv) { return lv.first == label; });
        if (it == basis.vectors.end()) throw std::logic_error("in_span: combination labels a missing vector");
        rebuilt = rebuilt + it->second.scaled(c);
    }
    if (!(rebuilt == query)) throw std::logic_error("in_span: certificate failed re-verification");
    return cert;
}

SpanBasis products_of_multidegree(const std::vector<GeneratorDescriptor>& generators,
                                  const MultiDegree& target, const Ring& field) {
    int m = static_cast<int>(target.size());
    int total = 0;
    for (int d : target) total += d;
    std::vector<std::pair<std::string, Polynomial>> vectors;
    if (total >= 4) {
        std::vector<MultiDegree> degs;
        degs.reserve(generators.size());
        for (const auto& g : generators) degs.push_back(g.multidegree(m));

        std::vector<std::size_t> chosen;
        MultiDegree remaining = target;
        auto emit = [&]() {
            std::string label;
            Polynomial prod = Polynomial::constant(field, 1);
            for (std::size_t idx : chosen) {
                if (!label.empty()) label += "*";
                label += generators[idx].token();
                prod = prod * generators[idx].expand(Ring::integers()).convert_to(field);
            }
            vectors.push_back({label, std::move(prod)});
        };
        auto rec = [&](auto&& self, std::size_t from, int left) -> void {
            if (left == 0) {
                if (chosen.size() >= 2) emit();
                return;
            }
            for (std::size_t i = from; i < generators.size(); ++i) {
                bool fits = true;
                for (int k = 0; k < m && fits; ++k)
                    fits = degs[i][static_cast<std::size_t>(k)] <= remaining[static_cast<std::size_t>(k)];
                if (!fits || generators[i].degree() > left) continue;
                for (int k = 0; k < m; ++k) remaining[static_cast<std::size_t>(k)] -= degs[i][static_cast<std::size_t>(k)];
                chosen.push_back(i);
                self(self, i, left - generators[i].degree());
                chosen.pop_back();
                for (int k = 0; k < m; ++k) remaining[static_cast<std::size_t>(k)] += degs[i][static_cast<std::size_t>(k)];
            }
        };
        rec(rec, 0, total);
    }
    return SpanBasis::make(target, field, std::move(vectors));
}

/******** invariance fuzzing ********/

namespace {

InvarianceReport check_invariance_fp(const Polynomial& f, int m, int trials, std::uint64_t p,
                                     std::uint64_t seed, const std::string& label) {
    InvarianceReport report;
    report.label = label;
    report.seed = seed;
    report.trials = trials;
    CompiledPoly cf = CompiledPoly::compile(f, p);
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Mat2 g = random_sl2_fp(p, rng), h = random_sl2_fp(p, rng);
        TupleFp a = random_tuple_fp(m, p, rng);
        TupleFp b = transform_tuple(a, g, h, p);
        if (cf.eval(a, p) != cf.eval(b, p)) report.failing_trials.push_back(t);
    }
    return report;
}

std::map<VariableId, Scalar> tuple_point(const std::vector<ScalarMat2>& a) {
    std::map<VariableId, Scalar> point;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                point.emplace(VariableId::x(i, j, static_cast<int>(k) + 1),
                              a[k].e[static_cast<std::size_t>((i - 1) * 2 + (j - 1))]);
    return point;
}

InvarianceReport check_invariance_exact(const Polynomial& f, int m, int trials, const Ring& field,
                                        std::uint64_t seed, const std::string& label) {
    InvarianceReport report;
    report.label = label;
    report.seed = seed;
    report.trials = trials;
    SplitMix64 rng(seed);
    Polynomial ff = f.convert_to(field);
    for (int t = 0; t < trials; ++t) {
        ScalarMat2 g = random_sl2(field, rng), h = random_sl2(field, rng);
        std::vector<ScalarMat2> a;
        for (int k = 0; k < m; ++k) {
            ScalarMat2 mat(field);
            for (auto& entry : mat.e) entry = Scalar(field, rng.range(-9, 9));
            a.push_back(mat);
        }
        std::vector<ScalarMat2> b;
        ScalarMat2 hinv = h.adjugate();
        for (const auto& mat : a) b.push_back(g.mul(mat).mul(hinv));
        if (!(ff.evaluate(tuple_point(a)) == ff.evaluate(tuple_point(b)))) report.failing_trials.push_back(t);
    }
    return report;
}

}  // namespace

InvarianceReport check_invariance(const Polynomial& f, int m, int trials, const Ring& field,
                                  std::uint64_t seed, const std::string& label) {
    if (field.kind == RingKind::PrimeField)
        return check_invariance_fp(f, m, trials, field.p, seed, label);
    if (field.kind == RingKind::Rationals)
        return check_invariance_exact(f, m, trials, field, seed, label);
    throw std::invalid_argument("check_invariance: field must be Q or F_p");
}

/******** decomposability / spanning ********/

DecomposabilityResult is_decomposable(const GeneratorDescriptor& desc,
                                      const std::vector<GeneratorDescriptor>& catalog, int m,
                                      const Ring& field) {
    DecomposabilityResult out;
    out.descriptor = desc;
    SpanBasis basis = products_of_multidegree(catalog, desc.multidegree(m), field);
    out.basis_size = static_cast<int>(basis.vectors.size());
    Polynomial query = desc.expand(Ring::integers()).convert_to(field);
    out.certificate = in_span(query, basis);
    out.decomposable = out.certificate.inside;
    return out;
}

SpanningCheckReport spanning_check(int m, int q, const Ring& field) {
    if (m < 1 || m > 6) throw std::invalid_argument("spanning_check: m must be in 1..6");
    if (q < 1 || 2 * q > 6) throw std::invalid_argument("spanning_check: degree 2q exceeds the ceiling");
    SpanningCheckReport report;
    report.m = m;
    report.q = q;
    report.field = field;

    auto catalog = enumerate_generators(m, regime_for(field));

    // spanning side, bucketed by multidegree
    std::map<MultiDegree, std::vector<std::pair<std::string, Polynomial>>> alpha_side;
    for (const auto& alpha : enumerate_alpha_orbits(q, m)) {
        Polynomial f = spanning_element(Ring::integers(), alpha, m).convert_to(field);
        if (f.is_zero()) continue;
        alpha_side[alpha.multidegree(m)].push_back({alpha.str(), std::move(f)});
        ++report.alpha_vectors;
    }

    // product side: >=2-factor products plus the degree-2q generators themselves
    std::map<MultiDegree, std::vector<std::pair<std::string, Polynomial>>> product_side;
    for (const auto& [deg, vectors] : alpha_side) {
        auto basis = products_of_multidegree(catalog, deg, field);
        product_side[deg] = std::move(basis.vectors);
    }
    for (const auto& gen : catalog) {
        if (gen.degree() != 2 * q) continue;
        Polynomial f = gen.expand(Ring::integers()).convert_to(field);
        if (f.is_zero()) continue;
        product_side[gen.multidegree(m)].push_back({gen.token(), std::move(f)});
    }
    for (const auto& [deg, vectors] : product_side)
        report.product_vectors += static_cast<int>(vectors.size());

    report.ok = true;
    std::set<MultiDegree> degrees;
    for (const auto& [d, v] : alpha_side) degrees.insert(d);
    for (const auto& [d, v] : product_side) degrees.insert(d);
    report.multidegrees = static_cast<int>(degrees.size());
    for (const auto& deg : degrees) {
        ExactSpan a_span(field), b_span(field);
        auto ait = alpha_side.find(deg);
        auto bit = product_side.find(deg);
        if (ait != alpha_side.end())
            for (const auto& [label, f] : ait->second) a_span.insert(f, label);
        if (bit != product_side.end())
            for (const auto& [label, f] : bit->second) b_span.insert(f, label);
        if (ait != alpha_side.end())
            for (const auto& [label, f] : ait->second)
                if (!b_span.contains(f)) {
                    report.ok = false;
                    report.witnesses.push_back("spanning element outside product span at " +
                                               multidegree_str(deg) + ": " + label);
                }
        if (bit != product_side.end())
            for (const auto& [label, f] : bit->second)
                if (!a_span.contains(f)) {
                    report.ok = false;
                    report.witnesses.push_back("product outside spanning span at " + multidegree_str(deg) +
                                               ": " + label);
                }
    }
    return report;
}

/******** identity suite ********/

namespace {

CheckResult exact_zero(const std::string& name, const Polynomial& difference) {
    CheckResult r;
    r.name = name;
    r.ok = difference.is_zero();
    if (!r.ok) r.detail = "difference = " + difference.str();
    return r;
}

CheckResult span_membership(const std::string& name, const Polynomial& query, const SpanBasis& basis) {
    CheckResult r;
    r.name = name;
    auto cert = in_span(query, basis);
    r.ok = cert.inside;
    if (!r.ok) r.detail = "not in the product span (basis size " + std::to_string(basis.vectors.size()) + ")";
    return r;
}

}  // namespace

IdentityReport identity_suite() {
    IdentityReport report;
    for (const Ring& ring : {Ring::integers(), Ring::prime_field(2)}) {
        std::string suffix = " over " + ring.str();

        // det(z x1 + w x2) = z^2 det(x1) + zw <x1|x2> + w^2 det(x2)
        GenericMatrix zx = generic_x(ring, 1).scaled(Polynomial::variable(ring, VariableId::z(1)));
        GenericMatrix wx = generic_x(ring, 2).scaled(Polynomial::variable(ring, VariableId::w(1)));
        Polynomial lhs = determinant(zx + wx);
        Polynomial z = Polynomial::variable(ring, VariableId::z(1));
        Polynomial w = Polynomial::variable(ring, VariableId::w(1));
        Polynomial rhs = z * z * det_generator(ring, 1) + z * w * bracket(ring, 1, 2) +
                         w * w * det_generator(ring, 2);
        report.checks.push_back(exact_zero("bracket-expansion" + suffix, lhs - rhs));

        // <x_l|x_r> = tr(x_l) tr(x_r) - tr(x_l x_r)
        Polynomial tr_diff = bracket(ring, 1, 2) -
                             (trace_poly(ring, {1}) * trace_poly(ring, {2}) - trace_poly(ring, {1, 2}));
        report.checks.push_back(exact_zero("trace-pair-identity" + suffix, tr_diff));

        // xi(x1,x2,x3,I) = tr(x1 x2 x3) - tr(x1 x2) tr(x3)
        Polynomial xyz_diff = sigma_star(xi(ring, {1, 2, 3, 4}), 4) -
                              (trace_poly(ring, {1, 2, 3}) - trace_poly(ring, {1, 2}) * trace_poly(ring, {3}));
        report.checks.push_back(exact_zero("trace-triple-identity" + suffix, xyz_diff));

        for (int q : {2, 3}) {
            auto collapse = collapse_identity(ring, q);
            report.checks.push_back(
                exact_zero("collapse-q" + std::to_string(q) + suffix, collapse.difference));
        }
    }

    // sign congruence: swapping arguments 1 and q+1 flips the sign modulo
    // decomposables, so the sum of the two must lie in the product span
    {
        Ring field = Ring::rationals();
        auto catalog = enumerate_generators(4, CharRegime::ZeroOrOdd);
        Polynomial sum = (xi(Ring::integers(), {1, 2, 3, 4}) + xi(Ring::integers(), {3, 2, 1, 4}))
                             .convert_to(field);
        SpanBasis basis = products_of_multidegree(catalog, MultiDegree{1, 1, 1, 1}, field);
        report.checks.push_back(span_membership("sign-congruence-swap over Q", sum, basis));
    }

    // repeated-slot congruence: xi with a repeated slot is decomposable
    for (const Ring& field : {Ring::rationals(), Ring::prime_field(2)}) {
        auto catalog = enumerate_generators(4, regime_for(field));
        Polynomial rep = xi(Ring::integers(), {1, 2, 1, 4}).convert_to(field);
        SpanBasis basis = products_of_multidegree(catalog, MultiDegree{2, 1, 0, 1}, field);
        report.checks.push_back(span_membership("repeat-congruence over " + field.str(), rep, basis));
    }

    return report;
}

}  // namespace semi2x2
