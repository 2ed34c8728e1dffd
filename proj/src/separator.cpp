#include "semi2x2/separator.hpp"

#include <algorithm>
#include <unordered_map>

namespace semi2x2 {

MatrixTuple random_matrix_tuple(int m, std::uint64_t p, SplitMix64& rng) {
    return MatrixTuple{p, random_tuple_fp(m, p, rng)};
}

std::vector<std::uint64_t> evaluate_set(const std::vector<Polynomial>& set, const MatrixTuple& a) {
    std::vector<std::uint64_t> out;
    out.reserve(set.size());
    for (const auto& f : set) out.push_back(CompiledPoly::compile(f, a.p).eval(a.entries, a.p));
    return out;
}

std::uint64_t spanning_value_at(const ExponentPattern& alpha, const MatrixTuple& a) {
    Ring field = Ring::prime_field(a.p);
    int q = alpha.q;
    GenericMatrix mat(field, 2 * q, 2 * q);
    for (const auto& [cell, e] : alpha.alpha) {
        auto [r, s, k] = cell;
        if (k > a.m()) throw std::invalid_argument("spanning_value_at: pattern slot beyond the tuple");
        Polynomial tvar = Polynomial::variable(field, VariableId::t(r, s, k));
        Mat2 slot = tuple_slot(a.entries, k);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                int row = (r - 1) * 2 + i, col = (s - 1) * 2 + j;
                Scalar entry(field, static_cast<long>(slot.e[static_cast<std::size_t>((i - 1) * 2 + (j - 1))]));
                mat.set(row, col, mat.at(row, col) + tvar.scaled(entry));
            }
    }
    const auto& bound = alpha.alpha;
    MonomialFilter keep = [&bound](const Monomial& mono) {
        for (const auto& [v, e] : mono.factors()) {
            auto it = bound.find(std::make_tuple(v.index1(), v.index2(), v.index3()));
            if (it == bound.end() || e > it->second) return false;
        }
        return true;
    };
    Polynomial det = determinant(mat, keep);
    Polynomial coef = det.coeff_extract(alpha.t_monomial(), {VarClass::T});
    if (coef.is_zero()) return 0;
    return coef.coefficient(Monomial()).as_residue();
}

std::vector<GeneratorDescriptor> separating_family(int m) {
    std::vector<GeneratorDescriptor> out;
    for (const auto& g : enumerate_generators(m, CharRegime::ZeroOrOdd)) out.push_back(g);
    return out;
}

std::vector<std::pair<std::string, Polynomial>> conjugation_separating_set(int m) {
    if (m < 1) throw std::invalid_argument("conjugation_separating_set: m must be positive");
    Ring Z = Ring::integers();
    std::vector<std::pair<std::string, Polynomial>> out;
    for (int k = 1; k <= m; ++k) out.push_back({"tr(" + std::to_string(k) + ")", trace_poly(Z, {k})});
    for (int k = 1; k <= m; ++k)
        out.push_back({"det(" + std::to_string(k) + ")", det_generator(Z, k)});
    for (int l = 1; l <= m; ++l)
        for (int r = l + 1; r <= m; ++r)
            out.push_back({"tr(" + std::to_string(l) + "," + std::to_string(r) + ")", trace_poly(Z, {l, r})});
    for (int k1 = 1; k1 <= m; ++k1)
        for (int k2 = k1 + 1; k2 <= m; ++k2)
            for (int k3 = k2 + 1; k3 <= m; ++k3)
                out.push_back({"tr(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(k3) + ")",
                               trace_poly(Z, {k1, k2, k3})});
    return out;
}

/******** separating fuzz ********/

SeparationReport separating_fuzz(const std::vector<std::pair<std::string, Polynomial>>& candidate,
                                 int reference_degree, int m, std::uint64_t p, int trials,
                                 std::uint64_t seed) {
    if (reference_degree % 2 != 0 || reference_degree > 6)
        throw std::invalid_argument("separating_fuzz: reference degree must be even and at most 6");
    if (!is_prime_u64(p)) throw std::invalid_argument("separating_fuzz: modulus must be prime");
    SeparationReport report;
    report.m = m;
    report.reference_degree = reference_degree;
    report.p = p;
    report.seed = seed;
    report.trials = trials;

    std::vector<CompiledPoly> compiled;
    compiled.reserve(candidate.size());
    for (const auto& [label, f] : candidate) compiled.push_back(CompiledPoly::compile(f, p));

    // the reference family is enumerated lazily; most trials never need it
    std::vector<std::pair<std::string, ExponentPattern>> reference;
    bool reference_ready = false;
    auto ensure_reference = [&]() {
        if (reference_ready) return;
        for (int q = 1; 2 * q <= reference_degree; ++q)
            for (const auto& alpha : enumerate_alpha_orbits(q, m))
                reference.push_back({alpha.str(), alpha});
        reference_ready = true;
    };

    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        MatrixTuple a = random_matrix_tuple(m, p, rng);
        MatrixTuple b = random_matrix_tuple(m, p, rng);
        bool agree = true;
        for (const auto& cf : compiled)
            if (cf.eval(a.entries, p) != cf.eval(b.entries, p)) {
                agree = false;
                break;
            }
        if (!agree) continue;
        ++report.candidate_agreements;
        ensure_reference();
        for (const auto& [label, alpha] : reference) {
            std::uint64_t va = spanning_value_at(alpha, a);
            std::uint64_t vb = spanning_value_at(alpha, b);
            if (va != vb) {
                // re-verify before recording
                bool still_agrees = true;
                for (const auto& cf : compiled)
                    if (cf.eval(a.entries, p) != cf.eval(b.entries, p)) still_agrees = false;
                if (still_agrees && spanning_value_at(alpha, a) == va && spanning_value_at(alpha, b) == vb)
                    report.counterexamples.push_back({a, b, label, va, vb});
            }
        }
    }
    return report;
}

/******** irredundancy witness search ********/

namespace {

struct SearchContext {
    std::vector<Polynomial> reduced;          // candidate minus removed, over Z
    Polynomial removed_poly;                  // over Z
    std::vector<int> active;                  // slots the removed generator touches
    int m = 0;
};

MatrixTuple embed(const std::vector<std::uint64_t>& active_entries, const SearchContext& ctx,
                  std::uint64_t p) {
    MatrixTuple out;
    out.p = p;
    out.entries.assign(static_cast<std::size_t>(ctx.m) * 4, 0);
    for (std::size_t i = 0; i < ctx.active.size(); ++i)
        for (int j = 0; j < 4; ++j)
            out.entries[static_cast<std::size_t>(ctx.active[i] - 1) * 4 + static_cast<std::size_t>(j)] =
                active_entries[i * 4 + static_cast<std::size_t>(j)];
    return out;
}

// exact re-verification through the slow scalar path, independent of the
// compiled evaluators that guided the search
bool verify_witness(const SearchContext& ctx, const MatrixTuple& a, const MatrixTuple& b) {
    Ring field = Ring::prime_field(a.p);
    auto point = [&](const MatrixTuple& t) {
        std::map<VariableId, Scalar> pt;
        for (int k = 1; k <= ctx.m; ++k) {
            Mat2 slot = tuple_slot(t.entries, k);
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j)
                    pt.emplace(VariableId::x(i, j, k),
                               Scalar(field, static_cast<long>(slot.e[static_cast<std::size_t>((i - 1) * 2 + (j - 1))])));
        }
        return pt;
    };
    auto pa = point(a), pb = point(b);
    for (const auto& f : ctx.reduced) {
        Polynomial ff = f.convert_to(field);
        if (!(ff.evaluate(pa) == ff.evaluate(pb))) return false;
    }
    Polynomial rf = ctx.removed_poly.convert_to(field);
    return !(rf.evaluate(pa) == rf.evaluate(pb));
}

// exhaustive scan of all tuples supported on the active slots, bucketed by
// the value signature of the reduced candidate set
WitnessResult exhaustive_stage(const SearchContext& ctx, std::uint64_t p, long long& budget) {
    WitnessResult result;
    result.stage = "exhaustive F" + std::to_string(p);
    int cells = static_cast<int>(ctx.active.size()) * 4;
    std::uint64_t count = 1;
    for (int i = 0; i < cells; ++i) {
        count *= p;
        if (count > (1ull << 26)) return result;  // stage too large, let the caller escalate
    }

    std::vector<CompiledPoly> reduced;
    for (const auto& f : ctx.reduced) reduced.push_back(CompiledPoly::compile(f, p));
    CompiledPoly removed = CompiledPoly::compile(ctx.removed_poly, p);

    std::unordered_map<std::size_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> buckets;
    std::vector<std::uint64_t> entries(static_cast<std::size_t>(cells));
    for (std::uint64_t code = 0; code < count; ++code) {
        if (--budget < 0) {
            result.nodes_used = -1;
            return result;
        }
        std::uint64_t rest = code;
        for (int i = 0; i < cells; ++i) {
            entries[static_cast<std::size_t>(i)] = rest % p;
            rest /= p;
        }
        MatrixTuple tup = embed(entries, ctx, p);
        std::size_t sig = 0;
        for (const auto& cf : reduced)
            sig = sig * 1099511628211ull + cf.eval(tup.entries, p) + 1;
        std::uint64_t rv = removed.eval(tup.entries, p);
        auto& bucket = buckets[sig];
        for (const auto& [other_code, other_rv] : bucket) {
            if (other_rv == rv) continue;
            if (--budget < 0) {
                result.nodes_used = -1;
                return result;
            }
            std::uint64_t rest2 = other_code;
            std::vector<std::uint64_t> entries2(static_cast<std::size_t>(cells));
            for (int i = 0; i < cells; ++i) {
                entries2[static_cast<std::size_t>(i)] = rest2 % p;
                rest2 /= p;
            }
            MatrixTuple other = embed(entries2, ctx, p);
            // hash buckets may collide; re-check agreement exactly
            bool agree = true;
            for (const auto& cf : reduced)
                if (cf.eval(tup.entries, p) != cf.eval(other.entries, p)) {
                    agree = false;
                    break;
                }
            if (!agree) continue;
            if (!verify_witness(ctx, tup, other)) continue;
            result.found = true;
            result.a = tup;
            result.b = other;
            result.removed_a = rv;
            result.removed_b = other_rv;
            return result;
        }
        bucket.push_back({code, rv});
    }
    return result;
}

WitnessResult random_stage(const SearchContext& ctx, std::uint64_t p, long long& budget,
                           std::uint64_t seed) {
    WitnessResult result;
    result.stage = "random F" + std::to_string(p);
    std::vector<CompiledPoly> reduced;
    for (const auto& f : ctx.reduced) reduced.push_back(CompiledPoly::compile(f, p));
    CompiledPoly removed = CompiledPoly::compile(ctx.removed_poly, p);

    SplitMix64 rng(seed);
    std::unordered_map<std::size_t, std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>>> buckets;
    int cells = static_cast<int>(ctx.active.size()) * 4;
    while (--budget >= 0) {
        std::vector<std::uint64_t> entries(static_cast<std::size_t>(cells));
        for (auto& e : entries) e = rng.below(p);
        MatrixTuple tup = embed(entries, ctx, p);
        std::size_t sig = 0;
        for (const auto& cf : reduced)
            sig = sig * 1099511628211ull + cf.eval(tup.entries, p) + 1;
        std::uint64_t rv = removed.eval(tup.entries, p);
        auto& bucket = buckets[sig];
        for (const auto& [other_entries, other_rv] : bucket) {
            if (other_rv == rv) continue;
            MatrixTuple other = embed(other_entries, ctx, p);
            bool agree = true;
            for (const auto& cf : reduced)
                if (cf.eval(tup.entries, p) != cf.eval(other.entries, p)) {
                    agree = false;
                    break;
                }
            if (!agree) continue;
            if (!verify_witness(ctx, tup, other)) continue;
            result.found = true;
            result.a = tup;
            result.b = other;
            result.removed_a = rv;
            result.removed_b = other_rv;
            return result;
        }
        bucket.push_back({entries, rv});
    }
    return result;
}

}  // namespace

WitnessResult irredundancy_witness(const std::vector<GeneratorDescriptor>& candidate,
                                   const GeneratorDescriptor& removed, int m, const Ring& field,
                                   long long budget, std::uint64_t seed) {
    if (std::find(candidate.begin(), candidate.end(), removed) == candidate.end())
        throw std::invalid_argument("irredundancy_witness: removed generator is not in the candidate set");

    SearchContext ctx;
    ctx.m = m;
    ctx.active = removed.slots;  // zero-padding: only these slots vary
    Ring Z = Ring::integers();
    ctx.removed_poly = removed.expand(Z);
    for (const auto& g : candidate)
        if (!(g == removed)) ctx.reduced.push_back(g.expand(Z));

    long long left = budget;
    WitnessResult r = exhaustive_stage(ctx, 2, left);
    if (r.found || left < 0) {
        r.nodes_used = budget - std::max(left, 0ll);
        return r;
    }
    r = exhaustive_stage(ctx, 3, left);
    if (r.found || left < 0) {
        r.nodes_used = budget - std::max(left, 0ll);
        return r;
    }
    std::uint64_t p = field.kind == RingKind::PrimeField && field.p >= 5 ? field.p : 5;
    r = random_stage(ctx, p, left, seed);
    r.nodes_used = budget - std::max(left, 0ll);
    return r;
}

}  // namespace semi2x2
