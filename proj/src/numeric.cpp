#include "semi2x2/numeric.hpp"

namespace semi2x2 {

std::uint64_t Mat2::det(std::uint64_t p) const {
    return mod_sub(mod_mul(e[0], e[3], p), mod_mul(e[1], e[2], p), p);
}

Mat2 Mat2::mul(const Mat2& o, std::uint64_t p) const {
    return {{mod_add(mod_mul(e[0], o.e[0], p), mod_mul(e[1], o.e[2], p), p),
             mod_add(mod_mul(e[0], o.e[1], p), mod_mul(e[1], o.e[3], p), p),
             mod_add(mod_mul(e[2], o.e[0], p), mod_mul(e[3], o.e[2], p), p),
             mod_add(mod_mul(e[2], o.e[1], p), mod_mul(e[3], o.e[3], p), p)}};
}

Mat2 Mat2::adjugate(std::uint64_t p) const {
    return {{e[3], e[1] == 0 ? 0 : p - e[1], e[2] == 0 ? 0 : p - e[2], e[0]}};
}

TupleFp random_tuple_fp(int m, std::uint64_t p, SplitMix64& rng) {
    TupleFp a(static_cast<std::size_t>(m) * 4);
    for (auto& v : a) v = rng.below(p);
    return a;
}

Mat2 tuple_slot(const TupleFp& a, int k) {
    std::size_t base = static_cast<std::size_t>(k - 1) * 4;
    return {{a[base], a[base + 1], a[base + 2], a[base + 3]}};
}

void set_tuple_slot(TupleFp& a, int k, const Mat2& v) {
    std::size_t base = static_cast<std::size_t>(k - 1) * 4;
    for (int i = 0; i < 4; ++i) a[base + static_cast<std::size_t>(i)] = v.e[static_cast<std::size_t>(i)];
}

TupleFp transform_tuple(const TupleFp& a, const Mat2& g, const Mat2& h, std::uint64_t p) {
    int m = static_cast<int>(a.size() / 4);
    Mat2 hinv = h.adjugate(p);
    TupleFp out(a.size());
    for (int k = 1; k <= m; ++k) set_tuple_slot(out, k, g.mul(tuple_slot(a, k), p).mul(hinv, p));
    return out;
}

Mat2 random_sl2_fp(std::uint64_t p, SplitMix64& rng) {
    Mat2 m = Mat2::identity();
    int shears = 3 + static_cast<int>(rng.below(4));
    for (int i = 0; i < shears; ++i) {
        std::uint64_t a = rng.below(p);
        if (rng.below(2) == 0)
            m = m.mul(Mat2{{1, a, 0, 1}}, p);
        else
            m = m.mul(Mat2{{1, 0, a, 1}}, p);
    }
    std::uint64_t c = 1 + rng.below(p - 1);
    m = m.mul(Mat2{{c, 0, 0, mod_inv(c, p)}}, p);
    return m;
}

/******** CompiledPoly ********/

CompiledPoly CompiledPoly::compile(const Polynomial& f, std::uint64_t p) {
    CompiledPoly out;
    for (const auto& [mono, c] : f.terms()) {
        Term t;
        t.coeff = c.residue(p);
        if (t.coeff == 0) continue;
        for (const auto& [v, e] : mono.factors()) {
            if (v.var_class() != VarClass::X)
                throw std::invalid_argument("CompiledPoly: only X-variable polynomials are evaluable");
            int dense = (v.slot() - 1) * 4 + (v.index1() - 1) * 2 + (v.index2() - 1);
            t.factors.push_back({dense, e});
        }
        out.terms_.push_back(std::move(t));
    }
    return out;
}

std::uint64_t CompiledPoly::eval(const TupleFp& point, std::uint64_t p) const {
    std::uint64_t acc = 0;
    for (const auto& t : terms_) {
        std::uint64_t v = t.coeff;
        for (const auto& [idx, e] : t.factors) {
            std::uint64_t base = point[static_cast<std::size_t>(idx)];
            for (unsigned i = 0; i < e; ++i) v = mod_mul(v, base, p);
        }
        acc = mod_add(acc, v, p);
    }
    return acc;
}

/******** exact numeric matrices ********/

ScalarMat2 ScalarMat2::identity(const Ring& r) {
    ScalarMat2 m(r);
    m.e[0] = Scalar::one(r);
    m.e[3] = Scalar::one(r);
    return m;
}

ScalarMat2 ScalarMat2::mul(const ScalarMat2& o) const {
    ScalarMat2 out(ring);
    out.e[0] = e[0] * o.e[0] + e[1] * o.e[2];
    out.e[1] = e[0] * o.e[1] + e[1] * o.e[3];
    out.e[2] = e[2] * o.e[0] + e[3] * o.e[2];
    out.e[3] = e[2] * o.e[1] + e[3] * o.e[3];
    return out;
}

ScalarMat2 ScalarMat2::adjugate() const {
    ScalarMat2 out(ring);
    out.e[0] = e[3];
    out.e[1] = -e[1];
    out.e[2] = -e[2];
    out.e[3] = e[0];
    return out;
}

ScalarMat2 random_sl2(const Ring& field, SplitMix64& rng) {
    if (!field.is_field()) throw std::invalid_argument("random_sl2: field must be Q or F_p");
    ScalarMat2 m = ScalarMat2::identity(field);
    int shears = 3 + static_cast<int>(rng.below(4));
    for (int i = 0; i < shears; ++i) {
        Scalar a = field.kind == RingKind::PrimeField
                       ? Scalar(field, static_cast<long>(rng.below(field.p)))
                       : Scalar(field, rng.range(-9, 9));
        ScalarMat2 shear = ScalarMat2::identity(field);
        if (rng.below(2) == 0) shear.e[1] = a;
        else shear.e[2] = a;
        m = m.mul(shear);
    }
    Scalar c = Scalar::one(field);
    if (field.kind == RingKind::PrimeField) {
        c = Scalar(field, static_cast<long>(1 + rng.below(field.p - 1)));
    } else {
        long v = rng.range(1, 5);
        c = rng.below(2) == 0 ? Scalar(field, v) : Scalar::one(field) / Scalar(field, v);
        if (rng.below(2) == 0) c = -c;
    }
    ScalarMat2 diag(field);
    diag.e[0] = c;
    diag.e[3] = c.inverse();
    m = m.mul(diag);
    return m;
}

}  // namespace semi2x2
