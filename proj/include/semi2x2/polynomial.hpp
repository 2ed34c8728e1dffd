#ifndef SEMI2X2_POLYNOMIAL_HPP
#define SEMI2X2_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "semi2x2/ring.hpp"
#include "semi2x2/variable.hpp"

namespace semi2x2 {

// Degree in each matrix slot. Entry k-1 is the total degree in the x[.,.,k]
// variables; for every multihomogeneous invariant the entries sum to the
// total degree.
using MultiDegree = std::vector<int>;

std::string multidegree_str(const MultiDegree&);

// Sparse exponent map over the fixed variable order. No zero exponents stored.
class Monomial {
public:
    Monomial() = default;  // the empty monomial, i.e. 1

    static Monomial variable(VariableId v, unsigned exp = 1);
    static Monomial from_factors(std::vector<std::pair<VariableId, unsigned>> factors);

    const std::vector<std::pair<VariableId, unsigned>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned exponent_of(VariableId v) const;
    unsigned total_degree() const;
    unsigned degree_in_class(VarClass c) const;

    Monomial operator*(const Monomial& o) const;

    // Split into the sub-monomial over `classes` and the rest.
    std::pair<Monomial, Monomial> split_by_class(const std::set<VarClass>& classes) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    // Lexicographic: at the smallest variable where the exponents differ, the
    // monomial with the larger exponent is the larger monomial.
    bool operator<(const Monomial& o) const;

    std::string str() const;  // "x[1,1,1]^2 * t[1,1,1]"; "1" for the empty monomial

private:
    std::vector<std::pair<VariableId, unsigned>> factors_;  // sorted by VariableId
};

// Predicate deciding which monomials an operation keeps. Used to prune
// determinant expansions to the coefficient actually being extracted.
using MonomialFilter = std::function<bool(const Monomial&)>;

// Sparse exact multivariate polynomial over a runtime-selected ring.
// Immutable value semantics: every operation returns a fresh normal form
// (no zero coefficients stored).
class Polynomial {
public:
    Polynomial() : ring_(Ring::integers()) {}
    explicit Polynomial(const Ring& ring) : ring_(ring) {}

    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, long c) { return constant(Scalar(r, c)); }
    static Polynomial constant(const Scalar& c);
    static Polynomial variable(const Ring& r, VariableId v, unsigned exp = 1);
    static Polynomial term(const Scalar& coeff, const Monomial& m);

    const Ring& ring() const { return ring_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Scalar coefficient(const Monomial& m) const;
    unsigned total_degree() const;  // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Product keeping only monomials accepted by `keep`. Sound whenever the
    // dropped monomials could never re-enter the target coefficient (the
    // exponents of already-placed variables only grow under multiplication).
    Polynomial mul_filtered(const Polynomial& o, const MonomialFilter& keep) const;
    Polynomial filtered(const MonomialFilter& keep) const;

    // Coefficient of exactly `pattern` in the variables of `classes`: the
    // polynomial in the remaining variables multiplying that monomial, with
    // every other monomial in the selected classes discarded.
    Polynomial coeff_extract(const Monomial& pattern, const std::set<VarClass>& classes) const;
    Polynomial coeff_extract(const Monomial& pattern) const;  // classes inferred from pattern

    // Partition of the terms by N_0^m multidegree. Requires an X-only
    // polynomial; the parts sum back to the input.
    std::map<MultiDegree, Polynomial> multidegree_split(int m) const;
    // The single multidegree of a multihomogeneous polynomial; nullopt if
    // zero or mixed.
    std::optional<MultiDegree> multidegree(int m) const;

    // Ring-homomorphic substitution; unassigned variables are kept.
    Polynomial substitute(const std::map<VariableId, Polynomial>& assignment) const;
    Polynomial substitute_scalars(const std::map<VariableId, Scalar>& assignment) const;

    // Full evaluation; every variable present must be assigned.
    Scalar evaluate(const std::map<VariableId, Scalar>& point) const;

    // Coefficient-wise image under the natural ring map (e.g. Z -> F_2).
    Polynomial convert_to(const Ring& target) const;

    // Deterministic text form, terms in descending monomial order:
    //   "coeff * var^exp * ..." joined by " + ", e.g.
    //   "1 * x[1,1,1] * x[2,2,1] + -1 * x[1,2,1] * x[2,1,1]"; "0" when zero.
    std::string str() const;
    static Polynomial parse(const std::string& text, const Ring& ring);

private:
    Ring ring_;
    std::map<Monomial, Scalar> terms_;

    void add_term(const Monomial& m, const Scalar& c);  // accumulate + normalize
    void check_same_ring(const Polynomial& o) const;
};

}  // namespace semi2x2

#endif
