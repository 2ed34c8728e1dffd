#ifndef SEMI2X2_CATALOG_HPP
#define SEMI2X2_CATALOG_HPP

#include <optional>
#include <tuple>

#include "semi2x2/matrix.hpp"
#include "semi2x2/rng.hpp"

namespace semi2x2 {

// The two generator regimes the theory distinguishes: characteristic two
// keeps the cyclic invariants of every even arity, characteristic zero or
// odd keeps only the arity-4 ones.
enum class CharRegime { ZeroOrOdd, Two };

CharRegime regime_for(const Ring& ring);

/******** catalog descriptors ********/

struct GeneratorDescriptor {
    enum class Kind { Det, Bracket, Xi };
    Kind kind = Kind::Det;
    std::vector<int> slots;  // Det {k}; Bracket {l,r} with l<r; Xi {k1<...<k2q}, 2q >= 4

    static GeneratorDescriptor det(int k) { return {Kind::Det, {k}}; }
    static GeneratorDescriptor bracket(int l, int r);
    static GeneratorDescriptor xi(std::vector<int> slots);

    int degree() const { return kind == Kind::Xi ? static_cast<int>(slots.size()) : 2; }
    MultiDegree multidegree(int m) const;
    Polynomial expand(const Ring& ring) const;

    std::string token() const;  // "det(1)", "br(1,2)", "xi(1,2,3,4)"
    static GeneratorDescriptor parse(const std::string& token);

    bool operator==(const GeneratorDescriptor&) const = default;
    auto operator<=>(const GeneratorDescriptor&) const = default;
};

// The generating system for m slots in the given regime: all det(x_k), all
// brackets over l < r, and the cyclic xi invariants over strictly increasing
// index tuples (every even arity 4..m in characteristic two, arity 4 only
// otherwise).
std::vector<GeneratorDescriptor> enumerate_generators(int m, CharRegime regime);

/******** the generator polynomials ********/

// det(x_k) = x[1,1,k] x[2,2,k] - x[1,2,k] x[2,1,k]
Polynomial det_generator(const Ring& ring, int k);

// <x_l | x_r>, the zw-coefficient of det(z x_l + w x_r); symmetric in (l,r).
Polynomial bracket(const Ring& ring, int l, int r);

// xi on 2q slots (q >= 2): coefficient of z_1..z_q w_1..w_q in the cyclic
// block determinant with diagonal blocks z_r x_{k_r}, superdiagonal blocks
// w_r x_{k_{q+r}} and corner block w_q x_{k_{2q}}. Repeated or unsorted slot
// tuples are taken verbatim; no sign normalization happens here.
Polynomial xi(const Ring& ring, const std::vector<int>& slots);

// Builds the block layout that xi takes the determinant of.
BlockSpec xi_block_spec(const std::vector<int>& slots);

// tr(x_{w_1} x_{w_2} ... ) for a nonempty word of slots.
Polynomial trace_poly(const Ring& ring, const std::vector<int>& word);

// Substitution of the last slot by the identity matrix, carrying
// semi-invariants in m slots onto conjugation invariants in m-1 slots.
Polynomial sigma_star(const Polynomial& f, int m);

/******** the spanning family ********/

// Exponent pattern alpha in (N_0^{q x q})^m selecting the monomial t^alpha.
struct ExponentPattern {
    int q = 0;
    std::map<std::tuple<int, int, int>, unsigned> alpha;  // (r,s,k) -> exponent > 0

    unsigned total() const;
    unsigned cell_sum(int r, int s) const;
    std::vector<int> slots_at(int r, int s) const;  // with multiplicity
    MultiDegree multidegree(int m) const;
    Monomial t_monomial() const;
    std::string str() const;

    bool operator==(const ExponentPattern&) const = default;
};

// Coef(t^alpha, det(x (x) t)): the general spanning element. May be zero.
Polynomial spanning_element(const Ring& ring, const ExponentPattern& alpha, int m);

/******** canonicalization of exponent patterns ********/

struct CycleForm {
    std::vector<int> slots;  // ordered per the standard cyclic layout, length 2c
    int sign = 1;
};

struct DetFactorForm {
    int row = 0, col = 0;    // the cell whose summed exponent is 2
    std::vector<int> slots;  // {k,k} -> det(x_k); {k,l} -> bracket(k,l)
    ExponentPattern remainder;  // the pattern on the remaining rows and columns
};

// Verdict of the pattern analysis:
//   Zero        the spanning element vanishes (degree or row/column counting)
//   DetFactor   a cell of summed exponent 2 splits off det or bracket
//   SingleCycle the support is one cycle; slots reconstruct xi exactly
//   Product     several disjoint cycles; the element is the product of xis
struct CanonicalForm {
    enum class Verdict { Zero, DetFactor, SingleCycle, Product };
    Verdict verdict = Verdict::Zero;
    std::optional<DetFactorForm> det_factor;
    std::vector<CycleForm> cycles;
};

CanonicalForm canonicalize_alpha(const ExponentPattern& alpha);

// Expands the signed product the canonical form stands for; recursing through
// det-factor remainders. Satisfies reconstruct(...) == spanning_element(...)
// exactly, which the test suites verify against the determinant route.
Polynomial reconstruct(const CanonicalForm& form, const Ring& ring);

/******** collapse identities ********/

struct CollapseReport {
    int q = 0;
    bool ok = false;
    Polynomial difference;  // lhs - rhs; zero iff ok
};

// Substituting x_{q+1} -> x_1 collapses the cyclic invariant:
//   q = 2: xi(1,2,1,4) = -det(x_1) * <x_2|x_4>
//   q > 2: xi(1..q,1,q+2..2q) = -det(x_1) * xi(2..q, q+2..2q)
// asserted as exact polynomial identities over the given ring.
CollapseReport collapse_identity(const Ring& ring, int q);

/******** pattern enumeration ********/

// All valid patterns of total degree 2q over m slots (block row/column sums
// exactly 2), deduplicated under simultaneous row/column renumbering of the
// t-components, which leaves the spanning element unchanged.
std::vector<ExponentPattern> enumerate_alpha_orbits(int q, int m);

// Uniform-ish random valid pattern: sum of two random permutation supports
// with random slot assignments.
ExponentPattern random_alpha(int q, int m, SplitMix64& rng);

// All q x q supports with entries in {0,1,2} and row/column sums 2.
std::vector<std::vector<std::vector<int>>> enumerate_supports(int q);

}  // namespace semi2x2

#endif
