#ifndef SEMI2X2_SEPARATOR_HPP
#define SEMI2X2_SEPARATOR_HPP

#include "semi2x2/catalog.hpp"
#include "semi2x2/numeric.hpp"

namespace semi2x2 {

// A point of the representation space: m matrices over F_p.
struct MatrixTuple {
    std::uint64_t p = 2;
    TupleFp entries;  // 4m residues, slot-major

    int m() const { return static_cast<int>(entries.size() / 4); }
    bool operator==(const MatrixTuple&) const = default;
};

MatrixTuple random_matrix_tuple(int m, std::uint64_t p, SplitMix64& rng);

// Exact values of the given X-polynomials (over Z) at the tuple, in order.
std::vector<std::uint64_t> evaluate_set(const std::vector<Polynomial>& set, const MatrixTuple& a);

// Value of the spanning element Coef(t^alpha, det(A (x) t)) at a numeric
// tuple, computed by the same pruned determinant expansion but over t only.
std::uint64_t spanning_value_at(const ExponentPattern& alpha, const MatrixTuple& a);

// The separating family S_m: all det(x_k), all brackets, all arity-4 xi's.
std::vector<GeneratorDescriptor> separating_family(int m);

// tr(x_k), det(x_k), tr(x_l x_r), tr(x_k1 x_k2 x_k3): the irredundant
// separating system of conjugation invariants, as labeled polynomials.
std::vector<std::pair<std::string, Polynomial>> conjugation_separating_set(int m);

/******** separating-system fuzzing ********/

struct SeparationCounterexample {
    MatrixTuple a, b;
    std::string reference_label;  // the spanning element that separates
    std::uint64_t value_a = 0, value_b = 0;
};

struct SeparationReport {
    int m = 0;
    int reference_degree = 0;
    std::uint64_t p = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    int candidate_agreements = 0;  // trials in which the whole candidate set agreed
    std::vector<SeparationCounterexample> counterexamples;
    // finite-field sampling can only refute, never certify, the
    // algebraically-closed separating property
    std::string caveat =
        "necessary-condition check: candidate agreement is compared against the reference family "
        "at random finite-field points; no closed-orbit statement is implied";

    bool ok() const { return counterexamples.empty(); }
};

// Per trial draws A, B; when every candidate value agrees, every spanning
// element of degree <= reference_degree is compared at A and B and each
// disagreement is recorded (after re-verification).
SeparationReport separating_fuzz(const std::vector<std::pair<std::string, Polynomial>>& candidate,
                                 int reference_degree, int m, std::uint64_t p, int trials,
                                 std::uint64_t seed);

/******** irredundancy witnesses ********/

struct WitnessResult {
    bool found = false;
    long long nodes_used = 0;
    MatrixTuple a, b;                // valid iff found
    std::uint64_t removed_a = 0, removed_b = 0;
    std::string stage;               // which search stage found it
};

// Searches for A, B agreeing on candidate minus removed but differing on
// removed: zero-padding to the removed generator's active slots, exhaustive
// signature-bucketed search over F_2 then F_3, then seeded random search over
// the requested field. A nullopt-like {found=false} result is inconclusive,
// not a refutation.
WitnessResult irredundancy_witness(const std::vector<GeneratorDescriptor>& candidate,
                                   const GeneratorDescriptor& removed, int m, const Ring& field,
                                   long long budget, std::uint64_t seed = 1);

}  // namespace semi2x2

#endif
