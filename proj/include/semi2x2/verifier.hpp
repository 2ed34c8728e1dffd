#ifndef SEMI2X2_VERIFIER_HPP
#define SEMI2X2_VERIFIER_HPP

#include "semi2x2/catalog.hpp"
#include "semi2x2/numeric.hpp"

namespace semi2x2 {

// A pair (g, h) acting by A_k -> g A_k h^-1; both determinants are 1 exactly.
struct GroupElementPair {
    ScalarMat2 g, h;

    GroupElementPair(ScalarMat2 g_, ScalarMat2 h_);
};

/******** exact linear spans ********/

// Incremental exact row space over Q or F_p with combination tracking.
// Rows are kept pivot-normalized (pivot = smallest monomial, coefficient 1),
// so membership is a single ascending reduction pass.
class ExactSpan {
public:
    explicit ExactSpan(const Ring& field);

    // false if f was already in the span (rank unchanged)
    bool insert(const Polynomial& f, const std::string& label);

    // residual of f modulo the span plus the combination of inserted labels
    // that realizes f - residual
    std::pair<Polynomial, std::map<std::string, Scalar>> reduce(const Polynomial& f) const;

    bool contains(const Polynomial& f) const { return reduce(f).first.is_zero(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const Ring& field() const { return field_; }

private:
    struct Row {
        std::map<Monomial, Scalar> v;
        std::map<std::string, Scalar> comb;
    };
    Ring field_;
    std::map<Monomial, Row> rows_;  // pivot monomial -> normalized row
};

struct SpanBasis {
    MultiDegree multidegree;
    Ring field;
    std::vector<std::pair<std::string, Polynomial>> vectors;  // label -> polynomial over field

    // checks the field kind and that every vector is multihomogeneous of the
    // stated multidegree
    static SpanBasis make(MultiDegree multidegree, const Ring& field,
                          std::vector<std::pair<std::string, Polynomial>> vectors);
};

struct MembershipCertificate {
    bool inside = false;
    std::map<std::string, Scalar> combination;  // present iff inside
};

// Exact Gaussian elimination over the basis field. When the query is inside,
// the returned combination is re-substituted and checked against the query
// before returning.
MembershipCertificate in_span(const Polynomial& query, const SpanBasis& basis);

// All products of >= 2 catalog generators whose multidegrees sum to target.
// Empty when the target total degree is below 4.
SpanBasis products_of_multidegree(const std::vector<GeneratorDescriptor>& generators,
                                  const MultiDegree& target, const Ring& field);

/******** invariance fuzzing ********/

struct InvarianceReport {
    std::string label;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<int> failing_trials;  // indices of trials where f(gAh^-1) != f(A)
    bool ok() const { return failing_trials.empty(); }
};

// Draws (g, h) and a random tuple per trial and compares f on the original
// and the translated tuple. Failures are data, not errors.
InvarianceReport check_invariance(const Polynomial& f, int m, int trials, const Ring& field,
                                  std::uint64_t seed, const std::string& label = "");

/******** decomposability and spanning ********/

struct DecomposabilityResult {
    GeneratorDescriptor descriptor;
    bool decomposable = false;
    MembershipCertificate certificate;  // the combination when decomposable
    int basis_size = 0;
};

// Graded Nakayama test: the generator is decomposable iff it lies in the
// span of the products of at-least-two catalog generators at its own
// multidegree.
DecomposabilityResult is_decomposable(const GeneratorDescriptor& desc,
                                      const std::vector<GeneratorDescriptor>& catalog, int m,
                                      const Ring& field);

struct SpanningCheckReport {
    int m = 0, q = 0;
    Ring field;
    bool ok = false;
    int multidegrees = 0;
    int alpha_vectors = 0;
    int product_vectors = 0;
    std::vector<std::string> witnesses;  // failures, with the side that broke
};

// Per multidegree of total degree 2q: the span of all spanning elements
// equals the span of all degree-2q products of catalog generators together
// with the degree-2q generators themselves.
SpanningCheckReport spanning_check(int m, int q, const Ring& field);

/******** exact identity suite ********/

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // difference polynomial or mismatch description when failing
};

struct IdentityReport {
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

// The defining bracket expansion, the two trace identities, the collapse
// identities for q = 2, 3 (all exact, over Z and again over F_2), and the
// sign/repeated-slot congruences tested as span membership at their
// multidegrees.
IdentityReport identity_suite();

}  // namespace semi2x2

#endif
