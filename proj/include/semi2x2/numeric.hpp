#ifndef SEMI2X2_NUMERIC_HPP
#define SEMI2X2_NUMERIC_HPP

#include <array>
#include <vector>

#include "semi2x2/polynomial.hpp"
#include "semi2x2/rng.hpp"

namespace semi2x2 {

/******** fast arithmetic over F_p for the fuzz loops ********/

// 2x2 matrix of residues, row-major.
struct Mat2 {
    std::array<std::uint64_t, 4> e{0, 0, 0, 0};

    static Mat2 identity() { return {{1, 0, 0, 1}}; }
    std::uint64_t det(std::uint64_t p) const;
    Mat2 mul(const Mat2& o, std::uint64_t p) const;
    // adjugate = inverse for determinant-1 matrices
    Mat2 adjugate(std::uint64_t p) const;
    bool operator==(const Mat2&) const = default;
};

// m-tuple of 2x2 matrices over F_p; entry (i,j) of slot k lives at
// (k-1)*4 + (i-1)*2 + (j-1).
using TupleFp = std::vector<std::uint64_t>;

TupleFp random_tuple_fp(int m, std::uint64_t p, SplitMix64& rng);
Mat2 tuple_slot(const TupleFp& a, int k);
void set_tuple_slot(TupleFp& a, int k, const Mat2& v);

// the action (g,h) . A = (g A_1 h^-1, ..., g A_m h^-1)
TupleFp transform_tuple(const TupleFp& a, const Mat2& g, const Mat2& h, std::uint64_t p);

// determinant-1 matrix built from 3-6 random elementary shears and one
// diagonal [[c,0],[0,c^-1]]
Mat2 random_sl2_fp(std::uint64_t p, SplitMix64& rng);

// X-variable polynomial flattened for repeated evaluation at F_p points.
class CompiledPoly {
public:
    static CompiledPoly compile(const Polynomial& f, std::uint64_t p);
    std::uint64_t eval(const TupleFp& point, std::uint64_t p) const;

private:
    struct Term {
        std::uint64_t coeff;
        std::vector<std::pair<int, unsigned>> factors;  // dense index, exponent
    };
    std::vector<Term> terms_;
};

/******** exact numeric matrices over any field ring ********/

struct ScalarMat2 {
    Ring ring;
    std::array<Scalar, 4> e;

    explicit ScalarMat2(const Ring& r)
        : ring(r), e{Scalar::zero(r), Scalar::zero(r), Scalar::zero(r), Scalar::zero(r)} {}
    static ScalarMat2 identity(const Ring& r);

    Scalar det() const { return e[0] * e[3] - e[1] * e[2]; }
    ScalarMat2 mul(const ScalarMat2& o) const;
    ScalarMat2 adjugate() const;
};

// det-1 matrix over Q or F_p from the same shear/diagonal recipe
ScalarMat2 random_sl2(const Ring& field, SplitMix64& rng);

}  // namespace semi2x2

#endif
