#ifndef SEMI2X2_MATRIX_HPP
#define SEMI2X2_MATRIX_HPP

#include <vector>

#include "semi2x2/polynomial.hpp"

namespace semi2x2 {

// Dense matrix of polynomials sharing one ring. Immutable in spirit: the
// builders below return fresh values and the arithmetic is pure.
class GenericMatrix {
public:
    GenericMatrix(const Ring& ring, int rows, int cols);

    static GenericMatrix identity(const Ring& ring, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    // 1-based access, matching the index conventions of the variables.
    const Polynomial& at(int r, int c) const;
    void set(int r, int c, Polynomial v);

    GenericMatrix operator+(const GenericMatrix& o) const;
    GenericMatrix operator*(const GenericMatrix& o) const;
    GenericMatrix scaled(const Polynomial& f) const;
    Polynomial trace() const;
    GenericMatrix substitute(const std::map<VariableId, Polynomial>& assignment) const;

    bool operator==(const GenericMatrix& o) const;

private:
    int rows_, cols_;
    Ring ring_;
    std::vector<Polynomial> e_;  // row-major
};

// The generic 2x2 matrix x_k with entries x[i,j,k].
GenericMatrix generic_x(const Ring& ring, int k);

// The generic q x q matrix t_k with entries t[r,s,k].
GenericMatrix generic_t(const Ring& ring, int k, int q);

// Kronecker product with the block convention used throughout: for a of size
// n x n and b of size q x q the result is the q x q block grid whose (r,s)
// block is b[r,s] * a (scalar from the SECOND factor, matrix from the first).
GenericMatrix kronecker(const GenericMatrix& a, const GenericMatrix& b);

// x (x) t = sum over k of kronecker(x_k, t_k), the 2q x 2q carrier of the
// spanning family.
GenericMatrix x_otimes_t(const Ring& ring, int m, int q);

// Block assembly for the cyclic xi determinant and its variants: each
// placement drops tag-scalar * x_slot into a 2x2 block position, everything
// else is the zero block.
struct BlockTag {
    enum Kind { None, Z, W } kind = None;
    int index = 0;

    static BlockTag none() { return {None, 0}; }
    static BlockTag z(int r) { return {Z, r}; }
    static BlockTag w(int r) { return {W, r}; }
};

struct BlockPlacement {
    int block_row = 0, block_col = 0;  // 1-based, in 1..q
    BlockTag tag;
    int slot = 0;
};

struct BlockSpec {
    int q = 0;
    std::vector<BlockPlacement> placements;
};

GenericMatrix assemble_block(const Ring& ring, const BlockSpec& spec);

// Division-free exact determinant: dynamic programming over the column-subset
// lattice, O(n * 2^n) polynomial multiplications. Sizes above 16 are refused.
// An optional filter prunes monomials after every accumulation step; it must
// only drop monomials that cannot divide into the coefficient being
// extracted downstream.
Polynomial determinant(const GenericMatrix& a, const MonomialFilter& keep = nullptr);

// Cofactor expansion, exponential; validation fallback for sizes <= 5.
Polynomial determinant_cofactor(const GenericMatrix& a);

}  // namespace semi2x2

#endif
