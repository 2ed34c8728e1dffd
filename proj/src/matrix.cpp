#include "semi2x2/matrix.hpp"

#include <bit>

namespace semi2x2 {

GenericMatrix::GenericMatrix(const Ring& ring, int rows, int cols)
    : rows_(rows), cols_(cols), ring_(ring), e_(static_cast<std::size_t>(rows) * cols, Polynomial(ring)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("GenericMatrix: non-positive dimension");
}

GenericMatrix GenericMatrix::identity(const Ring& ring, int n) {
    GenericMatrix m(ring, n, n);
    for (int i = 1; i <= n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
    return m;
}

const Polynomial& GenericMatrix::at(int r, int c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::out_of_range("GenericMatrix::at");
    return e_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)];
}

void GenericMatrix::set(int r, int c, Polynomial v) {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::out_of_range("GenericMatrix::set");
    if (!(v.ring() == ring_)) throw std::invalid_argument("GenericMatrix::set: ring mismatch");
    e_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)] = std::move(v);
}

GenericMatrix GenericMatrix::operator+(const GenericMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("GenericMatrix: shape mismatch in +");
    GenericMatrix out(ring_, rows_, cols_);
    for (int r = 1; r <= rows_; ++r)
        for (int c = 1; c <= cols_; ++c) out.set(r, c, at(r, c) + o.at(r, c));
    return out;
}

GenericMatrix GenericMatrix::operator*(const GenericMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("GenericMatrix: inner dimensions disagree in *");
    GenericMatrix out(ring_, rows_, o.cols_);
    for (int r = 1; r <= rows_; ++r)
        for (int c = 1; c <= o.cols_; ++c) {
            Polynomial acc(ring_);
            for (int k = 1; k <= cols_; ++k) acc = acc + at(r, k) * o.at(k, c);
            out.set(r, c, acc);
        }
    return out;
}

GenericMatrix GenericMatrix::scaled(const Polynomial& f) const {
    GenericMatrix out(ring_, rows_, cols_);
    for (int r = 1; r <= rows_; ++r)
        for (int c = 1; c <= cols_; ++c) out.set(r, c, at(r, c) * f);
    return out;
}

Polynomial GenericMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("GenericMatrix::trace: non-square");
    Polynomial acc(ring_);
    for (int i = 1; i <= rows_; ++i) acc = acc + at(i, i);
    return acc;
}

GenericMatrix GenericMatrix::substitute(const std::map<VariableId, Polynomial>& assignment) const {
    GenericMatrix out(ring_, rows_, cols_);
    for (int r = 1; r <= rows_; ++r)
        for (int c = 1; c <= cols_; ++c) out.set(r, c, at(r, c).substitute(assignment));
    return out;
}

bool GenericMatrix::operator==(const GenericMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && e_ == o.e_;
}

/******** builders ********/

GenericMatrix generic_x(const Ring& ring, int k) {
    if (k < 1) throw std::invalid_argument("generic_x: slot out of range");
    GenericMatrix m(ring, 2, 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) m.set(i, j, Polynomial::variable(ring, VariableId::x(i, j, k)));
    return m;
}

GenericMatrix generic_t(const Ring& ring, int k, int q) {
    if (k < 1 || q < 1) throw std::invalid_argument("generic_t: index out of range");
    GenericMatrix m(ring, q, q);
    for (int r = 1; r <= q; ++r)
        for (int s = 1; s <= q; ++s) m.set(r, s, Polynomial::variable(ring, VariableId::t(r, s, k)));
    return m;
}

GenericMatrix kronecker(const GenericMatrix& a, const GenericMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw std::invalid_argument("kronecker: square inputs required");
    if (!(a.ring() == b.ring())) throw std::invalid_argument("kronecker: ring mismatch");
    int n = a.rows(), q = b.rows();
    GenericMatrix out(a.ring(), n * q, n * q);
    for (int r = 1; r <= q; ++r)
        for (int s = 1; s <= q; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    out.set((r - 1) * n + i, (s - 1) * n + j, b.at(r, s) * a.at(i, j));
    return out;
}

GenericMatrix x_otimes_t(const Ring& ring, int m, int q) {
    if (m < 1 || q < 1) throw std::invalid_argument("x_otimes_t: m and q must be positive");
    GenericMatrix acc = kronecker(generic_x(ring, 1), generic_t(ring, 1, q));
    for (int k = 2; k <= m; ++k)
        acc = acc + kronecker(generic_x(ring, k), generic_t(ring, k, q));
    return acc;
}

GenericMatrix assemble_block(const Ring& ring, const BlockSpec& spec) {
    if (spec.q < 1) throw std::invalid_argument("assemble_block: q must be positive");
    GenericMatrix out(ring, 2 * spec.q, 2 * spec.q);
    for (const auto& p : spec.placements) {
        if (p.block_row < 1 || p.block_row > spec.q || p.block_col < 1 || p.block_col > spec.q)
            throw std::invalid_argument("assemble_block: placement out of range");
        Polynomial scale = Polynomial::constant(ring, 1);
        if (p.tag.kind == BlockTag::Z) scale = Polynomial::variable(ring, VariableId::z(p.tag.index));
        if (p.tag.kind == BlockTag::W) scale = Polynomial::variable(ring, VariableId::w(p.tag.index));
        GenericMatrix block = generic_x(ring, p.slot).scaled(scale);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                out.set((p.block_row - 1) * 2 + i, (p.block_col - 1) * 2 + j,
                        out.at((p.block_row - 1) * 2 + i, (p.block_col - 1) * 2 + j) + block.at(i, j));
    }
    return out;
}

/******** determinants ********/

Polynomial determinant(const GenericMatrix& a, const MonomialFilter& keep) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: non-square matrix");
    int n = a.rows();
    if (n > 16) throw std::invalid_argument("determinant: size " + std::to_string(n) + " exceeds the 16x16 ceiling");

    // dp[S] = minor over rows {1..|S|} and column set S, built by expanding
    // along the last row of the growing top band
    std::vector<Polynomial> dp(std::size_t{1} << n, Polynomial(a.ring()));
    dp[0] = Polynomial::constant(a.ring(), 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        int row = std::popcount(mask);  // 1-based row being expanded
        Polynomial acc(a.ring());
        int idx = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (std::uint32_t{1} << c))) continue;
            const Polynomial& entry = a.at(row, c + 1);
            if (!entry.is_zero()) {
                Polynomial contrib = entry.mul_filtered(dp[mask ^ (std::uint32_t{1} << c)], keep);
                bool negative = ((row - 1) + idx) & 1;
                acc = negative ? acc - contrib : acc + contrib;
            }
            ++idx;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(std::size_t{1} << n) - 1];
}

namespace {

Polynomial det_cofactor_rec(const GenericMatrix& a, std::vector<int>& cols, int row) {
    if (cols.empty()) return Polynomial::constant(a.ring(), 1);
    Polynomial acc(a.ring());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        int c = cols[i];
        if (a.at(row, c).is_zero()) continue;
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        Polynomial sub = a.at(row, c) * det_cofactor_rec(a, rest, row + 1);
        acc = (i % 2 == 0) ? acc + sub : acc - sub;
    }
    return acc;
}

}  // namespace

Polynomial determinant_cofactor(const GenericMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant_cofactor: non-square matrix");
    std::vector<int> cols(a.cols());
    for (int c = 0; c < a.cols(); ++c) cols[static_cast<std::size_t>(c)] = c + 1;
    return det_cofactor_rec(a, cols, 1);
}

}  // namespace semi2x2
