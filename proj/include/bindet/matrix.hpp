#pragma once

// Dense exact linear algebra over RatFunc: fraction-free (Bareiss)
// determinants, minors, cofactors, linear solves, and the elementary
// transforms L, R, R-tilde used by the matrix reductions.
//
// Indices on the public surface are 1-based, matching the 1 <= i,j <= n
// convention used throughout the source formulas.

#include "bindet/rat_func.hpp"

#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace bindet {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    // entry(i, j) with 1-based i, j.
    static Matrix build(std::size_t rows, std::size_t cols,
                        const std::function<RatFunc(std::size_t, std::size_t)>& entry) {
        Matrix m(rows, cols);
        for (std::size_t i = 1; i <= rows; ++i)
            for (std::size_t j = 1; j <= cols; ++j) m(i, j) = entry(i, j);
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 1; i <= n; ++i) m(i, i) = RatFunc(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    RatFunc& operator()(std::size_t i, std::size_t j) {
        check_index(i, j);
        return e_[(i - 1) * cols_ + (j - 1)];
    }
    const RatFunc& operator()(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return e_[(i - 1) * cols_ + (j - 1)];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 1; i <= a.rows_; ++i)
            for (std::size_t k = 1; k <= a.cols_; ++k) {
                const RatFunc& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 1; j <= b.cols_; ++j) {
                    const RatFunc& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 1; i <= rows_; ++i)
            for (std::size_t j = 1; j <= cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Matrix with the given 1-based rows/columns deleted.
    Matrix submatrix_deleting(const std::set<std::size_t>& del_rows,
                              const std::set<std::size_t>& del_cols) const {
        for (auto i : del_rows)
            if (i < 1 || i > rows_) throw std::invalid_argument("Matrix: deleted row out of range");
        for (auto j : del_cols)
            if (j < 1 || j > cols_) throw std::invalid_argument("Matrix: deleted column out of range");
        Matrix r(rows_ - del_rows.size(), cols_ - del_cols.size());
        std::size_t ri = 0;
        for (std::size_t i = 1; i <= rows_; ++i) {
            if (del_rows.count(i)) continue;
            ++ri;
            std::size_t rj = 0;
            for (std::size_t j = 1; j <= cols_; ++j) {
                if (del_cols.count(j)) continue;
                r(ri, ++rj) = (*this)(i, j);
            }
        }
        return r;
    }

    RatFunc det() const;
    std::vector<RatFunc> solve(const std::vector<RatFunc>& rhs) const;

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::out_of_range("Matrix: index out of range (indices are 1-based)");
    }

    std::size_t rows_, cols_;
    std::vector<RatFunc> e_;
};

namespace detail {

// Clears denominators row by row; returns the polynomial grid (0-based)
// and the product of the row multipliers.
inline std::pair<std::vector<std::vector<Poly>>, Poly> to_poly_grid(const Matrix& m) {
    std::vector<std::vector<Poly>> g(m.rows(), std::vector<Poly>(m.cols()));
    Poly total{Rational(1)};
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        Poly mult{Rational(1)};
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            const Poly& d = m(i, j).den();
            if (d.degree() > 0) {
                Poly g2 = gcd(mult, d);
                mult = mult * d.divexact(g2);
            }
        }
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            const RatFunc& v = m(i, j);
            g[i - 1][j - 1] = v.num() * mult.divexact(v.den());
        }
        total *= mult;
    }
    return {std::move(g), std::move(total)};
}

// Fraction-free Bareiss elimination on a 0-based polynomial grid with
// ncols >= nrows; reduces in place to upper-triangular form.  Pivoting
// scans down the column for the first nonzero entry.  Returns the sign
// from the row swaps, or 0 if the left square block is singular.
inline int bareiss(std::vector<std::vector<Poly>>& a) {
    const std::size_t n = a.size();
    const std::size_t m = n ? a[0].size() : 0;
    int sign = 1;
    Poly prev{Rational(1)};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev);
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }
    if (n && a[n - 1][n - 1].is_zero()) return 0;
    return sign;
}

}  // namespace detail

inline RatFunc Matrix::det() const {
    if (!is_square()) throw std::invalid_argument("Matrix::det: non-square matrix");
    if (rows_ == 0) return RatFunc(1);  // empty determinant convention
    auto [grid, mult] = detail::to_poly_grid(*this);
    int sign = detail::bareiss(grid);
    if (sign == 0) return RatFunc(0);
    // After Bareiss the last pivot is the determinant of the cleared matrix.
    Poly d = grid[rows_ - 1][rows_ - 1];
    if (sign < 0) d = -d;
    return RatFunc(std::move(d), std::move(mult));
}

// Exact solution of A x = rhs; throws singular_error when det(A) = 0.
inline std::vector<RatFunc> Matrix::solve(const std::vector<RatFunc>& rhs) const {
    if (!is_square()) throw std::invalid_argument("Matrix::solve: non-square matrix");
    if (rhs.size() != rows_) throw std::invalid_argument("Matrix::solve: rhs size mismatch");
    const std::size_t n = rows_;
    if (n == 0) return {};
    Matrix aug(n, n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + 1) = rhs[i - 1];
    }
    auto [grid, mult] = detail::to_poly_grid(aug);
    (void)mult;  // row scaling does not change the solution
    if (detail::bareiss(grid) == 0)
        throw singular_error("Matrix::solve: singular coefficient matrix");
    std::vector<RatFunc> x(n);
    for (std::size_t i = n; i-- > 0;) {
        RatFunc acc{grid[i][n]};
        for (std::size_t j = i + 1; j < n; ++j) acc -= RatFunc(grid[i][j]) * x[j];
        x[i] = acc / RatFunc(grid[i][i]);
    }
    return x;
}

// Rows I and columns J to delete, ascending, with |I| = |J|.
struct MinorSpec {
    std::set<std::size_t> deleted_rows;
    std::set<std::size_t> deleted_cols;
};

inline RatFunc minor_det(const Matrix& m, const MinorSpec& spec) {
    if (!m.is_square()) throw std::invalid_argument("minor_det: non-square matrix");
    if (spec.deleted_rows.size() != spec.deleted_cols.size())
        throw std::invalid_argument("minor_det: |I| != |J|");
    return m.submatrix_deleting(spec.deleted_rows, spec.deleted_cols).det();
}

inline RatFunc cofactor(const Matrix& m, std::size_t i, std::size_t j) {
    if (!m.is_square()) throw std::invalid_argument("cofactor: non-square matrix");
    if (i < 1 || i > m.rows() || j < 1 || j > m.cols())
        throw std::out_of_range("cofactor: index out of range");
    RatFunc d = minor_det(m, {{i}, {j}});
    return (parity_sign(static_cast<long>(i + j)) < 0) ? -d : d;
}

// The elementary transforms:
//   L: lower bidiagonal, 1 on the diagonal, -1 below (row differences),
//   R: upper triangular of all ones (column prefix sums),
//   Rtilde: R with the first two columns replaced by (e2 | -e1).
enum class TransformKind { L, R, Rtilde };

struct ElementaryTransform {
    TransformKind kind;
    std::size_t dim;

    ElementaryTransform(TransformKind kind_, std::size_t dim_) : kind(kind_), dim(dim_) {
        RatFunc d = to_matrix().det();
        bool ok = (kind == TransformKind::Rtilde)
                      ? (d == RatFunc(1) || d == RatFunc(-1))
                      : (d == RatFunc(1));
        if (!ok) throw std::logic_error("ElementaryTransform: unexpected determinant");
    }

    Matrix to_matrix() const {
        Matrix m(dim, dim);
        switch (kind) {
            case TransformKind::L:
                for (std::size_t i = 1; i <= dim; ++i) {
                    m(i, i) = RatFunc(1);
                    if (i > 1) m(i, i - 1) = RatFunc(-1);
                }
                break;
            case TransformKind::R:
                for (std::size_t i = 1; i <= dim; ++i)
                    for (std::size_t j = i; j <= dim; ++j) m(i, j) = RatFunc(1);
                break;
            case TransformKind::Rtilde:
                if (dim < 2) throw std::invalid_argument("Rtilde needs dim >= 2");
                m(1, 2) = RatFunc(-1);
                m(2, 1) = RatFunc(1);
                for (std::size_t i = 2; i <= dim; ++i)
                    for (std::size_t j = std::max<std::size_t>(3, i); j <= dim; ++j)
                        m(i, j) = RatFunc(1);
                break;
        }
        return m;
    }
};

enum class TransformSide { Left, Right };

inline Matrix apply_transform(const ElementaryTransform& t, TransformSide side, const Matrix& m) {
    Matrix tm = t.to_matrix();
    if (side == TransformSide::Left) {
        if (t.dim != m.rows()) throw std::invalid_argument("apply_transform: dimension mismatch");
        return tm * m;
    }
    if (t.dim != m.cols()) throw std::invalid_argument("apply_transform: dimension mismatch");
    return m * tm;
}

}  // namespace bindet
