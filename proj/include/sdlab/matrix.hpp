#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdlab/field.hpp"

namespace sdlab {

struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class F>
bool same_field(const F& a, const F& b) {
    if constexpr (std::is_same_v<F, RationalField>) {
        (void)a; (void)b;
        return true;
    } else {
        return a.spec() == b.spec();
    }
}

// Dense matrix over one exact field.  0 x n and m x 0 shapes are legal values.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(const F& field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, field.zero()) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    }

    static Matrix identity(const F& field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool equals(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || !same_field(field_, o.field_)) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix mul(const Matrix& o) const {
        require_same_field(o);
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix::mul: shape mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& x = at(i, k);
                if (field_.is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(x, o.at(k, j)));
            }
        return r;
    }

    std::vector<Elem> mul_vec(const std::vector<Elem>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("mul_vec: shape");
        std::vector<Elem> r(rows_, field_.zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
        return r;
    }

    // v^T * M for a row vector v.
    std::vector<Elem> left_mul_vec(const std::vector<Elem>& v) const {
        if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("left_mul_vec: shape");
        std::vector<Elem> r(cols_, field_.zero());
        for (int i = 0; i < rows_; ++i) {
            if (field_.is_zero(v[i])) continue;
            for (int j = 0; j < cols_; ++j)
                r[j] = field_.add(r[j], field_.mul(v[i], at(i, j)));
        }
        return r;
    }

    Matrix vstack(const Matrix& o) const {
        require_same_field(o);
        if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
        Matrix r(field_, rows_ + o.rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    Matrix hstack(const Matrix& o) const {
        require_same_field(o);
        if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
        Matrix r(field_, rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    Matrix columns(const std::vector<int>& keep) const {
        Matrix r(field_, rows_, static_cast<int>(keep.size()));
        for (int i = 0; i < rows_; ++i)
            for (size_t j = 0; j < keep.size(); ++j) {
                if (keep[j] < 0 || keep[j] >= cols_) throw std::out_of_range("columns: index");
                r.at(i, static_cast<int>(j)) = at(i, keep[j]);
            }
        return r;
    }

    Matrix kron(const Matrix& o) const {
        require_same_field(o);
        Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const Elem& x = at(i, j);
                if (field_.is_zero(x)) continue;
                for (int u = 0; u < o.rows_; ++u)
                    for (int v = 0; v < o.cols_; ++v)
                        r.at(i * o.rows_ + u, j * o.cols_ + v) = field_.mul(x, o.at(u, v));
            }
        return r;
    }

    std::vector<Elem> row(int i) const {
        std::vector<Elem> r(cols_, field_.zero());
        for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    void set_row(int i, const std::vector<Elem>& v) {
        for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
    }

    void require_same_field(const Matrix& o) const {
        if (!same_field(field_, o.field_)) throw FieldMismatchError("matrices over different fields");
    }

private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    int rank = 0;
    std::vector<int> pivots;
};

// Unique reduced row-echelon form; pivot = first nonzero entry in column
// order (exact arithmetic, no tie-breaking concerns).
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    const F& f = m.field();
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!f.is_zero(m.at(i, c))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        auto inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto factor = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

template <class F>
int rank(const Matrix<F>& m) {
    return rref(m).rank;
}

// Rows of the result form the standard kernel basis of {x : Mx = 0}: one row
// per free column, identity on the free block.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    auto rr = rref(m);
    const F& f = m.field();
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<F> k(f, static_cast<int>(free_cols.size()), n);
    for (size_t t = 0; t < free_cols.size(); ++t) {
        int fc = free_cols[t];
        k.at(static_cast<int>(t), fc) = f.one();
        for (int i = 0; i < rr.rank; ++i)
            k.at(static_cast<int>(t), rr.pivots[i]) = f.neg(rr.reduced.at(i, fc));
    }
    return k;
}

// ---------------------------------------------------------------------------
// Integer matrices: fraction-free (Bareiss) rank and one-sided modular rank.

using IntMatrix = std::vector<std::vector<Int>>;

// Fraction-free elimination with exact division; bounds intermediate growth
// to minor-sized entries.
inline int bareiss_rank(IntMatrix m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r) std::swap(m[pr], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = num / prev;  // exact by the Sylvester identity
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

inline int rational_rank(const Matrix<RationalField>& m) {
    IntMatrix z(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j) l = lcm(l, Int(m.at(i, j).get_den()));
        for (int j = 0; j < m.cols(); ++j) {
            Rational v = m.at(i, j) * Rational(l);
            z[i][j] = Int(v.get_num());  // denominator is 1 after scaling
        }
    }
    return bareiss_rank(std::move(z));
}

// rank of (M mod p); always a lower bound for the rank over Q.
inline int rank_mod_p(const IntMatrix& m, u64 p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("rank_mod_p: p is not prime");
    if (m.empty()) return 0;
    PrimeField f(p);
    Matrix<PrimeField> mp(f, static_cast<int>(m.size()), static_cast<int>(m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            mp.at(static_cast<int>(i), static_cast<int>(j)) = mod_u64(m[i][j], p);
    return rank(mp);
}

inline Matrix<RationalField> rational_matrix_from_int(const IntMatrix& m) {
    RationalField f;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    Matrix<RationalField> r(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = Rational(m[i][j]);
    return r;
}

}  // namespace sdlab
