#include "tq/lattice/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace tq {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : r)
            a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
    if (cols.empty())
        return {};
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_)
            throw std::invalid_argument("columns of unequal length");
        for (std::size_t i = 0; i < m.rows_; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

Integer IntMatrix::trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += x * b(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k)
        c.a_[k] += b.a_[k];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k)
        c.a_[k] -= b.a_[k];
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size())
        throw std::invalid_argument("matrix-vector shape mismatch");
    IntVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            r[i] += a(i, j) * v[j];
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, i) += k * (*this)(r, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
        os << "\n";
    }
    return os.str();
}

IntMatrix pow(const IntMatrix& m, unsigned e) {
    IntMatrix r = IntMatrix::identity(m.rows()), b = m;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

Integer determinant(const IntMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    Matrix<Integer> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m(i, j);
    return bareiss_determinant(std::move(a));
}

RatMatrix rational_inverse(const IntMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw std::domain_error("singular matrix");
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational f = a[r][c];
            for (std::size_t k = c; k < 2 * n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    RatMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    IntMatrix a = m, U = IntMatrix::identity(R), V = IntMatrix::identity(C);
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (a(i, j) != 0 && (pi == R || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == R)
                break;
            a.swap_rows(t, pi);
            U.swap_rows(t, pi);
            a.swap_cols(t, pj);
            V.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (a(i, t) == 0)
                    continue;
                Integer q = a(i, t) / a(t, t);
                a.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (a(t, j) == 0)
                    continue;
                Integer q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Enforce divisibility into the trailing block.
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == R)
                break;
            a.add_row(t, bad, 1);
            U.add_row(t, bad, 1);
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < C; ++j)
                a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < R; ++j)
                U(t, j) = -U(t, j);
        }
    }
    SmithForm s{a, U, V, {}};
    for (std::size_t i = 0; i < std::min(R, C); ++i)
        s.diagonal.push_back(a(i, i));
    return s;
}

Inertia inertia(const IntMatrix& sym) {
    if (!sym.is_symmetric())
        throw std::invalid_argument("inertia needs a symmetric matrix");
    std::size_t n = sym.rows();
    RatMatrix s(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s[i][j] = sym(i, j);
    Inertia res;
    while (n > 0) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (s[i][i] != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // Zero diagonal: v_i -> v_i + v_j creates the entry 2 s_ij.
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (s[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                res.n_zero += n;
                break;
            }
            for (std::size_t k = 0; k < n; ++k)
                s[pi][k] += s[pj][k];
            for (std::size_t k = 0; k < n; ++k)
                s[k][pi] += s[k][pj];
            p = pi;
        }
        (s[p][p] > 0 ? res.n_plus : res.n_minus) += 1;
        // Schur complement of the pivot, then drop row and column p.
        RatMatrix t;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p)
                continue;
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == p)
                    continue;
                row.push_back(s[i][j] - s[i][p] * s[p][j] / s[p][p]);
            }
            t.push_back(std::move(row));
        }
        s = std::move(t);
        --n;
    }
    return res;
}

}  // namespace tq
