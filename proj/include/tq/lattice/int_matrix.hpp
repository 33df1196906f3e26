#pragma once

#include "tq/exactmath/rational.hpp"
#include "tq/exactmath/resultant.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace tq {

template <>
struct RingOps<Integer> {
    static Integer zero() { return 0; }
    static Integer one() { return 1; }
    static bool is_zero(const Integer& a) { return a == 0; }
    static Integer exact_div(const Integer& a, const Integer& b) { return a / b; }
};

using IntVector = std::vector<Integer>;

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    IntMatrix transpose() const;
    bool is_symmetric() const;
    Integer trace() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& v);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += k * row j
    void add_row(std::size_t i, std::size_t j, const Integer& k);
    /// col i += k * col j
    void add_col(std::size_t i, std::size_t j, const Integer& k);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

IntMatrix pow(const IntMatrix& m, unsigned e);
Integer determinant(const IntMatrix& m);

using RatMatrix = std::vector<std::vector<Rational>>;
/// Exact inverse over Q; std::domain_error if singular.
RatMatrix rational_inverse(const IntMatrix& m);

struct SmithForm {
    IntMatrix D, U, V;  // U * m * V = D
    std::vector<Integer> diagonal;
};

/// Smith normal form with unimodular transforms; diagonal entries are
/// nonnegative and each divides the next.
SmithForm smith_normal_form(const IntMatrix& m);

struct Inertia {
    std::size_t n_plus = 0, n_minus = 0, n_zero = 0;
    friend bool operator==(const Inertia& a, const Inertia& b) {
        return a.n_plus == b.n_plus && a.n_minus == b.n_minus && a.n_zero == b.n_zero;
    }
};

/// Sylvester inertia of a symmetric matrix by exact congruence reduction.
Inertia inertia(const IntMatrix& symmetric);

}  // namespace tq
