#pragma once

#include "hopfkit/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

using Vector = std::vector<Rational>;

/// Sorted (index, value) pairs with every stored value nonzero.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---- dense vector helpers ----

Vector zeros(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
void axpy(Vector& y, const Rational& a, const Vector& x);  // y += a*x
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);
/// Kronecker product of coordinate vectors, index i*|b| + j.
Vector kron(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, std::size_t n);
void axpy(Vector& y, const Rational& a, const SparseVec& x);

/// Rectangular matrix of rationals. Starts sparse and switches to dense
/// storage once more than a quarter of the entries are nonzero.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_dense() const { return dense_; }
    std::size_t nnz() const;

    Rational get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& v);
    void add_to(std::size_t r, std::size_t c, const Rational& v);

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    SparseVec sparse_row(std::size_t r) const;
    std::vector<SparseVec> sparse_rows() const;

    Vector apply(const Vector& x) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& s) const;
    bool is_zero() const;

    /// Row-major flattening, index r*cols + c.
    Vector flatten() const;
    static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

    template <class F>
    void for_each_nonzero(F&& f) const {
        if (dense_) {
            for (std::size_t r = 0; r < rows_; ++r)
                for (std::size_t c = 0; c < cols_; ++c) {
                    const Rational& v = dense_data_[r * cols_ + c];
                    if (!v.is_zero()) f(r, c, v);
                }
        } else {
            for (const auto& [rc, v] : sparse_data_) f(rc.first, rc.second, v);
        }
    }

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    void check(std::size_t r, std::size_t c) const;
    void maybe_densify();

    std::size_t rows_ = 0, cols_ = 0;
    bool dense_ = false;
    std::vector<Rational> dense_data_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> sparse_data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
std::string to_string(const Matrix& m);

/// Sparse order-3 tensor; slice (i, j) holds the nonzero k-entries.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d1, std::size_t d2, std::size_t d3);

    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    std::size_t d3() const { return d3_; }

    const SparseVec& at(std::size_t i, std::size_t j) const;
    Rational get(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, const Rational& v);
    void add(std::size_t i, std::size_t j, std::size_t k, const Rational& v);
    void set_slice(std::size_t i, std::size_t j, const Vector& v);
    Vector slice(std::size_t i, std::size_t j) const;

    struct Entry {
        std::size_t i, j, k;
        Rational value;
    };
    std::vector<Entry> entries() const;
    std::size_t nnz() const;

    friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

private:
    void check(std::size_t i, std::size_t j, std::size_t k) const;
    std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<SparseVec> slices_;
};

/// Incremental reduced row echelon form. Rows are kept fully reduced, so the
/// result is the unique RREF of the inserted rows regardless of insertion order.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    /// Reduces and inserts a row; returns false when it was dependent.
    bool insert(const SparseVec& row);
    bool insert(const Vector& row) { return insert(to_sparse(row)); }

    /// Remainder of v after eliminating every pivot column.
    SparseVec reduce(const SparseVec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t> pivots() const;
    /// Basis rows ordered by pivot column.
    std::vector<SparseVec> rows() const;
    const std::map<std::size_t, SparseVec>& pivot_rows() const { return rows_; }

private:
    std::size_t cols_;
    std::map<std::size_t, SparseVec> rows_;
};

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);
/// Same as solve_linear, for a system given as sparse rows with n unknowns.
std::optional<Vector> solve_sparse(const std::vector<SparseVec>& rows, const Vector& rhs, std::size_t n);
std::vector<Vector> kernel_basis(const Matrix& a);
std::vector<Vector> kernel_basis_sparse(const std::vector<SparseVec>& rows, std::size_t n);
std::size_t rank(const Matrix& a);
std::size_t rank(const std::vector<Vector>& vectors, std::size_t n);

struct SpanResult {
    bool contained = false;
    Vector coefficients;  // empty when not contained
};
SpanResult span_contains(const std::vector<Vector>& vectors, const Vector& target);
/// One elimination shared by many targets.
std::vector<SpanResult> span_contains_all(const std::vector<Vector>& vectors, const std::vector<Vector>& targets);

/// A subspace of Q^n with its canonical RREF basis.
class Subspace {
public:
    Subspace() = default;
    Subspace(const std::vector<Vector>& spanning, std::size_t ambient);

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    /// Coordinates in basis(); nullopt when v lies outside.
    std::optional<Vector> coords(const Vector& v) const;
    Vector from_coords(const Vector& c) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace hopfkit
