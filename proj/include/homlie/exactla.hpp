#pragma once

// Exact dense linear algebra over the rationals.
//
// Every subspace is stored by the reduced row-echelon form of a basis, so two
// subspaces are equal exactly when their stored bases are equal.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homlie {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws ParseError.
Scalar parse_scalar(std::string_view text);
/// Lowest-terms text form, "p" when the denominator is 1.
std::string to_string(const Scalar& x);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
void axpy(const Scalar& s, std::span<const Scalar> x, std::span<Scalar> y);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;

    Vector apply(std::span<const Scalar> v) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const = default;

    /// Stacks the rows of `below` under this matrix (same column count).
    Matrix vstack(const Matrix& below) const;
    /// Power by repeated multiplication; square matrices only.
    Matrix pow(unsigned k) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix form;                      // zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination. The returned form keeps only nonzero rows.
Echelon row_reduce(Matrix m);
/// Reduced row-echelon form with the original row count (zero rows at the bottom).
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace {
public:
    Subspace() = default;
    /// Zero subspace of Q^n.
    explicit Subspace(std::size_t ambient_dim);

    static Subspace zero(std::size_t n) { return Subspace(n); }
    static Subspace full(std::size_t n);
    static Subspace span(std::size_t n, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
    std::vector<Vector> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Scalar> v) const;
    /// Coefficients of v in the stored basis; v must lie in the subspace.
    Vector coordinates(std::span<const Scalar> v) const;
    /// Inverse of coordinates().
    Vector combine(std::span<const Scalar> coeffs) const;

    bool operator==(const Subspace& o) const = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_{0, 0};
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
/// Column space of m, inside Q^{rows(m)}.
Subspace image(const Matrix& m);
/// f(W) for f: Q^a -> Q^b and W inside Q^a.
Subspace image(const Matrix& f, const Subspace& w);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const Scalar> v);
bool subspace_leq(const Subspace& a, const Subspace& b);
/// {v : f v in w}.
Subspace preimage(const Matrix& f, const Subspace& w);
/// Largest W inside c with a W contained in W.
Subspace largest_invariant_subspace(const Matrix& a, const Subspace& c);
/// True when a maps w into itself.
bool is_invariant(const Matrix& a, const Subspace& w);

/// Q^n / killed, with coordinates on the non-pivot columns of killed's basis.
class QuotientSpace {
public:
    QuotientSpace() = default;
    explicit QuotientSpace(Subspace killed);

    std::size_t ambient_dim() const { return killed_.ambient_dim(); }
    std::size_t dim() const { return reps_.size(); }
    const Subspace& killed() const { return killed_; }
    const std::vector<std::size_t>& representative_columns() const { return reps_; }

    Vector project(std::span<const Scalar> v) const;
    /// Canonical representative: the ambient vector supported on representative columns.
    Vector lift(std::span<const Scalar> q) const;
    Matrix projection() const;
    Matrix section() const;

    /// Matrix of the map induced on quotients by f: ambient(this) -> ambient(target).
    Matrix induced_map(const Matrix& f, const QuotientSpace& target) const;

private:
    Subspace killed_;
    std::vector<std::size_t> reps_;
};

/// Incremental reduced echelon basis; used where generators are streamed.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t ambient_dim);

    /// Returns true when v enlarged the span.
    bool add(Vector v);
    std::size_t dim() const { return rows_.size(); }
    bool full() const { return rows_.size() == ambient_; }
    bool contains(std::span<const Scalar> v) const;
    Subspace build() const;

private:
    void reduce(Vector& v) const;

    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace homlie
