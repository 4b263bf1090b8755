#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie2/field.hpp"

namespace lie2 {

using Vec = std::vector<Elem>;

bool is_zero(const Vec& v);
void axpy(const Field& f, Elem a, const Vec& x, Vec& y);  // y += a x
Vec scaled(const Field& f, Elem a, const Vec& x);
Vec add(const Vec& a, const Vec& b);
Vec unit_vec(std::size_t n, std::size_t i);

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldPtr f, std::size_t n);
    static Matrix from_rows(FieldPtr f, const std::vector<Vec>& rows);
    static Matrix from_cols(FieldPtr f, std::size_t rows, const std::vector<Vec>& cols);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Elem& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    Elem at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<Elem>& data() const { return a_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_col(std::size_t j, const Vec& v);
    Vec apply(const Vec& v) const;  // M v
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix transpose() const;
    Matrix scaled(Elem a) const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    Vec flatten() const { return a_; }  // row-major
    std::string str() const;

private:
    FieldPtr f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<Elem> a_;
};

// Commutator AB + BA (char 2).
Matrix commutator(const Matrix& a, const Matrix& b);

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(FieldPtr f, Vec coeffs);  // lowest degree first
    static Polynomial monomial(FieldPtr f, std::size_t deg, Elem c = 1);

    const FieldPtr& field() const { return f_; }
    const Vec& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator+(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    Matrix evaluate(const Matrix& m) const;
    // "lambda^4 + t*lambda^2 + lambda" style, highest degree first.
    std::string str(const std::string& var = "lambda") const;

private:
    void trim();
    FieldPtr f_;
    Vec c_;
};

// Incremental Gaussian elimination. Rows carry optional tag columns (an augmented block)
// recording which combination of inserted generators they are, so span decompositions
// and linear dependencies can be read off exactly. Over GF(2) rows are packed into words.
class RowReducer {
public:
    enum class Backend { Auto, Packed, Scalar };

    RowReducer(FieldPtr f, std::size_t width, std::size_t tag_width = 0, Backend backend = Backend::Auto);

    const FieldPtr& field() const { return f_; }
    std::size_t width() const { return width_; }
    std::size_t tag_width() const { return tag_width_; }
    std::size_t rank() const { return pivots_.size(); }
    bool packed() const { return packed_; }

    // Returns true if v was independent of the stored rows (and was stored).
    // When v is dependent and dependency != nullptr, *dependency receives the reduced tag,
    // i.e. a combination of generator tags summing to zero.
    bool insert(const Vec& v, const Vec& tag = {}, Vec* dependency = nullptr);
    bool insert_sparse(const std::vector<std::pair<std::size_t, Elem>>& entries);

    // Reduce v against the rows; returns the residual. If coeffs != nullptr, it receives
    // c (length tag_width) with v - residual = sum_j c_j * (generator with tag e_j).
    Vec reduce(const Vec& v, Vec* coeffs = nullptr) const;
    bool in_span(const Vec& v) const;

    // Bring stored rows to reduced echelon form, sorted by pivot column.
    void make_reduced();
    std::vector<Vec> basis_rows() const;  // reduced echelon rows (no tags), sorted by pivot
    std::vector<std::size_t> pivot_columns() const;  // ascending
    // Canonical nullspace of the system whose rows were inserted: for each free column f,
    // the vector with v_f = 1, other free entries 0.
    std::vector<Vec> nullspace();

private:
    std::size_t total() const { return width_ + tag_width_; }
    bool insert_packed(std::vector<std::uint64_t> row, Vec* dependency);
    bool insert_scalar(Vec row, Vec* dependency);
    Vec row_as_vec(std::size_t r) const;

    FieldPtr f_;
    std::size_t width_, tag_width_;
    bool packed_;
    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> prow_;
    std::vector<Vec> srow_;
    std::vector<std::size_t> pivots_;            // pivot column of stored row i
    std::vector<std::int64_t> pivot_row_;        // column -> stored row index or -1
    bool reduced_ = false;
};

struct RankNullspace {
    std::size_t rank = 0;
    std::vector<Vec> basis;
};

RankNullspace rank_nullspace(const Matrix& m, RowReducer::Backend backend = RowReducer::Backend::Auto);
std::size_t rank(const Matrix& m);
// Particular solution with free variables zero, or nullopt if inconsistent.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);
// Krylov method with the deterministic start vectors e_1, e_2, ...; verify runs the
// Cayley-Hamilton check p(M) = 0 and throws InternalError on failure.
Polynomial char_poly(const Matrix& m, bool verify = true);
Matrix operator_matrix(FieldPtr f, std::size_t dim, const std::function<Vec(std::size_t)>& image_of_basis);
// Independent reference computations (cofactor-free elimination).
Elem determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Column-space basis (reduced echelon of the transpose), i.e. canonical basis of the image.
std::vector<Vec> image_basis(const Matrix& m);

}  // namespace lie2
