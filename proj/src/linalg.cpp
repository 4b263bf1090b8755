#include "lie2/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lie2/error.hpp"

namespace lie2 {

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

void axpy(const Field& f, Elem a, const Vec& x, Vec& y) {
    if (a == 0) return;
    if (a == 1) {
        for (std::size_t i = 0; i < x.size(); ++i) y[i] ^= x[i];
        return;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) y[i] ^= f.mul(a, x[i]);
}

Vec scaled(const Field& f, Elem a, const Vec& x) {
    Vec y(x.size(), 0);
    axpy(f, a, x, y);
    return y;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw UsageError("vector length mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    return r;
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v.at(i) = 1;
    return v;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), r_(rows), c_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<Vec>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(std::move(f), rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw UsageError("ragged rows");
        std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + i * c);
    }
    return m;
}

Matrix Matrix::from_cols(FieldPtr f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(std::move(f), rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
    if (v.size() != r_) throw UsageError("column length mismatch");
    for (std::size_t i = 0; i < r_; ++i) at(i, j) = v[i];
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != c_) throw UsageError("matrix-vector size mismatch");
    Vec out(r_, 0);
    const Field& f = *f_;
    for (std::size_t j = 0; j < c_; ++j) {
        if (!v[j]) continue;
        for (std::size_t i = 0; i < r_; ++i) {
            Elem e = a_[i * c_ + j];
            if (e) out[i] ^= f.mul(e, v[j]);
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw UsageError("matrix product size mismatch");
    Matrix m(f_, r_, o.c_);
    const Field& f = *f_;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            Elem a = a_[i * c_ + k];
            if (!a) continue;
            const Elem* orow = &o.a_[k * o.c_];
            Elem* mrow = &m.a_[i * o.c_];
            if (a == 1) {
                for (std::size_t j = 0; j < o.c_; ++j) mrow[j] ^= orow[j];
            } else {
                for (std::size_t j = 0; j < o.c_; ++j)
                    if (orow[j]) mrow[j] ^= f.mul(a, orow[j]);
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw UsageError("matrix sum size mismatch");
    Matrix m(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] ^= o.a_[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::scaled(Elem a) const {
    Matrix m(*this);
    for (auto& e : m.a_) e = f_->mul(a, e);
    return m;
}

bool Matrix::is_zero() const { return lie2::is_zero(a_); }

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << f_->format(at(i, j));
        os << "\n";
    }
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

// ------------------------------------------------------------ Polynomial

Polynomial::Polynomial(FieldPtr f, Vec coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(FieldPtr f, std::size_t deg, Elem c) {
    Vec v(deg + 1, 0);
    v[deg] = c;
    return Polynomial(std::move(f), v);
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial(f_, {});
    Vec r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] ^= f_->mul(c_[i], o.c_[j]);
    return Polynomial(f_, r);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Vec r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] ^= c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] ^= o.c_[i];
    return Polynomial(f_ ? f_ : o.f_, r);
}

Matrix Polynomial::evaluate(const Matrix& m) const {
    Matrix acc(m.field(), m.rows(), m.cols());
    const Matrix id = Matrix::identity(m.field(), m.rows());
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * m + id.scaled(c_[i]);
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!s.empty()) s += " + ";
        std::string coef = f_->format(c_[i]);
        bool one = c_[i] == 1;
        if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
        if (i == 0) {
            s += coef;
            continue;
        }
        if (!one) s += coef + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

// ------------------------------------------------------------ RowReducer

RowReducer::RowReducer(FieldPtr f, std::size_t width, std::size_t tag_width, Backend backend)
    : f_(std::move(f)), width_(width), tag_width_(tag_width) {
    packed_ = backend == Backend::Packed || (backend == Backend::Auto && f_->is_gf2());
    if (packed_ && !f_->is_gf2()) throw UsageError("packed backend needs GF(2)");
    words_ = (total() + 63) / 64;
    pivot_row_.assign(width_, -1);
}

namespace {

std::vector<std::uint64_t> pack(const Vec& v, const Vec& tag, std::size_t width, std::size_t words) {
    std::vector<std::uint64_t> w(words, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] & 1) w[i >> 6] |= std::uint64_t{1} << (i & 63);
    for (std::size_t i = 0; i < tag.size(); ++i)
        if (tag[i] & 1) {
            std::size_t b = width + i;
            w[b >> 6] |= std::uint64_t{1} << (b & 63);
        }
    return w;
}

}  // namespace

bool RowReducer::insert(const Vec& v, const Vec& tag, Vec* dependency) {
    if (v.size() != width_) throw UsageError("row width mismatch");
    if (tag.size() > tag_width_) throw UsageError("tag width mismatch");
    if (packed_) return insert_packed(pack(v, tag, width_, words_), dependency);
    Vec row(total(), 0);
    std::copy(v.begin(), v.end(), row.begin());
    std::copy(tag.begin(), tag.end(), row.begin() + width_);
    return insert_scalar(std::move(row), dependency);
}

bool RowReducer::insert_sparse(const std::vector<std::pair<std::size_t, Elem>>& entries) {
    if (packed_) {
        std::vector<std::uint64_t> w(words_, 0);
        for (auto [i, c] : entries) {
            if (i >= width_) throw UsageError("sparse entry out of range");
            if (c & 1) w[i >> 6] ^= std::uint64_t{1} << (i & 63);
        }
        return insert_packed(std::move(w), nullptr);
    }
    Vec row(total(), 0);
    for (auto [i, c] : entries) {
        if (i >= width_) throw UsageError("sparse entry out of range");
        row[i] ^= c;
    }
    return insert_scalar(std::move(row), nullptr);
}

bool RowReducer::insert_packed(std::vector<std::uint64_t> row, Vec* dependency) {
    const std::size_t wwords = (width_ + 63) / 64;
    for (std::size_t wi = 0; wi < wwords; ++wi) {
        std::uint64_t mask = ~std::uint64_t{0};
        if ((wi + 1) * 64 > width_) mask = (width_ % 64) ? ((std::uint64_t{1} << (width_ % 64)) - 1) : mask;
        std::uint64_t bits = row[wi] & mask;
        while (bits) {
            int b = __builtin_ctzll(bits);
            std::size_t col = wi * 64 + b;
            std::int64_t p = pivot_row_[col];
            if (p < 0) {
                pivot_row_[col] = static_cast<std::int64_t>(prow_.size());
                pivots_.push_back(col);
                prow_.push_back(std::move(row));
                reduced_ = false;
                return true;
            }
            const auto& pr = prow_[p];
            for (std::size_t w = wi; w < words_; ++w) row[w] ^= pr[w];
            std::uint64_t above = b == 63 ? 0 : (~std::uint64_t{0} << (b + 1));
            bits = row[wi] & mask & above;
        }
    }
    if (dependency) {
        dependency->assign(tag_width_, 0);
        for (std::size_t i = 0; i < tag_width_; ++i) {
            std::size_t b = width_ + i;
            (*dependency)[i] = (row[b >> 6] >> (b & 63)) & 1;
        }
    }
    return false;
}

bool RowReducer::insert_scalar(Vec row, Vec* dependency) {
    const Field& f = *f_;
    for (std::size_t col = 0; col < width_; ++col) {
        Elem c = row[col];
        if (!c) continue;
        std::int64_t p = pivot_row_[col];
        if (p < 0) {
            Elem s = f.inv(c);
            for (std::size_t j = col; j < row.size(); ++j) row[j] = f.mul(s, row[j]);
            pivot_row_[col] = static_cast<std::int64_t>(srow_.size());
            pivots_.push_back(col);
            srow_.push_back(std::move(row));
            reduced_ = false;
            return true;
        }
        const Vec& pr = srow_[p];
        for (std::size_t j = col; j < row.size(); ++j)
            if (pr[j]) row[j] ^= f.mul(c, pr[j]);
    }
    if (dependency) dependency->assign(row.begin() + width_, row.end());
    return false;
}

Vec RowReducer::reduce(const Vec& v, Vec* coeffs) const {
    if (v.size() != width_) throw UsageError("row width mismatch");
    if (packed_) {
        auto row = pack(v, {}, width_, words_);
        const std::size_t wwords = (width_ + 63) / 64;
        for (std::size_t wi = 0; wi < wwords; ++wi) {
            std::uint64_t mask = ~std::uint64_t{0};
            if ((wi + 1) * 64 > width_ && width_ % 64) mask = (std::uint64_t{1} << (width_ % 64)) - 1;
            std::uint64_t bits = row[wi] & mask;
            while (bits) {
                int b = __builtin_ctzll(bits);
                std::size_t col = wi * 64 + b;
                std::int64_t p = pivot_row_[col];
                if (p >= 0) {
                    const auto& pr = prow_[p];
                    for (std::size_t w = wi; w < words_; ++w) row[w] ^= pr[w];
                }
                std::uint64_t above = b == 63 ? 0 : (~std::uint64_t{0} << (b + 1));
                bits = row[wi] & mask & above;
            }
        }
        Vec out(width_, 0);
        for (std::size_t i = 0; i < width_; ++i) out[i] = (row[i >> 6] >> (i & 63)) & 1;
        if (coeffs) {
            coeffs->assign(tag_width_, 0);
            for (std::size_t i = 0; i < tag_width_; ++i) {
                std::size_t b = width_ + i;
                (*coeffs)[i] = (row[b >> 6] >> (b & 63)) & 1;
            }
        }
        return out;
    }
    const Field& f = *f_;
    Vec row(total(), 0);
    std::copy(v.begin(), v.end(), row.begin());
    for (std::size_t col = 0; col < width_; ++col) {
        Elem c = row[col];
        if (!c) continue;
        std::int64_t p = pivot_row_[col];
        if (p < 0) continue;
        const Vec& pr = srow_[p];
        for (std::size_t j = col; j < row.size(); ++j)
            if (pr[j]) row[j] ^= f.mul(c, pr[j]);
    }
    if (coeffs) coeffs->assign(row.begin() + width_, row.end());
    row.resize(width_);
    return row;
}

bool RowReducer::in_span(const Vec& v) const { return is_zero(reduce(v)); }

Vec RowReducer::row_as_vec(std::size_t r) const {
    if (!packed_) return Vec(srow_[r].begin(), srow_[r].begin() + width_);
    Vec out(width_, 0);
    for (std::size_t i = 0; i < width_; ++i) out[i] = (prow_[r][i >> 6] >> (i & 63)) & 1;
    return out;
}

void RowReducer::make_reduced() {
    if (reduced_) return;
    std::vector<std::size_t> order(pivots_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    const Field& f = *f_;
    // Eliminate each pivot column from the rows above it (smaller pivots).
    for (std::size_t oi = order.size(); oi-- > 0;) {
        std::size_t r = order[oi];
        std::size_t col = pivots_[r];
        for (std::size_t oj = 0; oj < oi; ++oj) {
            std::size_t s = order[oj];
            if (packed_) {
                if (prow_[s][col >> 6] >> (col & 63) & 1)
                    for (std::size_t w = col >> 6; w < words_; ++w) prow_[s][w] ^= prow_[r][w];
            } else {
                Elem c = srow_[s][col];
                if (c)
                    for (std::size_t j = col; j < total(); ++j)
                        if (srow_[r][j]) srow_[s][j] ^= f.mul(c, srow_[r][j]);
            }
        }
    }
    std::vector<std::size_t> piv;
    if (packed_) {
        std::vector<std::vector<std::uint64_t>> rows;
        for (auto r : order) rows.push_back(std::move(prow_[r])), piv.push_back(pivots_[r]);
        prow_ = std::move(rows);
    } else {
        std::vector<Vec> rows;
        for (auto r : order) rows.push_back(std::move(srow_[r])), piv.push_back(pivots_[r]);
        srow_ = std::move(rows);
    }
    pivots_ = std::move(piv);
    std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
    for (std::size_t i = 0; i < pivots_.size(); ++i) pivot_row_[pivots_[i]] = static_cast<std::int64_t>(i);
    reduced_ = true;
}

std::vector<Vec> RowReducer::basis_rows() const {
    auto self = const_cast<RowReducer*>(this);
    self->make_reduced();
    std::vector<Vec> out;
    for (std::size_t r = 0; r < pivots_.size(); ++r) out.push_back(row_as_vec(r));
    return out;
}

std::vector<std::size_t> RowReducer::pivot_columns() const {
    std::vector<std::size_t> p = pivots_;
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<Vec> RowReducer::nullspace() {
    make_reduced();
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < pivots_.size(); ++r) rows.push_back(row_as_vec(r));
    std::vector<Vec> basis;
    for (std::size_t fcol = 0; fcol < width_; ++fcol) {
        if (pivot_row_[fcol] >= 0) continue;
        Vec v(width_, 0);
        v[fcol] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) v[pivots_[r]] = rows[r][fcol];
        basis.push_back(std::move(v));
    }
    return basis;
}

// -------------------------------------------------------- free functions

RankNullspace rank_nullspace(const Matrix& m, RowReducer::Backend backend) {
    RowReducer rr(m.field(), m.cols(), 0, backend);
    for (std::size_t i = 0; i < m.rows(); ++i) rr.insert(m.row(i));
    RankNullspace out;
    out.rank = rr.rank();
    out.basis = rr.nullspace();
    return out;
}

std::size_t rank(const Matrix& m) {
    RowReducer rr(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) rr.insert(m.row(i));
    return rr.rank();
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw UsageError("right-hand side length mismatch");
    // Augmented rows [M | b]; consistent iff the last column is not a pivot.
    RowReducer rr(m.field(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec r = m.row(i);
        r.push_back(b[i]);
        rr.insert(r);
    }
    rr.make_reduced();
    auto piv = rr.pivot_columns();
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    auto rows = rr.basis_rows();
    Vec x(m.cols(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) x[piv[r]] = rows[r][m.cols()];
    return x;
}

Polynomial char_poly(const Matrix& m, bool verify) {
    if (m.rows() != m.cols()) throw UsageError("char_poly needs a square matrix");
    const FieldPtr& f = m.field();
    const std::size_t n = m.rows();
    Polynomial result(f, {1});
    std::vector<Vec> invariant;  // basis of the M-invariant subspace built so far
    std::size_t next = 0;
    while (invariant.size() < n) {
        RowReducer block(f, n, n + 1);
        for (const auto& w : invariant) block.insert(w);
        while (block.in_span(unit_vec(n, next))) ++next;
        Vec v = unit_vec(n, next);
        std::vector<Vec> krylov;
        for (std::size_t j = 0;; ++j) {
            Vec dep;
            if (block.insert(v, unit_vec(n + 1, j), &dep)) {
                krylov.push_back(v);
                v = m.apply(v);
                continue;
            }
            dep.resize(j + 1);
            result = result * Polynomial(f, dep);
            break;
        }
        invariant.insert(invariant.end(), krylov.begin(), krylov.end());
    }
    if (verify && !result.evaluate(m).is_zero()) throw InternalError("Cayley-Hamilton check failed");
    return result;
}

Matrix operator_matrix(FieldPtr f, std::size_t dim, const std::function<Vec(std::size_t)>& image_of_basis) {
    Matrix m(f, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_col(j, image_of_basis(j));
    return m;
}

Elem determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw UsageError("determinant needs a square matrix");
    const Field& f = *m.field();
    const std::size_t n = m.rows();
    std::vector<Vec> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(m.row(i));
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !a[p][c]) ++p;
        if (p == n) return 0;
        std::swap(a[p], a[c]);  // sign is irrelevant in characteristic 2
        det = f.mul(det, a[c][c]);
        Elem inv = f.inv(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (!a[r][c]) continue;
            Elem k = f.mul(a[r][c], inv);
            for (std::size_t j = c; j < n; ++j) a[r][j] ^= f.mul(k, a[c][j]);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw UsageError("inverse needs a square matrix");
    const Field& f = *m.field();
    const std::size_t n = m.rows();
    std::vector<Vec> a;
    for (std::size_t i = 0; i < n; ++i) {
        Vec r = m.row(i);
        r.resize(2 * n, 0);
        r[n + i] = 1;
        a.push_back(std::move(r));
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !a[p][c]) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        Elem inv = f.inv(a[c][c]);
        for (auto& e : a[c]) e = f.mul(e, inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || !a[r][c]) continue;
            Elem k = a[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] ^= f.mul(k, a[c][j]);
        }
    }
    Matrix out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a[i][n + j];
    return out;
}

std::vector<Vec> image_basis(const Matrix& m) {
    RowReducer rr(m.field(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) rr.insert(m.col(j));
    return rr.basis_rows();
}

}  // namespace lie2
