#include "lie2/liealg.hpp"

#include <algorithm>
#include <sstream>

#include "lie2/error.hpp"

namespace lie2 {

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) s.push_back({i, v[i]});
    return s;
}

Vec to_dense(const SparseVec& s, std::size_t dim) {
    Vec v(dim, 0);
    for (const auto& t : s) v.at(t.index) ^= t.coeff;
    return v;
}

void add_term(SparseVec& s, std::size_t index, Elem coeff) {
    if (!coeff) return;
    auto it = std::lower_bound(s.begin(), s.end(), index, [](const Term& t, std::size_t i) { return t.index < i; });
    if (it != s.end() && it->index == index) {
        it->coeff ^= coeff;
        if (!it->coeff) s.erase(it);
    } else {
        s.insert(it, Term{index, coeff});
    }
}

// ------------------------------------------------------ StructureConstants

StructureConstants::StructureConstants(FieldPtr f, std::size_t dim) : f_(std::move(f)), dim_(dim), table_(dim * dim) {}

void StructureConstants::set(std::size_t i, std::size_t j, SparseVec v) {
    if (i >= dim_ || j >= dim_) throw UsageError("structure constant index out of range");
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    SparseVec clean;
    for (const auto& t : v) {
        if (t.index >= dim_) throw UsageError("structure constant index out of range");
        f_->check(t.coeff);
        add_term(clean, t.index, t.coeff);
    }
    table_[i * dim_ + j] = std::move(clean);
}

void StructureConstants::add(std::size_t i, std::size_t j, std::size_t k, Elem c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw UsageError("structure constant index out of range");
    f_->check(c);
    add_term(table_[i * dim_ + j], k, c);
}

void StructureConstants::set_pair(std::size_t i, std::size_t j, const SparseVec& v) {
    set(i, j, v);
    set(j, i, v);
}

bool StructureConstants::operator==(const StructureConstants& o) const {
    return f_ == o.f_ && dim_ == o.dim_ && table_ == o.table_;
}

// -------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(StructureConstants sc, std::vector<std::string> labels)
    : sc_(std::move(sc)), labels_(std::move(labels)) {
    const std::size_t d = sc_.dim();
    for (std::size_t i = 0; i < d; ++i) {
        if (!sc_.get(i, i).empty()) throw UsageError("not alternating: [e" + std::to_string(i) + ",e" + std::to_string(i) + "] != 0");
        for (std::size_t j = i + 1; j < d; ++j)
            if (sc_.get(i, j) != sc_.get(j, i))
                throw UsageError("not alternating: [e" + std::to_string(i) + ",e" + std::to_string(j) + "] != [e" +
                                 std::to_string(j) + ",e" + std::to_string(i) + "]");
    }
    if (!labels_.empty() && labels_.size() != d) throw UsageError("label count does not match dimension");
}

std::string LieAlgebra::label(std::size_t i) const {
    return labels_.empty() ? "e" + std::to_string(i) : labels_[i];
}

Vec LieAlgebra::bracket_basis(std::size_t i, const Vec& y) const {
    const Field& f = *field();
    Vec out(dim(), 0);
    for (std::size_t j = 0; j < dim(); ++j) {
        if (!y[j]) continue;
        for (const auto& t : sc_.get(i, j)) out[t.index] ^= f.mul(t.coeff, y[j]);
    }
    return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw UsageError("bracket argument length mismatch");
    const Field& f = *field();
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (!y[j]) continue;
            Elem xy = f.mul(x[i], y[j]);
            for (const auto& t : sc_.get(i, j)) out[t.index] ^= f.mul(t.coeff, xy);
        }
    }
    return out;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
    Matrix m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& t : sc_.get(i, j)) m.at(t.index, j) ^= t.coeff;
    return m;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    Matrix m(field(), dim(), dim());
    const Field& f = *field();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            for (const auto& t : sc_.get(i, j)) m.at(t.index, j) ^= f.mul(t.coeff, x[i]);
    }
    return m;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(FieldPtr f, std::size_t ambient_dim) : f_(std::move(f)), n_(ambient_dim) {}

Subspace Subspace::span(FieldPtr f, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    Subspace s(f, ambient_dim);
    RowReducer rr(f, ambient_dim);
    for (const auto& v : vectors) rr.insert(v);
    s.basis_ = rr.basis_rows();
    s.pivots_ = rr.pivot_columns();
    return s;
}

Subspace Subspace::whole(FieldPtr f, std::size_t ambient_dim) {
    std::vector<Vec> units;
    for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vec(ambient_dim, i));
    return span(std::move(f), ambient_dim, units);
}

Vec Subspace::coords(const Vec& v) const {
    if (v.size() != n_) throw UsageError("vector length does not match the ambient space");
    Vec c(basis_.size(), 0);
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        c[i] = v[pivots_[i]];
        axpy(*f_, c[i], basis_[i], r);
    }
    if (!is_zero(r)) throw UsageError("vector is not in the subspace");
    return c;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(*f_, r[pivots_[i]], basis_[i], r);
    return is_zero(r);
}

bool Subspace::contains(const Subspace& o) const {
    return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Vec Subspace::from_coords(const Vec& c) const {
    Vec v(n_, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(*f_, c[i], basis_[i], v);
    return v;
}

Subspace Subspace::sum(const Subspace& o) const {
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(f_, n_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // Zassenhaus: rows [a | a] and [b | 0]; rows with zero left half give the intersection.
    RowReducer rr(f_, 2 * n_);
    for (const auto& a : basis_) {
        Vec r(2 * n_, 0);
        std::copy(a.begin(), a.end(), r.begin());
        std::copy(a.begin(), a.end(), r.begin() + n_);
        rr.insert(r);
    }
    for (const auto& b : o.basis_) {
        Vec r(2 * n_, 0);
        std::copy(b.begin(), b.end(), r.begin());
        rr.insert(r);
    }
    std::vector<Vec> out;
    for (const auto& r : rr.basis_rows())
        if (std::all_of(r.begin(), r.begin() + n_, [](Elem e) { return e == 0; })) out.emplace_back(r.begin() + n_, r.end());
    return span(f_, n_, out);
}

// ---------------------------------------------------------------- reports

void ValidationReport::fail(std::string msg) {
    ok = false;
    ++failures;
    if (violations.size() < 20) violations.push_back(std::move(msg));
}

void ValidationReport::merge(const ValidationReport& o) {
    ok = ok && o.ok;
    checks += o.checks;
    failures += o.failures;
    for (const auto& v : o.violations)
        if (violations.size() < 20) violations.push_back(v);
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << (ok ? "pass" : "FAIL") << " (" << checks << " checks, " << failures << " violations)";
    for (const auto& v : violations) os << "\n  " << v;
    return os.str();
}

ValidationReport validate_lie(const StructureConstants& sc) {
    ValidationReport rep;
    const std::size_t d = sc.dim();
    const Field& f = *sc.field();
    for (std::size_t i = 0; i < d; ++i) {
        ++rep.checks;
        if (!sc.get(i, i).empty()) rep.fail("alternation: [e" + std::to_string(i) + ",e" + std::to_string(i) + "] != 0");
        for (std::size_t j = i + 1; j < d; ++j) {
            ++rep.checks;
            if (sc.get(i, j) != sc.get(j, i))
                rep.fail("symmetry: [e" + std::to_string(i) + ",e" + std::to_string(j) + "] != [e" + std::to_string(j) +
                         ",e" + std::to_string(i) + "]");
        }
    }
    Vec acc(d, 0);
    auto apply = [&](std::size_t a, std::size_t b, std::size_t c) {
        // acc += [e_a, [e_b, e_c]]
        for (const auto& t : sc.get(b, c))
            for (const auto& u : sc.get(a, t.index)) acc[u.index] ^= f.mul(t.coeff, u.coeff);
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                apply(i, j, k);
                apply(j, k, i);
                apply(k, i, j);
                ++rep.checks;
                bool bad = false;
                for (auto& e : acc)
                    if (e) bad = true, e = 0;
                if (bad)
                    rep.fail("Jacobi: (e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" + std::to_string(k) + ")");
            }
    return rep;
}

ValidationReport validate_lie(const LieAlgebra& g) { return validate_lie(g.sc()); }

// ------------------------------------------------------------- structure

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    RowReducer rr(g.field(), g.dim());
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) rr.insert(g.bracket(x, y));
    Subspace s = Subspace::span(g.field(), g.dim(), rr.basis_rows());
    return s;
}

Subspace centralizer(const LieAlgebra& g, const Subspace& h) {
    const std::size_t d = g.dim();
    RowReducer rr(g.field(), d);
    for (const auto& b : h.basis()) {
        // column i of the block = [e_i, b]
        std::vector<Vec> cols(d);
        for (std::size_t i = 0; i < d; ++i) cols[i] = g.bracket_basis(i, b);
        for (std::size_t k = 0; k < d; ++k) {
            Vec row(d, 0);
            for (std::size_t i = 0; i < d; ++i) row[i] = cols[i][k];
            rr.insert(row);
        }
    }
    return Subspace::span(g.field(), d, rr.nullspace());
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.field(), g.dim())); }

std::vector<Subspace> series(const LieAlgebra& g, const Subspace& h, SeriesKind kind) {
    std::vector<Subspace> out{h};
    for (;;) {
        const Subspace& prev = out.back();
        Subspace next = kind == SeriesKind::LowerCentral ? bracket_span(g, out.front(), prev) : bracket_span(g, prev, prev);
        bool stable = next.dim() == prev.dim();
        out.push_back(std::move(next));
        if (stable) break;
    }
    return out;
}

bool is_solvable(const LieAlgebra& g, const Subspace& h) {
    return series(g, h, SeriesKind::Derived).back().dim() == 0;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& h) {
    for (const auto& x : h.basis())
        for (const auto& y : h.basis())
            if (!h.contains(g.bracket(x, y))) return false;
    return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& h) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (const auto& y : h.basis())
            if (!h.contains(g.bracket_basis(i, y))) return false;
    return true;
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& h) {
    if (!is_subalgebra(g, h)) throw UsageError("restrict_to: not a subalgebra");
    const std::size_t m = h.dim();
    StructureConstants sc(g.field(), m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) sc.set_pair(a, b, to_sparse(h.coords(g.bracket(h.basis()[a], h.basis()[b]))));
    std::vector<std::string> labels;
    bool units = !g.labels().empty();
    for (std::size_t a = 0; a < m && units; ++a) {
        const Vec& v = h.basis()[a];
        if (std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }) != 1 || v[h.pivots()[a]] != 1)
            units = false;
        else
            labels.push_back(g.label(h.pivots()[a]));
    }
    if (!units) labels.clear();
    return LieAlgebra(std::move(sc), labels);
}

Quotient quotient_map(const LieAlgebra& g, const Subspace& ideal) {
    if (!is_ideal(g, ideal)) throw UsageError("quotient_by: subspace is not an ideal");
    const std::size_t d = g.dim();
    std::vector<std::size_t> rest;
    std::vector<bool> piv(d, false);
    for (auto p : ideal.pivots()) piv[p] = true;
    for (std::size_t i = 0; i < d; ++i)
        if (!piv[i]) rest.push_back(i);
    const std::size_t m = rest.size();
    Quotient q;
    q.projection = Matrix(g.field(), m, d);
    q.lift = Matrix(g.field(), d, m);
    std::vector<Vec> comp;
    for (std::size_t a = 0; a < m; ++a) {
        q.lift.at(rest[a], a) = 1;
        comp.push_back(unit_vec(d, rest[a]));
    }
    q.complement = Subspace::span(g.field(), d, comp);
    for (std::size_t j = 0; j < d; ++j) {
        Vec r = unit_vec(d, j);
        for (std::size_t i = 0; i < ideal.dim(); ++i) axpy(*g.field(), r[ideal.pivots()[i]], ideal.basis()[i], r);
        for (std::size_t a = 0; a < m; ++a) q.projection.at(a, j) = r[rest[a]];
    }
    StructureConstants sc(g.field(), m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            sc.set_pair(a, b, to_sparse(q.projection.apply(to_dense(g.basis_bracket(rest[a], rest[b]), d))));
    std::vector<std::string> labels;
    if (!g.labels().empty())
        for (auto i : rest) labels.push_back(g.label(i));
    q.algebra = LieAlgebra(std::move(sc), labels);
    return q;
}

LieAlgebra quotient_by(const LieAlgebra& g, const Subspace& ideal) { return quotient_map(g, ideal).algebra; }

// ------------------------------------------------------------ derivations

std::vector<Matrix> derivation_space(const LieAlgebra& g, RowReducer::Backend backend) {
    const std::size_t d = g.dim();
    const Field& f = *g.field();
    // Unknown D[k][l] (coefficient of e_k in D(e_l)) has index k*d + l.
    RowReducer rr(g.field(), d * d, 0, backend);
    std::vector<std::vector<std::pair<std::size_t, Elem>>> eq(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            for (auto& e : eq) e.clear();
            // D([e_i,e_j]) = sum_l c^{ij}_l D(e_l)
            for (const auto& t : g.basis_bracket(i, j))
                for (std::size_t k = 0; k < d; ++k) eq[k].push_back({k * d + t.index, t.coeff});
            // [D e_i, e_j] = sum_l D[l][i] c^{lj}
            for (std::size_t l = 0; l < d; ++l)
                for (const auto& t : g.basis_bracket(l, j)) eq[t.index].push_back({l * d + i, t.coeff});
            // [e_i, D e_j] = sum_l D[l][j] c^{il}
            for (std::size_t l = 0; l < d; ++l)
                for (const auto& t : g.basis_bracket(i, l)) eq[t.index].push_back({l * d + j, t.coeff});
            for (auto& e : eq)
                if (!e.empty()) rr.insert_sparse(e);
        }
    std::vector<Matrix> out;
    for (const auto& v : rr.nullspace()) {
        Matrix m(g.field(), d, d);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l) m.at(k, l) = v[k * d + l];
        out.push_back(std::move(m));
    }
    (void)f;
    for (const auto& m : out)
        if (!is_derivation(g, m)) throw InternalError("derivation solve produced a non-derivation");
    return out;
}

bool is_derivation(const LieAlgebra& g, const Matrix& dm) {
    const std::size_t d = g.dim();
    if (dm.rows() != d || dm.cols() != d) throw UsageError("derivation matrix has the wrong size");
    std::vector<Vec> img(d);
    for (std::size_t j = 0; j < d; ++j) img[j] = dm.col(j);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec lhs = dm.apply(to_dense(g.basis_bracket(i, j), d));
            Vec rhs = add(g.bracket(img[i], unit_vec(d, j)), g.bracket(unit_vec(d, i), img[j]));
            if (lhs != rhs) return false;
        }
    return true;
}

std::optional<Vec> two_power(const LieAlgebra& g, const Vec& x) {
    const std::size_t d = g.dim();
    Matrix adx = g.ad(x);
    Matrix target = adx * adx;
    Matrix sys(g.field(), d * d, d);
    for (std::size_t m = 0; m < d; ++m) {
        Matrix a = g.ad_basis(m);
        for (std::size_t r = 0; r < d * d; ++r) sys.at(r, m) = a.data()[r];
    }
    return solve_linear(sys, target.flatten());
}

std::string LieFingerprint::str() const {
    auto join = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "dim=" + std::to_string(dim) + " lc=[" + join(lower_central) + "] der=[" + join(derived) +
           "] solv=" + (solvable ? "1" : "0") + " z=" + std::to_string(center_dim);
}

LieFingerprint fingerprint(const LieAlgebra& g) {
    LieFingerprint fp;
    fp.dim = g.dim();
    Subspace all = Subspace::whole(g.field(), g.dim());
    for (const auto& s : series(g, all, SeriesKind::LowerCentral)) fp.lower_central.push_back(s.dim());
    for (const auto& s : series(g, all, SeriesKind::Derived)) fp.derived.push_back(s.dim());
    fp.solvable = fp.derived.back() == 0;
    fp.center_dim = center(g).dim();
    return fp;
}

std::string series_string(const std::vector<std::size_t>& dims) {
    std::string s;
    for (std::size_t k = 1; k < dims.size(); ++k) {
        if (k >= 2 && dims[k] == dims[k - 1]) break;
        s += (k > 1 ? "," : "") + std::to_string(dims[k]);
    }
    return s;
}

std::string series_string(const std::vector<Subspace>& s) {
    std::vector<std::size_t> d;
    for (const auto& x : s) d.push_back(x.dim());
    return series_string(d);
}

}  // namespace lie2
