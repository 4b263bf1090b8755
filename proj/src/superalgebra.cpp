#include "lie2/superalgebra.hpp"

#include <random>
#include <sstream>

#include "lie2/error.hpp"
#include "super_build.hpp"

namespace lie2 {

LieSuperalgebra::LieSuperalgebra(FieldPtr f, std::size_t dim_even, std::size_t dim_odd)
    : sc_(std::move(f), dim_even + dim_odd), sq_(dim_odd), d0_(dim_even), d1_(dim_odd) {}

void LieSuperalgebra::set_bracket(std::size_t a, std::size_t b, const SparseVec& v) { sc_.set_pair(a, b, v); }

void LieSuperalgebra::set_square(std::size_t odd_index, const SparseVec& v) {
    if (odd_index >= d1_) throw UsageError("square index out of range");
    SparseVec clean;
    for (const auto& t : v) {
        if (t.index >= dim()) throw UsageError("square entry index out of range");
        field()->check(t.coeff);
        add_term(clean, t.index, t.coeff);
    }
    sq_[odd_index] = std::move(clean);
}

Vec LieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
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

Vec LieSuperalgebra::square(const Vec& x) const {
    if (x.size() != dim()) throw UsageError("square argument length mismatch");
    for (std::size_t i = 0; i < d0_; ++i)
        if (x[i]) throw UsageError("square of a non-odd vector");
    const Field& f = *field();
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < d1_; ++i) {
        Elem a = x[d0_ + i];
        if (!a) continue;
        Elem a2 = f.sqr(a);
        for (const auto& t : sq_[i]) out[t.index] ^= f.mul(t.coeff, a2);
        for (std::size_t j = i + 1; j < d1_; ++j) {
            Elem b = x[d0_ + j];
            if (!b) continue;
            Elem ab = f.mul(a, b);
            for (const auto& t : sc_.get(d0_ + i, d0_ + j)) out[t.index] ^= f.mul(t.coeff, ab);
        }
    }
    return out;
}

Matrix LieSuperalgebra::ad(const Vec& x) const {
    return operator_matrix(field(), dim(), [&](std::size_t j) { return bracket(x, unit_vec(dim(), j)); });
}

LieAlgebra LieSuperalgebra::even_part() const {
    StructureConstants sc(field(), d0_);
    for (std::size_t i = 0; i < d0_; ++i)
        for (std::size_t j = 0; j < d0_; ++j) {
            const SparseVec& v = sc_.get(i, j);
            for (const auto& t : v)
                if (t.index >= d0_) throw UsageError("bracket of even elements has an odd component");
            if (!v.empty()) sc.set(i, j, v);
        }
    std::vector<std::string> lab;
    if (!labels.empty()) lab.assign(labels.begin(), labels.begin() + d0_);
    return LieAlgebra(std::move(sc), lab);
}

LieAlgebra LieSuperalgebra::underlying() const { return LieAlgebra(sc_, labels); }

Matrix LieSuperalgebra::even_on_odd(const Vec& x) const {
    Matrix m(field(), d1_, d1_);
    for (std::size_t j = 0; j < d1_; ++j) {
        Vec img = bracket(x, unit_vec(dim(), d0_ + j));
        for (std::size_t i = 0; i < d1_; ++i) m.at(i, j) = img[d0_ + i];
    }
    return m;
}

std::string LieSuperalgebra::label(std::size_t t) const {
    if (!labels.empty()) return labels.at(t);
    return t < d0_ ? "e" + std::to_string(t) : "o" + std::to_string(t - d0_);
}

bool LieSuperalgebra::operator==(const LieSuperalgebra& o) const {
    return d0_ == o.d0_ && d1_ == o.d1_ && sc_ == o.sc_ && sq_ == o.sq_;
}

// ------------------------------------------------------------- validation

ValidationReport validate_super(const LieSuperalgebra& s, unsigned spot_samples) {
    ValidationReport rep;
    const std::size_t d = s.dim(), d0 = s.dim_even(), d1 = s.dim_odd();
    const Field& f = *s.field();
    const StructureConstants& sc = s.table();
    auto parity = [&](std::size_t t) { return t >= d0 ? 1 : 0; };
    auto name = [&](std::size_t t) { return s.label(t); };
    for (std::size_t a = 0; a < d; ++a) {
        ++rep.checks;
        if (!sc.get(a, a).empty()) rep.fail("diagonal: [" + name(a) + "," + name(a) + "] != 0");
        for (std::size_t b = a + 1; b < d; ++b) {
            ++rep.checks;
            if (sc.get(a, b) != sc.get(b, a)) rep.fail("symmetry: [" + name(a) + "," + name(b) + "]");
            int p = parity(a) ^ parity(b);
            for (const auto& t : sc.get(a, b))
                if (parity(t.index) != p) {
                    rep.fail("parity: [" + name(a) + "," + name(b) + "] has a component on " + name(t.index));
                    break;
                }
        }
    }
    for (std::size_t i = 0; i < d1; ++i) {
        ++rep.checks;
        for (const auto& t : s.square_basis(i))
            if (parity(t.index) != 0) {
                rep.fail("parity: square of " + name(d0 + i) + " is not even");
                break;
            }
    }
    LieAlgebra u = s.underlying();
    ValidationReport jac = validate_lie(u);
    rep.merge(jac);
    for (std::size_t i = 0; i < d1; ++i) {
        Vec x = unit_vec(d, d0 + i);
        Vec sq = to_dense(s.square_basis(i), d);
        for (std::size_t j = 0; j < d; ++j) {
            ++rep.checks;
            Vec y = unit_vec(d, j);
            if (s.bracket(sq, y) != s.bracket(x, s.bracket(x, y)))
                rep.fail("square: [" + name(d0 + i) + "^2," + name(j) + "] != [" + name(d0 + i) + ",[" + name(d0 + i) + "," +
                         name(j) + "]]");
        }
    }
    if (d1 > 0 && spot_samples > 0) {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<Elem> pick(0, f.size() - 1);
        auto rand_odd = [&]() {
            Vec v(d, 0);
            for (std::size_t i = d0; i < d; ++i) v[i] = pick(rng);
            return v;
        };
        for (unsigned k = 0; k < spot_samples; ++k) {
            Vec x = rand_odd(), y = rand_odd();
            Elem a = pick(rng);
            Vec sx = s.square(x);
            ++rep.checks;
            if (s.square(scaled(f, a, x)) != scaled(f, f.sqr(a), sx)) rep.fail("spot: (a x)^2 != a^2 x^2");
            ++rep.checks;
            if (add(add(s.square(add(x, y)), sx), s.square(y)) != s.bracket(x, y))
                rep.fail("spot: (x+y)^2 + x^2 + y^2 != [x,y]");
            Vec z(d, 0);
            for (auto& e : z) e = pick(rng);
            ++rep.checks;
            if (s.bracket(sx, z) != s.bracket(x, s.bracket(x, z))) rep.fail("spot: [x^2,z] != [x,[x,z]]");
        }
    }
    return rep;
}

// ------------------------------------------------------------ structure

namespace {

// Splits a graded subspace given by homogeneous generators.
GradedSubspace graded_span(const LieSuperalgebra& s, const std::vector<Vec>& gens) {
    std::vector<Vec> ev, od;
    for (const auto& v : gens) {
        Vec e(v.size(), 0), o(v.size(), 0);
        for (std::size_t t = 0; t < v.size(); ++t) (s.is_odd_index(t) ? o : e)[t] = v[t];
        if (!is_zero(e)) ev.push_back(e);
        if (!is_zero(o)) od.push_back(o);
    }
    return {Subspace::span(s.field(), s.dim(), ev), Subspace::span(s.field(), s.dim(), od)};
}

}  // namespace

GradedSubspace super_center(const LieSuperalgebra& s) {
    // The center is graded because the bracket is homogeneous.
    Subspace z = center(s.underlying());
    return graded_span(s, z.basis());
}

GradedSubspace derived_super(const LieSuperalgebra& s) {
    std::vector<Vec> gens;
    const std::size_t d = s.dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
            if (!s.bracket_basis(a, b).empty()) gens.push_back(to_dense(s.bracket_basis(a, b), d));
    for (std::size_t i = 0; i < s.dim_odd(); ++i)
        if (!s.square_basis(i).empty()) gens.push_back(to_dense(s.square_basis(i), d));
    return graded_span(s, gens);
}

LieSuperalgebra sub_superalgebra(const LieSuperalgebra& s, const GradedSubspace& h) {
    std::vector<Vec> sq;
    for (const auto& o : h.odd.basis()) sq.push_back(s.square(o));
    auto br = [&](const Vec& x, const Vec& y) { return s.bracket(x, y); };
    return detail::build_super(s.field(), s.dim(), h.even.basis(), h.odd.basis(), br, sq);
}

LieSuperalgebra quotient_super(const LieSuperalgebra& s, const GradedSubspace& ideal) {
    const std::size_t d = s.dim();
    Subspace all = ideal.even.sum(ideal.odd);
    for (const auto& y : all.basis())
        for (std::size_t a = 0; a < d; ++a)
            if (!all.contains(s.bracket(unit_vec(d, a), y))) throw UsageError("quotient_super: not an ideal");
    for (const auto& o : ideal.odd.basis())
        if (!all.contains(s.square(o))) throw UsageError("quotient_super: ideal not closed under squares");
    std::vector<bool> piv(d, false);
    for (auto p : all.pivots()) piv[p] = true;
    std::vector<std::size_t> rest;
    std::size_t r0 = 0;
    for (std::size_t t = 0; t < d; ++t)
        if (!piv[t]) {
            rest.push_back(t);
            if (!s.is_odd_index(t)) ++r0;
        }
    const std::size_t m = rest.size();
    std::vector<std::int64_t> pos(d, -1);
    for (std::size_t a = 0; a < m; ++a) pos[rest[a]] = static_cast<std::int64_t>(a);
    auto project = [&](Vec v) {
        for (std::size_t i = 0; i < all.dim(); ++i) axpy(*s.field(), v[all.pivots()[i]], all.basis()[i], v);
        SparseVec out;
        for (std::size_t t = 0; t < d; ++t)
            if (v[t]) add_term(out, static_cast<std::size_t>(pos[t]), v[t]);
        return out;
    };
    LieSuperalgebra q(s.field(), r0, m - r0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) q.set_bracket(a, b, project(to_dense(s.bracket_basis(rest[a], rest[b]), d)));
    for (std::size_t a = r0; a < m; ++a)
        q.set_square(a - r0, project(to_dense(s.square_basis(rest[a] - s.dim_even()), d)));
    if (!s.labels.empty())
        for (auto t : rest) q.labels.push_back(s.label(t));
    return q;
}

// ------------------------------------------------------------ fingerprint

std::string SuperFingerprint::str() const {
    std::ostringstream os;
    os << "sdim=(" << dim_even << "|" << dim_odd << ") even{" << even.str() << "} z=(" << center_even << "|" << center_odd
       << ") odd_chain=[";
    for (std::size_t i = 0; i < odd_chain.size(); ++i) os << (i ? "," : "") << odd_chain[i];
    os << "] derived=(" << derived_even << "|" << derived_odd << ")";
    return os.str();
}

SuperFingerprint fingerprint(const LieSuperalgebra& s) {
    SuperFingerprint fp;
    fp.dim_even = s.dim_even();
    fp.dim_odd = s.dim_odd();
    fp.even = fingerprint(s.even_part());
    GradedSubspace z = super_center(s);
    fp.center_even = z.even.dim();
    fp.center_odd = z.odd.dim();
    const std::size_t d = s.dim();
    std::vector<Vec> odd_units;
    for (std::size_t i = s.dim_even(); i < d; ++i) odd_units.push_back(unit_vec(d, i));
    Subspace m = Subspace::span(s.field(), d, odd_units);
    fp.odd_chain.push_back(m.dim());
    for (;;) {
        std::vector<Vec> next;
        for (std::size_t a = 0; a < s.dim_even(); ++a)
            for (const auto& v : m.basis()) next.push_back(s.bracket(unit_vec(d, a), v));
        Subspace n = Subspace::span(s.field(), d, next);
        bool stable = n.dim() == m.dim();
        fp.odd_chain.push_back(n.dim());
        m = std::move(n);
        if (stable) break;
    }
    GradedSubspace der = derived_super(s);
    fp.derived_even = der.even.dim();
    fp.derived_odd = der.odd.dim();
    return fp;
}

// ------------------------------------------------------- matrix algebras

MatrixSuperalgebra matrix_superalgebra(FieldPtr f, const std::vector<int>& parity, const std::vector<Matrix>& mats) {
    MatrixSuperalgebra m;
    m.N = parity.size();
    m.parity = parity;
    const std::size_t N = m.N;
    for (const auto& x : mats) {
        if (x.rows() != N || x.cols() != N) throw UsageError("supermatrix has the wrong size");
        int p = -1;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                if (!x.at(i, j)) continue;
                int q = (parity[i] + parity[j]) & 1;
                if (p >= 0 && p != q) throw UsageError("supermatrix is not homogeneous");
                p = q;
            }
        if (p == 1)
            m.odd_mats.push_back(x);
        else if (p == 0)
            m.even_mats.push_back(x);
    }
    std::vector<Vec> ev, od, sq;
    for (const auto& x : m.even_mats) ev.push_back(x.flatten());
    for (const auto& x : m.odd_mats) {
        od.push_back(x.flatten());
        sq.push_back((x * x).flatten());
    }
    auto unflat = [&](const Vec& v) {
        Matrix a(f, N, N);
        for (std::size_t r = 0; r < N * N; ++r) a.at(r / N, r % N) = v[r];
        return a;
    };
    auto br = [&](const Vec& x, const Vec& y) { return commutator(unflat(x), unflat(y)).flatten(); };
    m.s = detail::build_super(f, N * N, ev, od, br, sq);
    return m;
}

Vec matrix_coords(const MatrixSuperalgebra& m, const Matrix& x) {
    const std::size_t k = m.even_mats.size() + m.odd_mats.size();
    RowReducer rr(x.field(), m.N * m.N, k);
    std::size_t t = 0;
    for (const auto* list : {&m.even_mats, &m.odd_mats})
        for (const auto& a : *list) rr.insert(a.flatten(), unit_vec(k, t++));
    Vec c;
    if (!is_zero(rr.reduce(x.flatten(), &c))) throw UsageError("matrix is outside the superalgebra");
    return c;
}

}  // namespace lie2
