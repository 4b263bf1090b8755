#include <map>

#include "lie2/error.hpp"
#include "lie2/superalgebra.hpp"
#include "super_build.hpp"

namespace lie2 {

namespace detail {

LieSuperalgebra build_super(FieldPtr f, std::size_t amb_dim, const std::vector<Vec>& even, const std::vector<Vec>& odd,
                            const BracketFn& br, const std::vector<Vec>& odd_squares) {
    const std::size_t d0 = even.size(), d1 = odd.size(), d = d0 + d1;
    if (odd_squares.size() != d1) throw UsageError("one square per odd basis vector is required");
    RowReducer rr(f, amb_dim, d);
    std::vector<Vec> basis(even);
    basis.insert(basis.end(), odd.begin(), odd.end());
    for (std::size_t t = 0; t < d; ++t)
        if (!rr.insert(basis[t], unit_vec(d, t))) throw UsageError("superalgebra basis vectors are dependent");
    auto coords = [&](const Vec& v, int parity, const char* what) {
        Vec c;
        if (!is_zero(rr.reduce(v, &c))) throw UsageError(std::string(what) + " leaves the span");
        SparseVec out;
        for (std::size_t t = 0; t < d; ++t)
            if (c[t]) {
                if ((t >= d0 ? 1 : 0) != parity) throw UsageError(std::string(what) + " breaks the parity");
                add_term(out, t, c[t]);
            }
        return out;
    };
    LieSuperalgebra s(f, d0, d1);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            int p = (a >= d0) ^ (b >= d0);
            s.set_bracket(a, b, coords(br(basis[a], basis[b]), p, "bracket"));
        }
    for (std::size_t i = 0; i < d1; ++i) s.set_square(i, coords(odd_squares[i], 0, "square"));
    for (std::size_t a = 0; a < d; ++a)
        if (!is_zero(br(basis[a], basis[a]))) throw UsageError("bracket of a basis vector with itself is nonzero");
    return s;
}

}  // namespace detail

GradingOperator GradingOperator::make(const LieAlgebra& g, Matrix U) {
    if (U.rows() != g.dim() || U.cols() != g.dim()) throw UsageError("grading matrix has the wrong size");
    if (U * U != U) throw UsageError("grading operator is not idempotent");
    if (!is_derivation(g, U)) throw UsageError("grading operator is not a derivation");
    return GradingOperator{std::move(U)};
}

LieSuperalgebra superalgebra_in_basis(const LieAlgebra& amb, const std::vector<Vec>& even, const std::vector<Vec>& odd,
                                      const std::vector<Vec>& odd_squares) {
    auto br = [&](const Vec& x, const Vec& y) { return amb.bracket(x, y); };
    return detail::build_super(amb.field(), amb.dim(), even, odd, br, odd_squares);
}

// --------------------------------------------------- closure by derivations

namespace {

class DerivationClosure {
public:
    DerivationClosure(const LieAlgebra& g, std::size_t max_adjoined)
        : g_(g), d_(g.dim()), max_(max_adjoined), rr_(g.field(), d_ * d_, d_ + max_adjoined) {
        for (std::size_t i = 0; i < d_; ++i) rr_.insert(g.ad_basis(i).flatten(), unit_vec(d_ + max_, i));
    }

    // Coordinates in h = g + span(adjoined) of the derivation m; adjoins m if needed.
    Vec express(const Matrix& m) {
        Vec c;
        if (!is_zero(rr_.reduce(m.flatten(), &c))) {
            if (adj_.size() >= max_) throw ResourceError("restricted closure exceeds " + std::to_string(max_) + " adjoined elements");
            rr_.insert(m.flatten(), unit_vec(d_ + max_, d_ + adj_.size()));
            adj_.push_back(m);
            c.assign(d_ + max_, 0);
            c[d_ + adj_.size() - 1] = 1;
        }
        return c;
    }

    Matrix as_derivation(std::size_t idx) const { return idx < d_ ? g_.ad_basis(idx) : adj_[idx - d_]; }
    std::size_t size() const { return d_ + adj_.size(); }
    std::size_t max() const { return max_; }

private:
    const LieAlgebra& g_;
    std::size_t d_, max_;
    RowReducer rr_;
    std::vector<Matrix> adj_;
};

}  // namespace

RestrictedClosure one_step_closure(const GradedPair& gp, std::size_t max_adjoined) {
    const LieAlgebra& g = gp.g;
    const std::size_t d = g.dim();
    const Field& f = *g.field();
    DerivationClosure dc(g, max_adjoined);
    std::vector<Vec> odd = image_basis(gp.grading.U);
    std::vector<Vec> sq_full;
    for (const auto& x : odd) {
        Matrix a = g.ad(x);
        sq_full.push_back(dc.express(a * a));
    }
    // brackets among adjoined elements, computed until no new element appears
    std::map<std::pair<std::size_t, std::size_t>, Vec> adj_br;
    for (std::size_t k = d; k < dc.size(); ++k)
        for (std::size_t l = d; l < k; ++l) {
            Matrix a = dc.as_derivation(k), b = dc.as_derivation(l);
            adj_br[{l, k}] = dc.express(commutator(a, b));
        }
    const std::size_t m = dc.size();
    auto trim = [&](const Vec& v) { return Vec(v.begin(), v.begin() + m); };
    StructureConstants sc(g.field(), m);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) sc.set_pair(i, j, g.basis_bracket(i, j));
    for (std::size_t k = d; k < m; ++k) {
        Matrix a = dc.as_derivation(k);
        for (std::size_t j = 0; j < d; ++j) {
            SparseVec v;
            for (std::size_t r = 0; r < d; ++r) add_term(v, r, a.at(r, j));
            sc.set_pair(k, j, v);
        }
        for (std::size_t l = d; l < k; ++l) sc.set_pair(l, k, to_sparse(trim(adj_br.at({l, k}))));
    }
    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels = g.labels();
        for (std::size_t k = d; k < m; ++k) labels.push_back("D" + std::to_string(k - d));
    }
    RestrictedClosure c;
    c.h = LieAlgebra(std::move(sc), labels);
    c.base_dim = d;
    c.U = Matrix(g.field(), m, m);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) c.U.at(i, j) = gp.grading.U.at(i, j);
    for (const auto& x : odd) {
        Vec v(m, 0);
        std::copy(x.begin(), x.end(), v.begin());
        c.odd_basis.push_back(v);
    }
    for (const auto& s : sq_full) c.odd_squares.push_back(trim(s));
    ValidationReport rep = validate_lie(c.h);
    if (!rep.ok) throw DomainError("restricted closure is not a Lie algebra: " + rep.summary());
    if (!is_derivation(c.h, c.U)) throw DomainError("grading does not extend to the restricted closure");
    (void)f;
    return c;
}

LieSuperalgebra method2_superize(const RestrictedClosure& c) {
    std::vector<Vec> even = rank_nullspace(c.U).basis;
    LieSuperalgebra s = superalgebra_in_basis(c.h, even, c.odd_basis, c.odd_squares);
    ValidationReport rep = validate_super(s);
    if (!rep.ok) throw DomainError("superization fails the superalgebra axioms: " + rep.summary());
    return s;
}

// ------------------------------------------------------- closure in ambient

AmbientSuperization superize_in_ambient(const LieAlgebra& amb, const Subspace& g, const Matrix& U_amb,
                                        const std::function<Vec(const Vec&)>& two_map, std::size_t max_steps) {
    const std::size_t n = amb.dim();
    const FieldPtr& f = amb.field();
    std::vector<Vec> imgs;
    for (const auto& b : g.basis()) {
        Vec u = U_amb.apply(b);
        if (!g.contains(u)) throw UsageError("grading operator does not preserve the subalgebra");
        imgs.push_back(u);
    }
    AmbientSuperization out;
    out.odd = Subspace::span(f, n, imgs).basis();
    for (const auto& o : out.odd) out.squares.push_back(two_map(o));
    std::vector<Vec> gens = g.basis();
    gens.insert(gens.end(), out.squares.begin(), out.squares.end());
    Subspace h = Subspace::span(f, n, gens);
    for (std::size_t step = 0;; ++step) {
        if (step >= max_steps) throw ResourceError("bracket closure did not stabilize");
        std::vector<Vec> more = h.basis();
        for (std::size_t a = 0; a < h.dim(); ++a)
            for (std::size_t b = a + 1; b < h.dim(); ++b) more.push_back(amb.bracket(h.basis()[a], h.basis()[b]));
        Subspace next = Subspace::span(f, n, more);
        if (next.dim() == h.dim()) break;
        h = std::move(next);
    }
    Subspace ker = Subspace::span(f, n, rank_nullspace(U_amb).basis);
    Subspace even = h.intersect(ker);
    if (even.dim() + out.odd.size() != h.dim()) throw DomainError("closure is not graded by the operator");
    out.even = even.basis();
    out.s = superalgebra_in_basis(amb, out.even, out.odd, out.squares);
    return out;
}

}  // namespace lie2
