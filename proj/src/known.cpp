#include "lie2/known.hpp"

#include <cstdint>
#include <utility>

#include "lie2/error.hpp"
#include "super_build.hpp"

namespace lie2 {

namespace {

// binom(a, b) mod 2 with 0 for negative arguments.
int b2(long a, long b) {
    if (a < 0 || b < 0) return 0;
    return binom2(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

struct KlIndex {
    int n;
    long top;  // 2^(n-1) - 2
    std::size_t dim_even() const { return static_cast<std::size_t>(top + 3); }
    std::size_t dim_odd() const { return static_cast<std::size_t>(top + 2); }
    bool has_x(long k) const { return k >= -2 && k <= top; }
    bool has_y(long m) const { return m >= -1 && m <= top; }
    std::size_t x(long k) const { return static_cast<std::size_t>(k + 2); }
    std::size_t y(long m) const { return dim_even() + static_cast<std::size_t>(m + 1); }
};

KlIndex kl_index(int n) {
    if (n < 2 || n > kMaxHeight) throw UsageError("kl needs 2 <= n <= " + std::to_string(kMaxHeight));
    return {n, (1L << (n - 1)) - 2};
}

LieSuperalgebra kl_table(FieldPtr f, int n, bool printed) {
    const KlIndex I = kl_index(n);
    LieSuperalgebra s(f, I.dim_even(), I.dim_odd());
    auto put_x = [&](SparseVec& v, long k) { if (I.has_x(k)) add_term(v, I.x(k), 1); };
    auto put_y = [&](SparseVec& v, long m) { if (I.has_y(m)) add_term(v, I.y(m), 1); };

    for (long k = -2; k <= I.top; ++k) {
        for (long m = k + 1; m <= I.top; ++m) {
            SparseVec v;
            if (k == -2) {
                if (m >= 1) put_x(v, m - 2);
            } else if (b2(k + m + 2, k + 1)) {
                put_x(v, k + m);
            }
            s.set_bracket(I.x(k), I.x(m), v);
        }
    }
    for (long k = -1; k <= I.top; ++k) {
        for (long m = k + 1; m <= I.top; ++m) {
            SparseVec v;
            if (b2(k + m + 2, k + 1)) put_x(v, k + m);
            s.set_bracket(I.y(k), I.y(m), v);
        }
    }
    for (long k = -2; k <= I.top; ++k) {
        for (long m = -1; m <= I.top; ++m) {
            SparseVec v;
            if (k == -1 && m == -1) {
                put_y(v, -1);
            } else if (k == -2 && !printed) {
                put_y(v, m - 2);
                put_y(v, m);
            } else if (b2(k + m + 2, k + 1)) {
                put_y(v, k + m);
                put_y(v, k + m + 1);
            }
            s.set_bracket(I.x(k), I.y(m), v);
        }
    }
    for (long m = -1; m <= I.top; ++m) {
        SparseVec v;
        if (m == -1) {
            put_x(v, -2);
            put_x(v, printed ? 0 : -1);
        } else if (b2(2 * m + 1, m)) {
            put_x(v, 2 * m);
        }
        s.set_square(static_cast<std::size_t>(m + 1), v);
    }
    for (long k = -2; k <= I.top; ++k) s.labels.push_back("X_" + std::to_string(k));
    for (long m = -1; m <= I.top; ++m) s.labels.push_back("Y_" + std::to_string(m));
    return s;
}

bool nilpotent(const Matrix& m, std::size_t* order) {
    const std::size_t d = m.rows();
    if (d == 0) {
        if (order) *order = 0;
        return true;
    }
    Matrix p = m;
    for (std::size_t k = 1; k <= d; ++k) {
        if (p.is_zero()) {
            if (order) *order = k;
            return true;
        }
        p = p * m;
    }
    return false;
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    Matrix b(m.field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) b.at(i, j) = m.at(r0 + i, c0 + j);
    return b;
}

using Relations = std::vector<std::pair<std::pair<std::size_t, std::size_t>, SparseVec>>;
using SquareRelations = std::vector<std::pair<std::size_t, SparseVec>>;

SparseVec sv(std::initializer_list<std::size_t> idx) {
    SparseVec v;
    for (std::size_t i : idx) add_term(v, i, 1);
    return v;
}

// Listed entries of `table` agree with `s`.
bool matches_listed(const LieSuperalgebra& s, const Relations& br, const SquareRelations& sq) {
    for (const auto& [ab, v] : br)
        if (s.bracket_basis(ab.first, ab.second) != v) return false;
    for (const auto& [i, v] : sq)
        if (s.square_basis(i) != v) return false;
    return true;
}

Matrix elementary(FieldPtr f, std::size_t N, std::initializer_list<std::pair<std::size_t, std::size_t>> ones) {
    Matrix m(f, N, N);
    for (auto [i, j] : ones) m.at(i - 1, j - 1) = 1;
    return m;
}

}  // namespace

LieSuperalgebra kl(FieldPtr f, int n) { return kl_table(std::move(f), n, false); }
LieSuperalgebra kl_printed(FieldPtr f, int n) { return kl_table(std::move(f), n, true); }

std::size_t kl_even_index(int n, int k) {
    const KlIndex I = kl_index(n);
    if (!I.has_x(k)) throw UsageError("X_" + std::to_string(k) + " is not in kl");
    return I.x(k);
}

std::size_t kl_odd_index(int n, int m) {
    const KlIndex I = kl_index(n);
    if (!I.has_y(m)) throw UsageError("Y_" + std::to_string(m) + " is not in kl");
    return I.y(m);
}

LieSuperalgebra kl_from_vect(FieldPtr f, int n) {
    ExtendedVect v(f, n);
    EOBasis b = e_o_basis(f, n);
    std::vector<Vec> sq;
    for (const Vec& o : b.odds) sq.push_back(v.two_map(o));
    LieSuperalgebra s = superalgebra_in_basis(v.algebra(), b.evens, b.odds, sq);
    s.labels = kl(f, n).labels;
    return s;
}

LieSuperalgebra q_vect(FieldPtr f, int n) {
    if (n < 2 || n > kMaxHeight) throw UsageError("q(vect) needs 2 <= n <= " + std::to_string(kMaxHeight));
    ExtendedVect v(f, n - 1);
    const std::size_t d = v.dim();
    auto split = [d](const Vec& z) {
        return std::pair<Vec, Vec>{Vec(z.begin(), z.begin() + d), Vec(z.begin() + d, z.end())};
    };
    auto join = [d](const Vec& a, const Vec& b) {
        Vec z(2 * d, 0);
        for (std::size_t i = 0; i < d; ++i) z[i] = a[i], z[d + i] = b[i];
        return z;
    };
    detail::BracketFn br = [&](const Vec& x, const Vec& y) {
        auto [x0, x1] = split(x);
        auto [y0, y1] = split(y);
        return join(add(v.bracket(x0, y0), v.bracket(x1, y1)), add(v.bracket(x0, y1), v.bracket(x1, y0)));
    };
    std::vector<Vec> even, odd, sq;
    for (std::size_t i = 0; i < d; ++i) even.push_back(unit_vec(2 * d, i));
    for (std::size_t i = 1; i < d; ++i) {
        odd.push_back(unit_vec(2 * d, d + i));
        sq.push_back(join(v.two_map(unit_vec(d, i)), Vec(d, 0)));
    }
    LieSuperalgebra s = detail::build_super(f, 2 * d, even, odd, br, sq);
    for (std::size_t i = 0; i < d; ++i) s.labels.push_back("X_" + std::to_string(static_cast<long>(i) - 2));
    for (std::size_t i = 1; i < d; ++i) s.labels.push_back("PX_" + std::to_string(static_cast<long>(i) - 2));
    return s;
}

AmbientSuperization vect_superization(const GeneratingFunction& u) {
    ExtendedVect v(u.f, u.n);
    AmbientSuperization a = superize_in_ambient(v.algebra(), v.derived_vect(), v.grading_operator(u),
                                                [&v](const Vec& x) { return v.two_map(x); });
    return a;
}

AmbientSuperization k_contact(FieldPtr f, int n) {
    return vect_superization(GeneratingFunction::make(f, n, Vec(static_cast<std::size_t>(n), 0)));
}

std::string to_string(QVerdict v) { return v == QVerdict::not_q ? "not_q" : "q_like"; }

QDiscriminant q_discriminant(const LieSuperalgebra& s, const Vec& x) {
    const std::size_t d0 = s.dim_even(), d1 = s.dim_odd();
    if (x.size() != s.dim()) throw UsageError("vector of the wrong dimension");
    for (std::size_t i = d0; i < s.dim(); ++i)
        if (x[i]) throw UsageError("q discriminant needs an even vector");
    Matrix ad = s.ad(x);
    QDiscriminant q;
    q.nilpotent_even = nilpotent(block(ad, 0, 0, d0, d0), &q.nilpotency_even);
    if (!q.nilpotent_even) q.nilpotency_even = 0;
    q.nilpotent_odd = nilpotent(block(ad, d0, d0, d1, d1), nullptr);
    q.verdict = q.nilpotent_even && !q.nilpotent_odd ? QVerdict::not_q : QVerdict::q_like;
    return q;
}

WeightVectors weight_vectors(const LieSuperalgebra& s, const std::vector<Vec>& raising, const Vec& lowering) {
    const FieldPtr& f = s.field();
    const std::size_t d1 = s.dim_odd();
    std::vector<Vec> rows;
    for (const Vec& r : raising) {
        Matrix m = s.even_on_odd(r);
        for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    }
    WeightVectors w;
    if (rows.empty()) {
        w.highest = Subspace::whole(f, d1);
    } else {
        w.highest = Subspace::span(f, d1, rank_nullspace(Matrix::from_rows(f, rows)).basis);
    }
    w.lowest = Subspace::span(f, d1, rank_nullspace(s.even_on_odd(lowering)).basis);
    return w;
}

bool kl_lucas_identities(int n) {
    if (n < 3 || n > 62) throw UsageError("identities need 3 <= n <= 62");
    const std::uint64_t H = std::uint64_t{1} << (n - 1);
    for (int k = 1; k <= n - 2; ++k) {
        const std::uint64_t p = std::uint64_t{1} << k;
        if (binom2(H - 2 + p, p) || binom2(H - 1 + p, p) || binom2(H - 1 + p - 1, p - 1)) return false;
    }
    return true;
}

bool is_super_homomorphism(const LieSuperalgebra& from, const LieSuperalgebra& to, const Matrix& phi) {
    const std::size_t d = from.dim();
    if (phi.rows() != to.dim() || phi.cols() != d) return false;
    for (std::size_t j = 0; j < d; ++j) {
        Vec c = phi.col(j);
        for (std::size_t i = 0; i < to.dim(); ++i)
            if (c[i] && to.is_odd_index(i) != from.is_odd_index(j)) return false;
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            Vec lhs = phi.apply(to_dense(from.bracket_basis(a, b), d));
            if (lhs != to.bracket(phi.col(a), phi.col(b))) return false;
        }
    }
    for (std::size_t i = 0; i < from.dim_odd(); ++i) {
        Vec lhs = phi.apply(to_dense(from.square_basis(i), d));
        if (lhs != to.square(phi.col(from.dim_even() + i))) return false;
    }
    return true;
}

LieSuperalgebra make_known_super(FieldPtr f, std::string_view name, std::size_t a, std::size_t b) {
    const int n = static_cast<int>(a);
    if (name == "kl") return kl(f, n);
    if (name == "kl-printed") return kl_printed(f, n);
    if (name == "q-vect") return q_vect(f, n);
    if (name == "k") {
        if (n < 2 || n > kMaxHeight) throw UsageError("k needs 2 <= n <= " + std::to_string(kMaxHeight));
        return k_contact(f, n).s;
    }
    SuperLabel l;
    l.a = a;
    l.b = b;
    if (name == "oo-II" || name == "oo-IPi" || name == "oo-PiPi") {
        l.kind = SuperLabel::Kind::oo;
        l.form_even = name == "oo-PiPi" ? FormKind::Pi : FormKind::I;
        l.form_odd = name == "oo-II" ? FormKind::I : FormKind::Pi;
        if (l.form_even == FormKind::Pi && a % 2) throw UsageError("Pi form needs even dimension");
        if (l.form_odd == FormKind::Pi && b % 2) throw UsageError("Pi form needs even dimension");
    } else if (name == "pe") {
        l.kind = SuperLabel::Kind::pe;
        l.b = a;
    } else {
        throw UsageError("unknown superalgebra '" + std::string(name) + "'");
    }
    if (l.a + l.b == 0) throw UsageError("empty superspace");
    return label_superalgebra(f, l);
}

SmallCase vect2_small_case(FieldPtr f, int c0, int c1) {
    const bool zero = c0 == 0 && c1 == 0;
    if (!zero && !(c0 == 1 && c1 == 1)) throw UsageError("small cases are (0,0) and (1,1)");
    ExtendedVect v(f, 2);
    auto vf = [&](std::initializer_list<std::size_t> mono, Elem d2) {
        DividedPoly p(f, 2);
        for (std::size_t r : mono) p = p + DividedPoly::monomial(f, 2, r);
        return v.field_vec(p, d2);
    };
    SmallCase c;
    std::vector<Vec> even, odd;
    std::vector<Matrix> mats, matrix_basis;
    Relations br, mbr;
    SquareRelations sq, msq;
    const std::vector<int> parity{0, 1, 1};
    if (zero) {
        c.name = "oo^(1)_IPi(1|2)";
        even = {vf({}, 1), vf({1}, 0), vf({3}, 0)};  // d^2, x d, x^(3) d
        odd = {vf({0}, 0), vf({2}, 0)};              // d, x^(2) d
        mats = {elementary(f, 3, {{2, 3}}), elementary(f, 3, {{2, 2}, {3, 3}}), elementary(f, 3, {{3, 2}}),
                elementary(f, 3, {{1, 3}, {2, 1}}), elementary(f, 3, {{1, 2}, {3, 1}})};
        br = {{{1, 0}, {}},      {{1, 2}, {}},      {{0, 2}, sv({1})}, {{0, 3}, {}},      {{1, 3}, sv({3})},
              {{2, 3}, sv({4})}, {{0, 4}, sv({3})}, {{1, 4}, sv({4})}, {{2, 4}, {}}};
        sq = {{0, sv({0})}, {1, sv({2})}};
        matrix_basis = mats;
        mbr = br;
        msq = sq;
    } else {
        c.name = "oo^(1)_II(1|2)";
        even = {vf({0, 1, 2}, 0), vf({0, 1}, 1), vf({1, 3}, 1)};  // (1+x+x^(2)) d, d^2+(1+x) d, d^2+(x+x^(3)) d
        odd = {vf({0, 1}, 0), vf({0, 2}, 0)};                     // (1+x) d, (1+x^(2)) d
        Matrix E1 = elementary(f, 3, {{1, 1}, {2, 2}}), E2 = elementary(f, 3, {{2, 2}, {3, 3}}),
               E3 = elementary(f, 3, {{2, 3}, {3, 2}}), O1 = elementary(f, 3, {{1, 2}, {2, 1}}),
               O2 = elementary(f, 3, {{1, 3}, {3, 1}});
        mats = {E3, E1, E2 + E3, O1, O1 + O2};
        br = {{{0, 1}, sv({0})},    {{0, 2}, {}}, {{1, 2}, sv({0})}, {{0, 3}, sv({3, 4})}, {{1, 3}, {}},
              {{2, 3}, sv({4})},    {{0, 4}, sv({4})}, {{1, 4}, sv({3, 4})}, {{2, 4}, {}}};
        sq = {{0, sv({1})}, {1, sv({2})}};
        matrix_basis = {E1, E2, E3, O1, O2};
        mbr = {{{0, 1}, {}}, {{0, 2}, sv({2})}, {{1, 2}, {}}, {{1, 3}, sv({3})}, {{1, 4}, sv({4})},
               {{0, 3}, {}}, {{0, 4}, sv({4})}, {{2, 3}, sv({4})}, {{2, 4}, sv({3})}};
        msq = {{0, sv({0})}, {1, sv({0, 1})}};
    }
    std::vector<Vec> squares;
    for (const Vec& o : odd) squares.push_back(v.two_map(o));
    c.from_vect = superalgebra_in_basis(v.algebra(), even, odd, squares);
    c.from_matrices = matrix_superalgebra(f, parity, mats).s;
    LieSuperalgebra matrix_side = matrix_superalgebra(f, parity, matrix_basis).s;
    c.listed = br.size() + sq.size();

    GeneratingFunction u = GeneratingFunction::make(f, 2, Vec{static_cast<Elem>(c0), static_cast<Elem>(c1)});
    AmbientSuperization amb = vect_superization(u);
    c.spans_superization = Subspace::span(f, v.dim(), even) == Subspace::span(f, v.dim(), amb.even) &&
                           Subspace::span(f, v.dim(), odd) == Subspace::span(f, v.dim(), amb.odd);
    c.vect_matches_matrices = c.from_vect == c.from_matrices;
    c.vect_matches_table = matches_listed(c.from_vect, br, sq);
    c.matrices_match_table = matches_listed(matrix_side, mbr, msq);
    return c;
}

}  // namespace lie2
