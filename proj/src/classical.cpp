#include "lie2/classical.hpp"

#include <functional>
#include <set>

#include "lie2/error.hpp"

namespace lie2 {

std::string to_string(FormKind k) {
    switch (k) {
        case FormKind::I: return "I";
        case FormKind::Pi: return "Pi";
        default: return "degenerate";
    }
}

namespace {

bool is_symmetric(const Matrix& m) { return m.rows() == m.cols() && m == m.transpose(); }

Elem bf(const Matrix& B, const Vec& x, const Vec& y) {
    const Field& f = *B.field();
    Vec by = B.apply(y);
    Elem s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s ^= f.mul(x[i], by[i]);
    return s;
}

Matrix diag01(FieldPtr f, std::size_t zeros, std::size_t ones) {
    Matrix d(f, zeros + ones, zeros + ones);
    for (std::size_t i = zeros; i < zeros + ones; ++i) d.at(i, i) = 1;
    return d;
}

// {M : M^T B + B M = c B}; returns the M parts and the matching c of a basis.
std::pair<std::vector<Matrix>, Vec> form_space(const Matrix& B, bool with_scalar) {
    const FieldPtr& f = B.field();
    const std::size_t N = B.rows(), u = N * N + (with_scalar ? 1 : 0);
    Matrix eq(f, N * N, u);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t s = 0; s < N; ++s) {
            std::size_t row = r * N + s;
            // (M^T B)_{rs} = sum_i M_{ir} B_{is}; (B M)_{rs} = sum_j B_{rj} M_{js}
            for (std::size_t i = 0; i < N; ++i) eq.at(row, i * N + r) ^= B.at(i, s);
            for (std::size_t j = 0; j < N; ++j) eq.at(row, j * N + s) ^= B.at(r, j);
            if (with_scalar) eq.at(row, N * N) = B.at(r, s);
        }
    std::vector<Matrix> mats;
    Vec cs;
    for (const auto& v : rank_nullspace(eq).basis) {
        mats.push_back(unflatten(f, N, Vec(v.begin(), v.begin() + N * N)));
        cs.push_back(with_scalar ? v[N * N] : 0);
    }
    return {mats, cs};
}

std::vector<Vec> flat(const std::vector<Matrix>& ms) {
    std::vector<Vec> out;
    for (const auto& m : ms) out.push_back(m.flatten());
    return out;
}

// Split into homogeneous pieces; the echelon basis of a graded span is homogeneous.
std::vector<Matrix> homogeneous_basis(FieldPtr f, const std::vector<int>& parity, const std::vector<Matrix>& mats) {
    const std::size_t N = parity.size();
    std::vector<Vec> parts;
    for (const auto& m : mats) {
        Vec e(N * N, 0), o(N * N, 0);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) ((parity[i] ^ parity[j]) ? o : e)[i * N + j] = m.at(i, j);
        parts.push_back(e);
        parts.push_back(o);
    }
    std::vector<Matrix> out;
    Subspace span = Subspace::span(f, N * N, parts);
    for (const auto& v : span.basis()) out.push_back(unflatten(f, N, v));
    return out;
}

std::vector<Matrix> traceless_basis(FieldPtr f, std::size_t N) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j && i + 1 == N) continue;
            Matrix m(f, N, N);
            m.at(i, j) = 1;
            if (i == j) m.at(N - 1, N - 1) = 1;
            out.push_back(std::move(m));
        }
    return out;
}

Matrix ad_on_gl(const Matrix& A) {
    const std::size_t N = A.rows();
    return operator_matrix(A.field(), N * N, [&](std::size_t j) {
        Matrix e(A.field(), N, N);
        e.at(j / N, j % N) = 1;
        return commutator(A, e).flatten();
    });
}

}  // namespace

FormKind classify_form(const Matrix& gram) {
    if (!is_symmetric(gram)) throw UsageError("classify_form: Gram matrix is not symmetric");
    if (determinant(gram) == 0) return FormKind::Degenerate;
    if (gram.rows() % 2 == 1) return FormKind::I;
    for (std::size_t i = 0; i < gram.rows(); ++i)
        if (gram.at(i, i)) return FormKind::I;
    return FormKind::Pi;
}

Matrix block_gram(FieldPtr f, const std::vector<FormBlock>& blocks) {
    std::size_t N = 0;
    for (const auto& b : blocks) N += b.dim;
    Matrix g(f, N, N);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        if (b.kind == FormKind::I) {
            for (std::size_t i = 0; i < b.dim; ++i) g.at(off + i, off + i) = 1;
        } else if (b.kind == FormKind::Pi) {
            if (b.dim % 2) throw UsageError("a Pi block needs even size");
            const std::size_t m = b.dim / 2;
            for (std::size_t i = 0; i < m; ++i) g.at(off + i, off + m + i) = g.at(off + m + i, off + i) = 1;
        } else {
            throw UsageError("degenerate block");
        }
        off += b.dim;
    }
    return g;
}

BilinearForm BilinearForm::identity(FieldPtr f, std::size_t n) { return from_gram(Matrix::identity(std::move(f), n)); }

BilinearForm BilinearForm::split(FieldPtr f, std::size_t n) {
    if (n % 2) throw UsageError("the split form needs even dimension");
    return from_gram(block_gram(std::move(f), {{FormKind::Pi, n}}));
}

BilinearForm BilinearForm::from_gram(Matrix gram) {
    FormKind k = classify_form(gram);
    if (k == FormKind::Degenerate) throw UsageError("bilinear form is degenerate");
    return BilinearForm{std::move(gram), k};
}

std::optional<Matrix> find_transition(const Matrix& B, const std::vector<FormBlock>& target) {
    const FieldPtr& f = B.field();
    const std::size_t N = B.rows();
    Matrix T = block_gram(f, target);
    if (T.rows() != N) throw UsageError("target form has the wrong dimension");
    FormKind kb = classify_form(B);
    if (kb == FormKind::Degenerate) throw UsageError("find_transition: degenerate form");
    if (N == 0) return Matrix(f, 0, 0);
    if (classify_form(T) != kb) return std::nullopt;

    struct Step {
        bool pair;
        std::size_t p, q;
    };
    std::vector<Step> steps;
    std::size_t off = 0;
    for (const auto& b : target) {
        if (b.kind == FormKind::I)
            for (std::size_t i = 0; i < b.dim; ++i) steps.push_back({false, off + i, 0});
        else
            for (std::size_t i = 0; i < b.dim / 2; ++i) steps.push_back({true, off + i, off + b.dim / 2 + i});
        off += b.dim;
    }
    std::vector<bool> single_after(steps.size() + 1, false);
    for (std::size_t i = steps.size(); i-- > 0;) single_after[i] = single_after[i + 1] || !steps[i].pair;

    std::vector<Vec> cols(N);
    auto combo = [&](const std::vector<Vec>& W, std::uint32_t mask) {
        Vec v(N, 0);
        for (std::size_t i = 0; i < W.size(); ++i)
            if (mask >> i & 1) v = add(v, W[i]);
        return v;
    };
    auto perp = [&](const std::vector<Vec>& W, const std::vector<Vec>& against) {
        Matrix m(f, against.size(), W.size());
        for (std::size_t r = 0; r < against.size(); ++r)
            for (std::size_t c = 0; c < W.size(); ++c) m.at(r, c) = bf(B, W[c], against[r]);
        std::vector<Vec> out;
        for (const auto& c : rank_nullspace(m).basis) {
            Vec v(N, 0);
            for (std::size_t i = 0; i < W.size(); ++i) axpy(*f, c[i], W[i], v);
            out.push_back(v);
        }
        return out;
    };
    auto compatible = [&](const std::vector<Vec>& W, std::size_t next) {
        if (next == steps.size()) return W.empty();
        bool alternating = true;
        for (const auto& w : W)
            if (bf(B, w, w)) alternating = false;
        return alternating == !single_after[next];
    };
    std::function<bool(std::size_t, const std::vector<Vec>&)> solve = [&](std::size_t k, const std::vector<Vec>& W) {
        if (k == steps.size()) return true;
        const Step& st = steps[k];
        const std::uint32_t lim = 1u << W.size();
        for (std::uint32_t mu = 1; mu < lim; ++mu) {
            Vec u = combo(W, mu);
            if (!st.pair) {
                if (bf(B, u, u) != 1) continue;
                auto rest = perp(W, {u});
                if (!compatible(rest, k + 1)) continue;
                cols[st.p] = u;
                if (solve(k + 1, rest)) return true;
                continue;
            }
            if (bf(B, u, u) != 0) continue;
            for (std::uint32_t mv = 1; mv < lim; ++mv) {
                Vec v = combo(W, mv);
                if (bf(B, v, v) != 0 || bf(B, u, v) != 1) continue;
                auto rest = perp(W, {u, v});
                if (!compatible(rest, k + 1)) continue;
                cols[st.p] = u;
                cols[st.q] = v;
                if (solve(k + 1, rest)) return true;
            }
        }
        return false;
    };
    std::vector<Vec> all;
    for (std::size_t i = 0; i < N; ++i) all.push_back(unit_vec(N, i));
    if (N > 20) throw ResourceError("find_transition supports N <= 20");
    if (!solve(0, all)) return std::nullopt;
    Matrix P = Matrix::from_cols(f, N, cols);
    if (P.transpose() * B * P != T) throw InternalError("find_transition produced a wrong Gram matrix");
    return P;
}

// ------------------------------------------------------------------ series

Series parse_series(std::string_view name) {
    static const std::pair<const char*, Series> table[] = {
        {"gl", Series::gl}, {"sl", Series::sl}, {"psl", Series::psl}, {"o", Series::o}, {"o1", Series::o1},
        {"o2", Series::o2}, {"o2_mod_c", Series::o2_mod_c}, {"tilde_o", Series::tilde_o}};
    for (const auto& [n, s] : table)
        if (name == n) return s;
    throw UsageError("unknown series '" + std::string(name) + "' (gl, sl, psl, o, o1, o2, o2_mod_c, tilde_o)");
}

std::string series_name(Series s) {
    switch (s) {
        case Series::gl: return "gl";
        case Series::sl: return "sl";
        case Series::psl: return "psl";
        case Series::o: return "o";
        case Series::o1: return "o1";
        case Series::o2: return "o2";
        case Series::o2_mod_c: return "o2_mod_c";
        case Series::tilde_o: return "tilde_o";
    }
    return "?";
}

LieAlgebra make_gl(FieldPtr f, std::size_t N) {
    if (N == 0 || N > 16) throw UsageError("matrix size must be in 1..16");
    const std::size_t d = N * N;
    StructureConstants sc(f, d);
    // [e_ij, e_kl] = d_jk e_il + d_li e_kj
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            std::size_t i = a / N, j = a % N, k = b / N, l = b % N;
            SparseVec v;
            if (j == k) add_term(v, i * N + l, 1);
            if (l == i) add_term(v, k * N + j, 1);
            sc.set_pair(a, b, v);
        }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < d; ++a) labels.push_back("E(" + std::to_string(a / N + 1) + "," + std::to_string(a % N + 1) + ")");
    return LieAlgebra(std::move(sc), labels);
}

Matrix unflatten(FieldPtr f, std::size_t N, const Vec& v) {
    if (v.size() != N * N) throw UsageError("flattened matrix has the wrong length");
    Matrix m(std::move(f), N, N);
    for (std::size_t r = 0; r < N * N; ++r) m.at(r / N, r % N) = v[r];
    return m;
}

Matrix ClassicalAlgebra::induced(const Matrix& on_gl) const {
    Matrix u(gl.field(), sub.dim(), sub.dim());
    for (std::size_t j = 0; j < sub.dim(); ++j) {
        Vec img = on_gl.apply(sub.basis()[j]);
        if (!sub.contains(img)) throw UsageError("operator does not preserve " + name);
        u.set_col(j, sub.coords(img));
    }
    if (quotient) return quotient->projection * u * quotient->lift;
    return u;
}

ClassicalAlgebra make_classical(FieldPtr f, Series base, std::size_t N, std::optional<BilinearForm> form, int derived,
                                bool mod_center) {
    if (derived < 0 || derived > 8) throw UsageError("derived count must be in 0..8");
    ClassicalAlgebra c;
    c.N = N;
    c.gl = make_gl(f, N);
    const std::size_t d = N * N;
    switch (base) {
        case Series::gl: c.sub = Subspace::whole(f, d); break;
        case Series::sl: c.sub = Subspace::span(f, d, flat(traceless_basis(f, N))); break;
        case Series::o:
        case Series::tilde_o: {
            if (!form) form = base == Series::o ? BilinearForm::identity(f, N) : BilinearForm::split(f, N);
            if (form->gram.rows() != N) throw UsageError("form has the wrong dimension");
            c.sub = Subspace::span(f, d, flat(form_space(form->gram, base == Series::tilde_o).first));
            break;
        }
        default: throw UsageError("base series must be gl, sl, o or tilde_o");
    }
    if (form && base != Series::o && base != Series::tilde_o) throw UsageError("a form applies to orthogonal series only");
    c.form = form;
    for (int k = 0; k < derived; ++k) c.sub = bracket_span(c.gl, c.sub, c.sub);
    c.name = series_name(base) + "(" + std::to_string(N) + ")";
    if (derived) c.name += "^(" + std::to_string(derived) + ")";
    if (form) c.name += "_" + to_string(form->kind);
    LieAlgebra r = restrict_to(c.gl, c.sub);
    if (mod_center) {
        Subspace z = center(r);
        if (base == Series::sl && derived == 0 && z.dim() == 0) throw UsageError("psl needs an even matrix size");
        c.quotient = quotient_map(r, z);
        c.algebra = c.quotient->algebra;
        c.name += "/c";
    } else {
        c.algebra = std::move(r);
    }
    return c;
}

ClassicalAlgebra make_classical(FieldPtr f, Series s, std::size_t N, std::optional<BilinearForm> form) {
    switch (s) {
        case Series::gl:
        case Series::sl:
        case Series::o:
        case Series::tilde_o: return make_classical(f, s, N, form, 0, false);
        case Series::psl: return make_classical(f, Series::sl, N, form, 0, true);
        case Series::o1: return make_classical(f, Series::o, N, form, 1, false);
        case Series::o2:
        case Series::o2_mod_c:
            if (!form) form = BilinearForm::split(f, N);
            return make_classical(f, Series::o, N, form, 2, s == Series::o2_mod_c);
    }
    throw UsageError("unknown series");
}

// ------------------------------------------------------------------ labels

std::string SuperLabel::str() const {
    std::string dims = "(" + std::to_string(a) + "|" + std::to_string(b) + ")";
    std::string d = derived ? "^(" + std::to_string(derived) + ")" : "";
    std::string s;
    switch (kind) {
        case Kind::sl: s = "sl" + dims; break;
        case Kind::psl: s = "psl" + dims; break;
        case Kind::oo: s = "oo" + d + "_" + to_string(form_even) + to_string(form_odd) + dims; break;
        case Kind::pe: s = "pe" + d + "(" + std::to_string(a) + ")"; break;
    }
    return mod_center ? s + "/c" : s;
}

LieSuperalgebra label_superalgebra(FieldPtr f, const SuperLabel& l) {
    const std::size_t N = l.a + l.b;
    if (N == 0) throw UsageError("empty superspace");
    std::vector<int> parity(N, 0);
    for (std::size_t i = l.a; i < N; ++i) parity[i] = 1;
    std::vector<Matrix> mats;
    switch (l.kind) {
        case SuperLabel::Kind::sl:
        case SuperLabel::Kind::psl: mats = traceless_basis(f, N); break;
        case SuperLabel::Kind::oo: {
            std::vector<FormBlock> blocks;
            if (l.a) blocks.push_back({l.form_even, l.a});
            if (l.b) blocks.push_back({l.form_odd, l.b});
            mats = form_space(block_gram(f, blocks), false).first;
            break;
        }
        case SuperLabel::Kind::pe:
            if (l.a != l.b) throw UsageError("pe needs (n|n)");
            mats = form_space(block_gram(f, {{FormKind::Pi, N}}), false).first;
            break;
    }
    LieSuperalgebra s = matrix_superalgebra(f, parity, homogeneous_basis(f, parity, mats)).s;
    for (int k = 0; k < l.derived; ++k) s = sub_superalgebra(s, derived_super(s));
    if (l.mod_center || l.kind == SuperLabel::Kind::psl) s = quotient_super(s, super_center(s));
    return s;
}

// -------------------------------------------------------- projection reps

ClassicalAlgebra reps_algebra(FieldPtr f, Series s, std::size_t N) {
    switch (s) {
        case Series::sl:
        case Series::psl: return make_classical(f, s, N);
        case Series::o1: return make_classical(f, Series::o1, N, BilinearForm::identity(f, N));
        case Series::o2_mod_c: return make_classical(f, Series::o2_mod_c, N, BilinearForm::split(f, N));
        default: throw UsageError("projection representatives exist for sl, psl, o1 and o2_mod_c");
    }
}

ProjectionReps projection_reps(FieldPtr f, Series s, std::size_t N) {
    using K = SuperLabel::Kind;
    struct Plan {
        SuperLabel label;
        std::size_t ker, im;
        FormKind ker_form, im_form;
        std::optional<Elem> c;
    };
    std::vector<Plan> plans;
    ProjectionReps out;
    bool with_form = false;
    Matrix B;
    switch (s) {
        case Series::sl:
        case Series::psl: {
            if (N < 3) throw UsageError("sl gradings need N >= 3");
            if (s == Series::psl && (N % 2 || N < 4)) throw UsageError("psl gradings need even N >= 4");
            K kind = s == Series::sl ? K::sl : K::psl;
            for (std::size_t m = 0; m <= N / 2 * (N % 2 ? 2 : 1); ++m) {
                if (N % 2 && m % 2) continue;  // an odd size leaves only even images in sl
                SuperLabel l{kind, std::min(m, N - m), std::max(m, N - m)};
                plans.push_back({l, N - m, m, FormKind::I, FormKind::I, {}});
            }
            out.expected = N / 2 + 1;
            out.algebra = (s == Series::sl ? "sl(" : "psl(") + std::to_string(N) + ")";
            break;
        }
        case Series::o1: {
            with_form = true;
            B = BilinearForm::identity(f, N).gram;
            if (N % 2) {
                if (N < 3) throw UsageError("o1 gradings need N >= 3");
                for (std::size_t im = 0; im < N; im += 2) {
                    std::size_t ker = N - im;
                    plans.push_back({{K::oo, std::min(ker, im), std::max(ker, im), FormKind::I, FormKind::I, 1}, ker, im,
                                     FormKind::I, FormKind::I, {}});
                    if (im) plans.push_back({{K::oo, ker, im, FormKind::I, FormKind::Pi, 1}, ker, im, FormKind::I, FormKind::Pi, {}});
                }
                out.expected = N;
            } else {
                if (N < 6) throw UsageError("o1 gradings of even size need N >= 6");
                const std::size_t n = N / 2;
                for (std::size_t m = 1; m <= n; ++m)
                    plans.push_back({{K::oo, m, N - m, FormKind::I, FormKind::I, 1}, N - m, m, FormKind::I, FormKind::I, {}});
                for (std::size_t k = 0; k <= n; ++k)
                    plans.push_back(
                        {{K::oo, N - 2 * k, 2 * k, FormKind::I, FormKind::Pi, 1}, N - 2 * k, 2 * k, FormKind::I, FormKind::Pi, {}});
                out.expected = N + 1;
            }
            out.algebra = "o^(1)_I(" + std::to_string(N) + ")";
            break;
        }
        case Series::o2_mod_c: {
            if (N % 2 || N < 6) throw UsageError("o2_mod_c gradings need even N >= 6");
            with_form = true;
            B = BilinearForm::split(f, N).gram;
            const std::size_t n = N / 2;
            for (std::size_t k = 0; 2 * k <= n; ++k)
                plans.push_back({{K::oo, 2 * k, N - 2 * k, FormKind::Pi, FormKind::Pi, 2, true}, N - 2 * k, 2 * k, FormKind::Pi,
                                 FormKind::Pi, Elem{0}});
            plans.push_back({{K::pe, n, n, FormKind::I, FormKind::I, 2, true}, n, n, FormKind::I, FormKind::I, Elem{1}});
            out.expected = n / 2 + 2;
            out.algebra = "o^(2)_Pi(" + std::to_string(N) + ")/c";
            break;
        }
        default: throw UsageError("projection representatives exist for sl, psl, o1 and o2_mod_c");
    }
    for (const auto& p : plans) {
        ProjectionRep r;
        r.label = p.label;
        r.dim_image = p.im;
        r.c_A = p.c;
        Matrix D = diag01(f, p.ker, p.im);
        if (!with_form || p.label.kind == K::pe) {
            r.basis = Matrix::identity(f, N);
            r.A = D;
        } else {
            std::vector<FormBlock> blocks;
            if (p.ker) blocks.push_back({p.ker_form, p.ker});
            if (p.im) blocks.push_back({p.im_form, p.im});
            auto P = find_transition(B, blocks);
            if (!P) {
                out.unrealizable.push_back(p.label.str() + ": the form " + to_string(classify_form(B)) + "_" +
                                           std::to_string(N) + " has no basis with Gram matrix " +
                                           to_string(classify_form(block_gram(f, blocks))) + "_" + std::to_string(N) +
                                           " adapted to Ker A + Im A");
                continue;
            }
            auto Pinv = inverse(*P);
            if (!Pinv) throw InternalError("transition matrix is singular");
            r.basis = *P;
            r.A = *P * D * *Pinv;
        }
        out.reps.push_back(std::move(r));
    }
    return out;
}

ProjectionCheck verify_projection(const ProjectionRep& rep, const ClassicalAlgebra& g) {
    ProjectionCheck c;
    const Matrix& A = rep.A;
    const FieldPtr& f = g.gl.field();
    if (A.rows() != g.N || A.cols() != g.N) throw UsageError("projection has the wrong size");
    c.idempotent = A * A == A;
    ++c.report.checks;
    if (!c.idempotent) c.report.fail("A^2 != A");
    c.image_dim = rank(A);
    Matrix ad = ad_on_gl(A);
    c.preserves = true;
    for (const auto& b : g.sub.basis())
        if (!g.sub.contains(ad.apply(b))) c.preserves = false;
    ++c.report.checks;
    if (!c.preserves) {
        c.report.fail("ad_A does not preserve " + g.name);
        return c;
    }
    Matrix U = g.induced(ad);
    c.derivation = is_derivation(g.algebra, U);
    c.grading = U * U == U;
    c.report.checks += 2;
    if (!c.derivation) c.report.fail("induced operator is not a derivation");
    if (!c.grading) c.report.fail("induced operator is not idempotent");
    if (g.form) {
        const Matrix& B = g.form->gram;
        Matrix M = A.transpose() * B + B * A;
        std::optional<Elem> cval;
        for (std::size_t i = 0; i < g.N && !cval; ++i)
            for (std::size_t j = 0; j < g.N && !cval; ++j)
                if (B.at(i, j)) cval = f->div(M.at(i, j), B.at(i, j));
        c.c_A = cval;
        ++c.report.checks;
        if (!cval || M != B.scaled(*cval)) {
            c.form_ok = false;
            c.report.fail("B(Ax,y) + B(x,Ay) is not a multiple of B(x,y)");
        } else {
            Elem want = rep.c_A.value_or(0);
            if (*cval != want) {
                c.form_ok = false;
                c.report.fail("c_A = " + f->format(*cval) + ", expected " + f->format(want));
            }
            if (*cval > 1) {
                c.form_ok = false;
                c.report.fail("c_A outside {0, 1}");
            }
            if (*cval == 0) {
                // Im A orthogonal to Ker A
                Matrix IA = Matrix::identity(f, g.N) + A;
                Matrix cross = A.transpose() * B * IA;
                ++c.report.checks;
                if (!cross.is_zero()) {
                    c.form_ok = false;
                    c.report.fail("Im A is not orthogonal to Ker A");
                }
            }
        }
    }
    return c;
}

RepSuperization superize_rep(const ProjectionRep& rep, const ClassicalAlgebra& g) {
    const FieldPtr& f = g.gl.field();
    const std::size_t N = g.N;
    auto two_map = [&](const Vec& x) {
        Matrix m = unflatten(f, N, x);
        return (m * m).flatten();
    };
    AmbientSuperization amb = superize_in_ambient(g.gl, g.sub, ad_on_gl(rep.A), two_map);
    RepSuperization r;
    r.s = amb.s;
    if (g.quotient) {
        // image of the central ideal in the coordinates of the superization
        const std::size_t d0 = amb.even.size(), d = d0 + amb.odd.size();
        RowReducer rr(f, N * N, d);
        for (std::size_t t = 0; t < d; ++t) rr.insert(t < d0 ? amb.even[t] : amb.odd[t - d0], unit_vec(d, t));
        Subspace z = center(restrict_to(g.gl, g.sub));
        std::vector<Vec> ev, od;
        for (const auto& zc : z.basis()) {
            Vec c;
            if (!is_zero(rr.reduce(g.sub.from_coords(zc), &c))) throw InternalError("center leaves the superization");
            Vec e(d, 0), o(d, 0);
            for (std::size_t t = 0; t < d; ++t) (t < d0 ? e : o)[t] = c[t];
            if (!is_zero(e)) ev.push_back(e);
            if (!is_zero(o)) od.push_back(o);
        }
        r.s = quotient_super(r.s, {Subspace::span(f, d, ev), Subspace::span(f, d, od)});
    }
    r.valid = validate_super(r.s);
    r.fp = fingerprint(r.s);
    r.predicted_fp = fingerprint(label_superalgebra(f, rep.label));
    r.sdim_match = r.fp.dim_even == r.predicted_fp.dim_even && r.fp.dim_odd == r.predicted_fp.dim_odd;
    r.fingerprint_match = r.fp == r.predicted_fp;
    return r;
}

std::vector<Elem> tilde_o_projection_constants(FieldPtr f, const BilinearForm& B, std::size_t limit) {
    auto [mats, cs] = form_space(B.gram, true);
    const std::size_t dim = mats.size(), q = f->size(), N = B.gram.rows();
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= q;
        if (total > limit) throw ResourceError("tilde-o enumeration exceeds " + std::to_string(limit) + " elements");
    }
    std::set<Elem> found;
    Vec coef(dim, 0);
    Matrix M(f, N, N);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t x = idx;
        for (std::size_t i = 0; i < dim; ++i) {
            coef[i] = static_cast<Elem>(x % q);
            x /= q;
        }
        Elem c = 0;
        M = Matrix(f, N, N);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!coef[i]) continue;
            c ^= f->mul(coef[i], cs[i]);
            M = M + mats[i].scaled(coef[i]);
        }
        if (M * M == M) found.insert(c);
    }
    return {found.begin(), found.end()};
}

}  // namespace lie2
