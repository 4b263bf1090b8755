#include "lie2/divpow.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "lie2/error.hpp"
#include "super_build.hpp"

namespace lie2 {

namespace {

void check_height(int n) {
    if (n < 1 || n > kMaxHeight) throw UsageError("height n must be in 1.." + std::to_string(kMaxHeight));
}

// v_2(m!) = m - popcount(m)
std::uint64_t v2_factorial(std::uint64_t m) { return m - static_cast<std::uint64_t>(std::popcount(m)); }

// (r j)! / (j! (r!)^j) mod 2, the coefficient of (x^(r))^(j) = N x^(r j).
int power_coeff(std::uint64_t r, std::uint64_t j) {
    return v2_factorial(r * j) == v2_factorial(j) + j * v2_factorial(r) ? 1 : 0;
}

std::string monomial_label(std::size_t r) {
    if (r == 0) return "d";
    if (r == 1) return "x d";
    return "x^(" + std::to_string(r) + ") d";
}

}  // namespace

// ------------------------------------------------------------ DividedPoly

DividedPoly::DividedPoly(FieldPtr f, int n) : f_(std::move(f)), n_(n) {
    check_height(n);
    c_.assign(std::size_t{1} << n, 0);
}

DividedPoly DividedPoly::monomial(FieldPtr f, int n, std::size_t r, Elem c) {
    DividedPoly p(std::move(f), n);
    if (r < p.size()) p.c_[r] = c;
    return p;
}

DividedPoly DividedPoly::constant(FieldPtr f, int n, Elem c) { return monomial(std::move(f), n, 0, c); }

DividedPoly DividedPoly::from_coeffs(FieldPtr f, int n, Vec c) {
    DividedPoly p(std::move(f), n);
    if (c.size() != p.size()) throw UsageError("divided power coefficient vector has the wrong length");
    for (auto e : c) p.f_->check(e);
    p.c_ = std::move(c);
    return p;
}

bool DividedPoly::is_zero() const { return lie2::is_zero(c_); }

DividedPoly DividedPoly::operator+(const DividedPoly& o) const {
    if (n_ != o.n_) throw UsageError("divided powers of different heights");
    DividedPoly r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] ^= o.c_[i];
    return r;
}

DividedPoly DividedPoly::operator*(const DividedPoly& o) const {
    if (n_ != o.n_) throw UsageError("divided powers of different heights");
    const Field& f = *f_;
    DividedPoly r(f_, n_);
    const std::size_t N = size();
    for (std::size_t a = 0; a < N; ++a) {
        if (!c_[a]) continue;
        for (std::size_t b = 0; a + b < N; ++b)
            if (o.c_[b] && binom2(a + b, a)) r.c_[a + b] ^= f.mul(c_[a], o.c_[b]);
    }
    return r;
}

DividedPoly DividedPoly::scaled(Elem a) const {
    DividedPoly r = *this;
    for (auto& e : r.c_) e = f_->mul(e, a);
    return r;
}

DividedPoly DividedPoly::partial(std::size_t m) const {
    DividedPoly r(f_, n_);
    for (std::size_t i = 0; i + m < size(); ++i) r.c_[i] = c_[i + m];
    return r;
}

DividedPoly DividedPoly::divided_power(std::size_t k) const {
    if (c_[0]) throw UsageError("divided power of a polynomial with nonzero constant term");
    const Field& f = *f_;
    const std::size_t N = size();
    // series[j] = (partial sum of terms)^(j), built one monomial at a time
    std::vector<DividedPoly> series(k + 1, DividedPoly(f_, n_));
    series[0].c_[0] = 1;
    for (std::size_t r = 1; r < N; ++r) {
        if (!c_[r]) continue;
        std::vector<DividedPoly> term(k + 1, DividedPoly(f_, n_));
        for (std::size_t j = 0; j <= k; ++j)
            if (r * j < N && power_coeff(r, j)) term[j].c_[r * j] = f.pow(c_[r], j);
        std::vector<DividedPoly> next(k + 1, DividedPoly(f_, n_));
        for (std::size_t a = 0; a <= k; ++a)
            for (std::size_t b = 0; a + b <= k; ++b) next[a + b] = next[a + b] + series[a] * term[b];
        series = std::move(next);
    }
    return series[k];
}

std::string DividedPoly::str() const {
    std::string s;
    for (std::size_t r = size(); r-- > 0;) {
        if (!c_[r]) continue;
        if (!s.empty()) s += "+";
        std::string coef = f_->format(c_[r]);
        bool compound = coef.find('+') != std::string::npos;
        std::string mono = r == 0 ? "" : r == 1 ? "x" : "x^(" + std::to_string(r) + ")";
        if (mono.empty())
            s += coef;
        else if (c_[r] == 1)
            s += mono;
        else
            s += (compound ? "(" + coef + ")" : coef) + "*" + mono;
    }
    return s.empty() ? "0" : s;
}

DividedPoly dp_mul(const DividedPoly& p, const DividedPoly& q) { return p * q; }
DividedPoly dp_partial(const DividedPoly& p, std::size_t m) { return p.partial(m); }

// ------------------------------------------------------ GeneratingFunction

GeneratingFunction GeneratingFunction::make(FieldPtr f, int n, Vec c) {
    check_height(n);
    if (c.size() != static_cast<std::size_t>(n))
        throw UsageError("generating function needs n = " + std::to_string(n) + " parameters c_0..c_{n-1}");
    for (auto e : c) f->check(e);
    return GeneratingFunction{std::move(f), n, std::move(c)};
}

GeneratingFunction GeneratingFunction::parse(FieldPtr f, int n, std::string_view text) {
    Vec c;
    if (text.find(',') == std::string_view::npos && text.find_first_not_of("01") == std::string_view::npos &&
        text.size() == static_cast<std::size_t>(n)) {
        for (char ch : text) c.push_back(ch == '1' ? 1 : 0);
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            c.push_back(f->parse_elem(text.substr(pos, next - pos)));
            pos = next + 1;
        }
    }
    return make(std::move(f), n, std::move(c));
}

DividedPoly GeneratingFunction::poly() const {
    DividedPoly u = DividedPoly::constant(f, n, c[0]);
    for (int k = 1; k < n; ++k) u = u + DividedPoly::monomial(f, n, std::size_t{1} << k, c[k]);
    return u;
}

std::string GeneratingFunction::str() const {
    bool bits = std::all_of(c.begin(), c.end(), [](Elem e) { return e <= 1; });
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!bits && i) s += ",";
        s += f->format(c[i]);
    }
    return s + ")";
}

bool satisfies_u_prop(const DividedPoly& u) {
    const FieldPtr& f = u.field();
    const int n = u.height();
    DividedPoly x = DividedPoly::monomial(f, n, 1);
    Elem a = u.constant_term();
    return (x * u.partial()).is_zero() && u * u == DividedPoly::constant(f, n, f->sqr(a));
}

// ------------------------------------------------------------ v_{n+1}

ExtendedVect::ExtendedVect(FieldPtr f, int n) : f_(std::move(f)), n_(n) {
    check_height(n);
    const std::size_t N = this->N(), d = dim();
    StructureConstants sc(f_, d);
    for (std::size_t a = 0; a < N; ++a) {
        DividedPoly fa = DividedPoly::monomial(f_, n, a);
        // [d^2, x^(a) d] = x^(a-2) d
        if (a >= 2) sc.set_pair(0, index_of(a), {{index_of(a - 2), 1}});
        for (std::size_t b = a + 1; b < N; ++b) {
            DividedPoly fb = DividedPoly::monomial(f_, n, b);
            DividedPoly h = fa * fb.partial() + fb * fa.partial();
            sc.set_pair(index_of(a), index_of(b), to_sparse(field_vec(h)));
        }
    }
    std::vector<std::string> labels{"d^2"};
    for (std::size_t r = 0; r < N; ++r) labels.push_back(monomial_label(r));
    alg_ = LieAlgebra(std::move(sc), labels);
}

Vec ExtendedVect::field_vec(const DividedPoly& f, Elem d2) const {
    if (f.height() != n_) throw UsageError("vector field of the wrong height");
    Vec v(dim(), 0);
    v[0] = d2;
    for (std::size_t r = 0; r < N(); ++r) v[index_of(r)] = f.coeff(r);
    return v;
}

DividedPoly ExtendedVect::coefficient(const Vec& v) const {
    return DividedPoly::from_coeffs(f_, n_, Vec(v.begin() + 1, v.end()));
}

Vec ExtendedVect::two_map(const Vec& v) const {
    if (v.size() != dim()) throw UsageError("vector of the wrong dimension");
    if (v[0]) throw UsageError("2-map of an element with a d^2 component is outside v_{n+1}");
    DividedPoly f = coefficient(v);
    return field_vec(f * f.partial(), f_->sqr(f.constant_term()));
}

Subspace ExtendedVect::vect() const {
    std::vector<Vec> b;
    for (std::size_t r = 0; r < N(); ++r) b.push_back(unit_vec(dim(), index_of(r)));
    return Subspace::span(f_, dim(), b);
}

Subspace ExtendedVect::derived_vect() const {
    std::vector<Vec> b;
    for (std::size_t r = 0; r + 1 < N(); ++r) b.push_back(unit_vec(dim(), index_of(r)));
    return Subspace::span(f_, dim(), b);
}

Matrix ExtendedVect::grading_operator(const GeneratingFunction& gu) const {
    if (gu.n != n_ || gu.f != f_) throw UsageError("generating function does not match the algebra");
    const Field& f = *f_;
    const Elem a = gu.a();
    DividedPoly u = gu.poly();
    DividedPoly x = DividedPoly::monomial(f_, n_, 1);
    DividedPoly s(f_, n_);
    for (int i = 1; i < n_; ++i) s = s + u.partial(std::size_t{1} << i).scaled(f.pow(a, (std::uint64_t{1} << i) - 2));
    DividedPoly v = u + x + x * u * s;
    Vec vd = field_vec(v);
    return operator_matrix(f_, dim(), [&](std::size_t j) {
        Vec img = alg_.bracket(vd, unit_vec(dim(), j));
        if (j > 0) {
            DividedPoly fj = DividedPoly::monomial(f_, n_, j - 1);
            DividedPoly extra(f_, n_);
            for (int i = 1; i < n_; ++i)
                extra = extra + fj.partial(std::size_t{1} << i).scaled(f.pow(a, std::uint64_t{1} << i));
            img = add(img, field_vec(extra));
        }
        return img;
    });
}

LieAlgebra make_vect(FieldPtr f, int n, bool derived) {
    ExtendedVect v(std::move(f), n);
    return restrict_to(v.algebra(), derived ? v.derived_vect() : v.vect());
}

Matrix vect_grading(const GeneratingFunction& u) {
    ExtendedVect v(u.f, u.n);
    Matrix full = v.grading_operator(u);
    const std::size_t m = v.N() - 1;
    Matrix out(u.f, m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < v.dim(); ++i) {
            Elem e = full.at(i, ExtendedVect::index_of(j));
            if (i == 0 || i == v.dim() - 1) {
                if (e) throw InternalError("D_u leaves vect^(1)(1;n)");
                continue;
            }
            out.at(i - 1, j) = e;
        }
    return out;
}

// ---------------------------------------------------------------- e/o basis

EOBasis e_o_basis(FieldPtr f, int n) {
    if (n < 2) throw UsageError("e/o basis needs n >= 2");
    ExtendedVect v(f, n);
    DividedPoly one_x = DividedPoly::constant(f, n, 1) + DividedPoly::monomial(f, n, 1);
    DividedPoly w = DividedPoly::monomial(f, n, 1) + DividedPoly::monomial(f, n, 2);
    const std::size_t H = std::size_t{1} << (n - 1);
    EOBasis b;
    b.evens.push_back(v.field_vec(one_x, 1));
    for (std::size_t j = 0; j < H; ++j) {  // k = j - 1
        DividedPoly wk = w.divided_power(j);
        b.evens.push_back(v.field_vec(one_x * wk));
        b.odds.push_back(v.field_vec(wk));
    }
    return b;
}

// ------------------------------------------------------------- deformation

namespace {

struct DeformData {
    DividedPoly u, du, d2u, d3u, one;
};

DeformData deform_data(const ExtendedVect& v, const GeneratingFunction& gu) {
    if (gu.a() != 0) throw UsageError("deformation maps need u(0) = 0");
    if (gu.n != v.height() || gu.f != v.field()) throw UsageError("generating function does not match the algebra");
    DividedPoly u = gu.poly();
    return {u, u.partial(1), u.partial(2), u.partial(3), DividedPoly::constant(gu.f, gu.n, 1)};
}

}  // namespace

DeformMaps deform_maps(const ExtendedVect& v, const GeneratingFunction& gu) {
    DeformData d = deform_data(v, gu);
    const FieldPtr& f = v.field();
    const int n = v.height();
    DividedPoly scale = d.one + d.du + d.u * d.d2u;
    DividedPoly tcorr = d.u * (d.one + d.du);
    DividedPoly acorr = d.u * d.du;
    DividedPoly t_d2 = d.d2u + d.u * d.d3u + d.u * d.d2u * d.d2u + d.u * d.du * d.d2u * d.d2u;
    DeformMaps m;
    m.T = operator_matrix(f, v.dim(), [&](std::size_t j) {
        if (j == 0) return v.field_vec(t_d2, 1);
        DividedPoly fj = DividedPoly::monomial(f, n, j - 1);
        return v.field_vec((fj + tcorr * fj.partial()) * scale);
    });
    m.A = operator_matrix(f, v.dim(), [&](std::size_t j) {
        if (j == 0) return unit_vec(v.dim(), 0);
        DividedPoly fj = DividedPoly::monomial(f, n, j - 1);
        return v.field_vec(fj + acorr * fj.partial());
    });
    return m;
}

std::vector<std::size_t> zero_parity_order(const ExtendedVect& v) {
    std::vector<std::size_t> ev, od;
    for (std::size_t i = 0; i < v.dim(); ++i) (v.zero_parity_odd(i) ? od : ev).push_back(i);
    ev.insert(ev.end(), od.begin(), od.end());
    return ev;
}

LieSuperalgebra deformed_bracket(const ExtendedVect& v, const GeneratingFunction& gu) {
    DeformData d = deform_data(v, gu);
    DeformMaps m = deform_maps(v, gu);
    const Field& f = *v.field();
    DividedPoly factor = d.one + d.u * d.d2u;
    auto br = [&](const Vec& x, const Vec& y) {
        Vec xf = x, yf = y;
        xf[0] = 0;
        yf[0] = 0;
        Vec out = m.A.apply(v.bracket(xf, yf));
        DividedPoly fx = v.coefficient(xf), fy = v.coefficient(yf);
        DividedPoly mixed = fy.partial(2).scaled(x[0]) + fx.partial(2).scaled(y[0]);
        (void)f;
        return add(out, v.field_vec(factor * mixed));
    };
    std::vector<Vec> ev, od, sq;
    for (std::size_t i : zero_parity_order(v)) {
        Vec e = unit_vec(v.dim(), i);
        if (v.zero_parity_odd(i)) {
            od.push_back(e);
            sq.push_back(m.A.apply(v.two_map(e)));
        } else {
            ev.push_back(e);
        }
    }
    LieSuperalgebra s = detail::build_super(v.field(), v.dim(), ev, od, br, sq);
    for (std::size_t i : zero_parity_order(v)) s.labels.push_back(v.algebra().label(i));
    return s;
}

// ------------------------------------------------------------------ rescale

GeneratingFunction sigma_rescale(const GeneratingFunction& u, Elem eps) {
    if (eps == 0) throw UsageError("rescaling needs eps != 0");
    u.f->check(eps);
    GeneratingFunction r = u;
    for (int k = 1; k < u.n; ++k) r.c[k] = u.f->mul(u.f->pow(eps, (std::uint64_t{1} << k) - 1), u.c[k]);
    return r;
}

RescaleOrbits rescale_orbits(FieldPtr f, int n) {
    check_height(n);
    const std::uint64_t q = f->size();
    const int m = n - 1;
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        total *= q;
        if (total > (std::uint64_t{1} << 20)) throw ResourceError("rescale orbit enumeration exceeds 2^20 tuples");
    }
    auto decode = [&](std::uint64_t idx) {
        Vec t(m);
        for (int i = m - 1; i >= 0; --i) {
            t[i] = static_cast<Elem>(idx % q);
            idx /= q;
        }
        return t;
    };
    auto encode = [&](const Vec& t) {
        std::uint64_t idx = 0;
        for (int i = 0; i < m; ++i) idx = idx * q + t[i];
        return idx;
    };
    RescaleOrbits out;
    std::vector<bool> seen(total, false);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (seen[idx]) continue;
        Vec t = decode(idx);
        std::set<std::uint64_t> orbit;
        for (Elem eps = 1; eps < q; ++eps) {
            Vec s(m);
            for (int k = 1; k <= m; ++k) s[k - 1] = f->mul(f->pow(eps, (std::uint64_t{1} << k) - 1), t[k - 1]);
            orbit.insert(encode(s));
        }
        std::vector<Vec> o;
        for (auto j : orbit) {
            seen[j] = true;
            o.push_back(decode(j));
        }
        out.orbits.push_back(std::move(o));
    }
    std::uint64_t fixed = 0;
    for (Elem eps = 1; eps < q; ++eps) {
        std::uint64_t cnt = 1;
        for (int k = 1; k <= m; ++k) cnt *= f->pow(eps, (std::uint64_t{1} << k) - 1) == 1 ? q : 1;
        fixed += cnt;
    }
    out.burnside = static_cast<std::size_t>(fixed / (q - 1));
    return out;
}

// -------------------------------------------------------------- char poly

Matrix d2_operator(const GeneratingFunction& gu) {
    if (gu.a() != 0) throw UsageError("the d^2 action is defined for u(0) = 0");
    const FieldPtr& f = gu.f;
    const int n = gu.n;
    const std::size_t N = std::size_t{1} << n, H = N / 2;
    DividedPoly u = gu.poly();
    DividedPoly factor = DividedPoly::constant(f, n, 1) + u * u.partial(2);
    return operator_matrix(f, H, [&](std::size_t j) {
        DividedPoly img = factor * DividedPoly::monomial(f, n, 2 * j + 1).partial(2);
        Vec col(H, 0);
        for (std::size_t r = 0; r < N; ++r) {
            if (!img.coeff(r)) continue;
            if (r % 2 == 0) throw InternalError("d^2 action leaves the 0-even part");
            col[r / 2] = img.coeff(r);
        }
        return col;
    });
}

Polynomial d2_charpoly(const GeneratingFunction& u, bool verify) { return char_poly(d2_operator(u), verify); }

Polynomial conjectured_d2_charpoly(const GeneratingFunction& u) {
    const FieldPtr& f = u.f;
    const std::size_t H = std::size_t{1} << (u.n - 1);
    Vec c(H + 1, 0);
    c[H] = 1;
    for (int k = 0; k <= u.n - 2; ++k)
        c[std::size_t{1} << k] ^= f->pow(u.c[u.n - 1 - k], std::uint64_t{1} << (k + 1));
    return Polynomial(f, c);
}

// ------------------------------------------------------------------- sieve

std::string SievePattern::grid() const {
    std::string s;
    for (const auto& row : support) {
        for (bool b : row) s += b ? '*' : '_';
        s += '\n';
    }
    return s;
}

SievePattern sierpinski_pattern(int n) {
    if (n < 2) throw UsageError("sierpinski pattern needs n >= 2");
    LieAlgebra g = make_vect(Field::gf2(), n, true);
    std::vector<Matrix> ders = derivation_space(g);
    SievePattern p;
    p.n = n;
    p.size = g.dim();
    p.derivation_dim = ders.size();
    p.expected_params = p.size + static_cast<std::size_t>(n);
    p.support.assign(p.size, std::vector<bool>(p.size, false));
    p.lower_relations = true;
    p.upper_relations = true;
    const std::size_t m = p.size;
    for (const auto& d : ders)
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = 1; j <= m; ++j) {
                Elem e = d.at(i - 1, j - 1);
                if (e) p.support[i - 1][j - 1] = true;
                if (i >= j) {
                    Elem want = binom2(i, j - 1) ? d.at(i - j, 0) : 0;
                    if (e != want) p.lower_relations = false;
                } else if (i == 1) {
                    if (e && !std::has_single_bit(j - 1)) p.upper_relations = false;
                } else if (e != d.at(i - 2, j - 2)) {
                    p.upper_relations = false;
                }
            }
    return p;
}

// ------------------------------------------------------------------ O(m;1)

std::string BKGrading::label(std::uint32_t mask) const {
    std::string out;
    for (int i = 0; i < m; ++i) {
        if (!(mask >> i & 1)) continue;
        std::string xi = "x" + std::to_string(i + 1);
        out += i < s ? "(1+" + xi + ")" : xi;
    }
    return out.empty() ? "1" : out;
}

BKGrading bk_grading(int m, int s, const std::vector<int>& degrees) {
    if (m < 1 || m > 8) throw UsageError("m must be in 1..8");
    if (s < 0 || s > m) throw UsageError("s must satisfy 0 <= s <= m");
    if (degrees.size() != static_cast<std::size_t>(m)) throw UsageError("one degree per generator is required");
    BKGrading g;
    g.m = m;
    g.s = s;
    g.degrees = degrees;
    for (std::uint32_t J = 0; J < (1u << m); ++J) {
        int deg = 0;
        for (int i = 0; i < m; ++i)
            if (J >> i & 1) deg ^= degrees[i] & 1;
        (deg ? g.odd : g.even).push_back(J);
    }
    return g;
}

LieAlgebra make_vect_m_one(FieldPtr f, int m) {
    if (m < 1 || m > 6) throw UsageError("m must be in 1..6");
    const std::size_t M = std::size_t{1} << m, d = M * static_cast<std::size_t>(m);
    auto idx = [&](std::size_t k, std::size_t J) { return k * M + J; };
    // x^A * d_i(x^B) as a mask, or nullopt
    auto term = [&](std::size_t A, std::size_t i, std::size_t B) -> std::int64_t {
        if (!(B >> i & 1)) return -1;
        std::size_t C = B & ~(std::size_t{1} << i);
        if (A & C) return -1;
        return static_cast<std::int64_t>(A | C);
    };
    StructureConstants sc(f, d);
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
        for (std::size_t A = 0; A < M; ++A)
            for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j)
                for (std::size_t B = 0; B < M; ++B) {
                    std::size_t p = idx(i, A), q = idx(j, B);
                    if (q <= p) continue;
                    SparseVec v;
                    if (auto t = term(A, i, B); t >= 0) add_term(v, idx(j, static_cast<std::size_t>(t)), 1);
                    if (auto t = term(B, j, A); t >= 0) add_term(v, idx(i, static_cast<std::size_t>(t)), 1);
                    sc.set_pair(p, q, v);
                }
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k)
        for (std::size_t J = 0; J < M; ++J) {
            std::string s;
            for (int i = 0; i < m; ++i)
                if (J >> i & 1) s += "x" + std::to_string(i + 1);
            labels.push_back((s.empty() ? "" : s + " ") + "d" + std::to_string(k + 1));
        }
    return LieAlgebra(std::move(sc), labels);
}

Matrix bk_vect_grading(FieldPtr f, int m, int s, const std::vector<int>& degrees) {
    bk_grading(m, s, degrees);
    LieAlgebra g = make_vect_m_one(f, m);
    const std::size_t M = std::size_t{1} << m;
    Vec t(g.dim(), 0);
    for (int i = 0; i < m; ++i) {
        if (!(degrees[i] & 1)) continue;
        t[i * M + (std::size_t{1} << i)] ^= 1;  // x_i d_i
        if (i < s) t[i * M] ^= 1;                // d_i
    }
    Matrix U = g.ad(t);
    if (U * U != U) throw InternalError("induced grading operator is not idempotent");
    return U;
}

}  // namespace lie2
