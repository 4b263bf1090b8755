#include "lie2/experiments.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "lie2/error.hpp"

namespace lie2 {

namespace {

// L_1, L_2, ... up to the first stable term.
std::vector<std::size_t> table_series(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k < dims.size(); ++k) {
        if (k >= 2 && dims[k] == dims[k - 1]) break;
        out.push_back(dims[k]);
    }
    return out;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string tuple_str(const Vec& c) {
    std::string s = "(";
    for (Elem e : c) s += std::to_string(e);
    return s + ")";
}

std::uint64_t checked_power(std::uint64_t q, int m, std::uint64_t limit, const char* what) {
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        total *= q;
        if (total > limit) throw ResourceError(std::string(what) + " exceeds " + std::to_string(limit) + " cases");
    }
    return total;
}

Vec decode(std::uint64_t idx, std::uint64_t q, std::size_t m) {
    Vec t(m);
    for (std::size_t i = m; i-- > 0;) {
        t[i] = static_cast<Elem>(idx % q);
        idx /= q;
    }
    return t;
}

std::uint64_t encode(const Vec& t, std::uint64_t q) {
    std::uint64_t idx = 0;
    for (Elem e : t) idx = idx * q + e;
    return idx;
}

GeneratingFunction inner_u(const FieldPtr& f, int n, const Vec& tail) {
    Vec c{0};
    c.insert(c.end(), tail.begin(), tail.end());
    return GeneratingFunction::make(f, n, c);
}

struct EvenInvariants {
    LieFingerprint fp;
    std::string tag;
    std::vector<std::size_t> lower, derived;
};

EvenInvariants even_invariants(const GeneratingFunction& u, const LieFingerprint& v_n) {
    LieAlgebra even = vect_superization(u).s.even_part();
    EvenInvariants e;
    e.fp = fingerprint(even);
    e.lower = table_series(e.fp.lower_central);
    e.derived = table_series(e.fp.derived);
    const std::size_t derived_dim = e.fp.derived.size() > 1 ? e.fp.derived[1] : e.fp.dim;
    if (e.fp.dim == 3 && derived_dim == 1 && e.fp.center_dim == 1 && e.fp.lower_central.size() > 2 &&
        e.fp.lower_central[2] == 0) {
        e.tag = "Heisenberg";
    } else if (e.fp.solvable) {
        e.tag = "solv";
    } else if (e.fp == v_n) {
        e.tag = u.n == 3 ? "o(3)/c=v_3" : "v_" + std::to_string(u.n);
    } else {
        e.tag = "?";
    }
    return e;
}

std::vector<Elem> field_elems(const FieldPtr& f) {
    std::vector<Elem> v(f->size());
    std::iota(v.begin(), v.end(), Elem{0});
    return v;
}

}  // namespace

std::string TableRow::str() const {
    std::string p;
    for (std::size_t i = 0; i < params.size(); ++i) p += (i ? ", " : "") + params[i];
    return tag + " | " + join(lower) + " | " + join(derived) + " | " + p;
}

std::string VectTable::str() const {
    std::string s;
    for (const auto& r : rows) s += r.str() + "\n";
    return s;
}

VectTable vect_table(int n) {
    if (n < 2 || n > 6) throw UsageError("tables cover 2 <= n <= 6");
    FieldPtr f = Field::gf2();
    const LieFingerprint v_n = fingerprint(ExtendedVect(f, n - 1).algebra());
    std::map<std::tuple<std::string, std::vector<std::size_t>, std::vector<std::size_t>>, std::vector<Vec>> groups;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
        Vec c = decode(idx, 2, static_cast<std::size_t>(n));
        EvenInvariants e = even_invariants(GeneratingFunction::make(f, n, c), v_n);
        groups[{e.tag, e.lower, e.derived}].push_back(c);
    }
    VectTable t;
    t.n = n;
    const std::size_t family = std::size_t{1} << (n - 1);
    std::string family_name = "(1";
    for (int i = 1; i < n; ++i) family_name += static_cast<char>('a' + i - 1);
    family_name += ")";
    for (auto& [key, tuples] : groups) {
        TableRow r;
        std::tie(r.tag, r.lower, r.derived) = key;
        std::sort(tuples.begin(), tuples.end());
        bool outer_family = tuples.size() == family &&
                            std::all_of(tuples.begin(), tuples.end(), [](const Vec& c) { return c[0] == 1; });
        if (outer_family) {
            r.params.push_back(family_name);
        } else {
            for (const Vec& c : tuples) r.params.push_back(tuple_str(c));
        }
        t.rows.push_back(std::move(r));
    }

    // Families over GF(4): the outer family for every n, and for n = 3 the rows of (010) and (001).
    FieldPtr f4 = Field::gf2k(2);
    const LieFingerprint v4 = fingerprint(ExtendedVect(f4, n - 1).algebra());
    auto row_of = [&](const std::string& p) -> TableRow* {
        for (auto& r : t.rows)
            if (std::find(r.params.begin(), r.params.end(), p) != r.params.end()) return &r;
        return nullptr;
    };
    auto lands = [&](const TableRow* r, const Vec& c) {
        EvenInvariants e = even_invariants(GeneratingFunction::make(f4, n, c), v4);
        return r && e.tag == r->tag && e.lower == r->lower && e.derived == r->derived;
    };
    if (TableRow* r1 = row_of(family_name)) {
        bool outer = true;
        const std::uint64_t total = std::uint64_t{1} << (2 * (n - 1));
        for (std::uint64_t idx = 0; idx < total && outer; ++idx) {
            Vec c = decode(idx, 4, static_cast<std::size_t>(n - 1));
            c.insert(c.begin(), 1);
            outer = lands(r1, c);
        }
        if (!outer) r1->params.push_back("[GF(4) members differ]");
    }
    if (n == 3) {
        bool a0 = true, ab = true;
        TableRow* r010 = row_of("(010)");
        TableRow* r001 = row_of("(001)");
        for (Elem a : field_elems(f4)) {
            for (Elem b : field_elems(f4)) {
                if (b == 0 && a != 0) a0 = a0 && lands(r010, Vec{0, a, 0});
                if (b != 0) ab = ab && lands(r001, Vec{0, a, b});
            }
        }
        if (a0 && r010) r010->params.push_back("(0a0) a!=0");
        if (ab && r001) r001->params.push_back("(0ab) b!=0");
    }

    std::sort(t.rows.begin(), t.rows.end(), [](const TableRow& a, const TableRow& b) {
        bool sa = a.tag == "solv", sb = b.tag == "solv";
        if (sa != sb) return !sa;
        if (a.lower.size() != b.lower.size()) return a.lower.size() > b.lower.size();
        return a.params < b.params;
    });
    return t;
}

SdimLawReport superdimension_law(FieldPtr f, int n, std::size_t samples, std::uint64_t seed) {
    SdimLawReport r;
    r.n = n;
    r.field = f->name();
    const std::size_t H = std::size_t{1} << (n - 1);
    auto test = [&](const Vec& c) {
        GeneratingFunction u = GeneratingFunction::make(f, n, c);
        LieSuperalgebra s = vect_superization(u).s;
        ++r.tested;
        LieFingerprint fp = fingerprint(s.even_part());
        const std::size_t d1 = fp.derived.size() > 1 ? fp.derived[1] : fp.dim;
        if (s.dim_even() != H + 1 || s.dim_odd() != H || d1 != H - 1) {
            ++r.failures;
            if (r.mismatches.size() < 16)
                r.mismatches.push_back(u.str() + ": sdim (" + std::to_string(s.dim_even()) + "|" +
                                       std::to_string(s.dim_odd()) + "), dim [S_0,S_0] = " + std::to_string(d1));
        }
    };
    const std::uint64_t q = f->size();
    if (samples == 0) {
        const std::uint64_t total = checked_power(q, n, std::uint64_t{1} << 16, "superdimension sweep");
        for (std::uint64_t idx = 0; idx < total; ++idx) test(decode(idx, q, static_cast<std::size_t>(n)));
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(q - 1));
        for (std::size_t i = 0; i < samples; ++i) {
            Vec c(static_cast<std::size_t>(n));
            for (auto& e : c) e = pick(rng);
            test(c);
        }
    }
    return r;
}

CharpolyReport verify_charpoly(FieldPtr f, int n, std::size_t samples, std::uint64_t seed) {
    if (n < 2 || n > kMaxHeight) throw UsageError("charpoly check needs 2 <= n <= " + std::to_string(kMaxHeight));
    CharpolyReport r;
    r.n = n;
    r.field = f->name();
    r.exhaustive = samples == 0;
    r.seed = seed;
    const std::uint64_t q = f->size();
    const std::size_t m = static_cast<std::size_t>(n - 1);
    auto test = [&](const Vec& tail) {
        GeneratingFunction u = inner_u(f, n, tail);
        Polynomial got = d2_charpoly(u, true), want = conjectured_d2_charpoly(u);
        ++r.tested;
        if (got != want) {
            ++r.failures;
            if (r.mismatches.size() < 16) r.mismatches.push_back(u.str() + ": " + got.str() + " vs " + want.str());
        }
    };
    if (r.exhaustive) {
        const std::uint64_t total = checked_power(q, static_cast<int>(m), std::uint64_t{1} << 20, "charpoly sweep");
        for (std::uint64_t idx = 0; idx < total; ++idx) test(decode(idx, q, m));
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(q - 1));
        for (std::size_t i = 0; i < samples; ++i) {
            Vec tail(m);
            for (auto& e : tail) e = pick(rng);
            test(tail);
        }
    }
    return r;
}

std::vector<Matrix> idempotent_derivations(const LieAlgebra& g, std::size_t limit) {
    const FieldPtr& f = g.field();
    std::vector<Matrix> der = derivation_space(g);
    const std::uint64_t q = f->size();
    const std::uint64_t total = checked_power(q, static_cast<int>(der.size()), limit, "grading enumeration");
    std::vector<Matrix> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec c = decode(idx, q, der.size());
        Matrix U(f, g.dim(), g.dim());
        for (std::size_t i = 0; i < der.size(); ++i)
            if (c[i]) U = U + der[i].scaled(c[i]);
        if (U * U == U) out.push_back(std::move(U));
    }
    return out;
}

GradingEnumeration enumerate_gradings(const LieAlgebra& g, std::size_t limit) {
    GradingEnumeration e;
    e.derivation_dim = derivation_space(g).size();
    std::vector<Matrix> idem = idempotent_derivations(g, limit);
    e.combinations = static_cast<std::size_t>(
        checked_power(g.field()->size(), static_cast<int>(e.derivation_dim), limit, "grading enumeration"));
    for (Matrix& U : idem) {
        GradedPair gp{g, GradingOperator::make(g, U)};
        LieSuperalgebra s = method2_superize(one_step_closure(gp));
        SuperFingerprint fp = fingerprint(s);
        auto it = std::find_if(e.classes.begin(), e.classes.end(), [&](const GradingClass& c) { return c.fp == fp; });
        if (it == e.classes.end()) {
            GradingClass c;
            c.fp = fp;
            c.even_part = fp.even.str();
            e.classes.push_back(std::move(c));
            it = e.classes.end() - 1;
        }
        it->members.push_back(std::move(U));
    }
    return e;
}

DeformationCheck check_deformation(const GeneratingFunction& gu) {
    DeformationCheck c;
    c.u = gu.str();
    ExtendedVect v(gu.f, gu.n);
    const FieldPtr& f = v.field();
    const std::size_t d = v.dim();
    DeformMaps m = deform_maps(v, gu);
    Matrix U = v.grading_operator(gu);
    c.invertible = inverse(m.T).has_value();

    c.parity = true;
    for (std::size_t i = 0; i < d; ++i) {
        Vec t = m.T.col(i);
        Vec ut = U.apply(t);
        c.parity = c.parity && (v.zero_parity_odd(i) ? ut == t : is_zero(ut));
    }

    DividedPoly u = gu.poly();
    DividedPoly factor = DividedPoly::constant(f, gu.n, 1) + u * u.partial(2);
    c.bracket = c.square = c.d2 = true;
    const Vec td2 = m.T.col(0);
    for (std::size_t i = 1; i < d; ++i) {
        const Vec x = unit_vec(d, i), tx = m.T.col(i);
        for (std::size_t j = i + 1; j < d; ++j)
            c.bracket = c.bracket && v.bracket(tx, m.T.col(j)) == m.T.apply(m.A.apply(v.bracket(x, unit_vec(d, j))));
        if (v.zero_parity_odd(i)) c.square = c.square && v.two_map(tx) == m.T.apply(m.A.apply(v.two_map(x)));
        DividedPoly inner = v.coefficient(v.bracket(unit_vec(d, 0), x));
        c.d2 = c.d2 && v.bracket(td2, tx) == m.T.apply(v.field_vec(factor * inner));
    }

    LieSuperalgebra deformed = deformed_bracket(v, gu);
    c.jacobi = validate_super(deformed).ok;

    std::vector<Vec> ev, od, sq;
    for (std::size_t i : zero_parity_order(v)) {
        Vec t = m.T.col(i);
        if (v.zero_parity_odd(i)) {
            sq.push_back(v.two_map(t));
            od.push_back(std::move(t));
        } else {
            ev.push_back(std::move(t));
        }
    }
    bool iso = false;
    try {
        LieSuperalgebra image = superalgebra_in_basis(v.algebra(), ev, od, sq);
        AmbientSuperization target = vect_superization(gu);
        iso = image == deformed && Subspace::span(f, d, ev) == Subspace::span(f, d, target.even) &&
              Subspace::span(f, d, od) == Subspace::span(f, d, target.odd);
    } catch (const UsageError&) {
        iso = false;
    }
    c.isomorphism = iso && c.invertible;
    return c;
}

bool even_part_solvable(const GeneratingFunction& u) {
    LieAlgebra even = vect_superization(u).s.even_part();
    return is_solvable(even, Subspace::whole(even.field(), even.dim()));
}

RescaleCheck rescale_check(FieldPtr f, int n, std::uint64_t seed) {
    RescaleCheck r;
    r.field = f->name();
    r.n = n;
    r.seed = seed;
    const std::uint64_t q = f->size();
    const std::size_t m = static_cast<std::size_t>(n - 1);
    const std::uint64_t total = checked_power(q, static_cast<int>(m), std::uint64_t{1} << 16, "rescale check");
    r.tuples = static_cast<std::size_t>(total);

    std::vector<std::uint64_t> parent(total);
    std::iota(parent.begin(), parent.end(), std::uint64_t{0});
    auto find = [&](std::uint64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::uint64_t> order(total);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    std::vector<Elem> eps;
    for (Elem e = 1; e < q; ++e) eps.push_back(e);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::shuffle(eps.begin(), eps.end(), rng);
    for (std::uint64_t idx : order) {
        Vec t = decode(idx, q, m);
        for (Elem e : eps) {
            GeneratingFunction s = sigma_rescale(inner_u(f, n, t), e);
            Vec tail(s.c.begin() + 1, s.c.end());
            parent[find(encode(tail, q))] = find(idx);
        }
    }
    std::map<std::uint64_t, std::vector<std::uint64_t>> orbits;
    for (std::uint64_t idx = 0; idx < total; ++idx) orbits[find(idx)].push_back(idx);
    r.orbits = orbits.size();

    RescaleOrbits ref = rescale_orbits(f, n);
    r.burnside = ref.burnside;
    r.reference_orbits = ref.orbits.size();

    // Partition: every orbit is one sigma-orbit of its first member.
    r.partition = true;
    std::size_t covered = 0;
    for (const auto& [root, members] : orbits) {
        covered += members.size();
        std::set<std::uint64_t> image;
        Vec t = decode(members.front(), q, m);
        for (Elem e = 1; e < q; ++e) {
            GeneratingFunction s = sigma_rescale(inner_u(f, n, t), e);
            image.insert(encode(Vec(s.c.begin() + 1, s.c.end()), q));
        }
        r.partition = r.partition && image == std::set<std::uint64_t>(members.begin(), members.end());
    }
    r.partition = r.partition && covered == total;

    r.fingerprints_constant = true;
    std::set<std::string> classes;
    for (const auto& [root, members] : orbits) {
        std::string first;
        for (std::uint64_t idx : members) {
            std::string fp = fingerprint(vect_superization(inner_u(f, n, decode(idx, q, m))).s).str();
            if (first.empty()) first = fp;
            r.fingerprints_constant = r.fingerprints_constant && fp == first;
            classes.insert(fp);
        }
    }
    r.fingerprint_classes = classes.size();
    return r;
}

}  // namespace lie2
