// One PASS/FAIL line per acceptance criterion. `acceptance --only k` runs criterion k alone.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lie2/classical.hpp"
#include "lie2/divpow.hpp"
#include "lie2/error.hpp"
#include "lie2/experiments.hpp"
#include "lie2/known.hpp"

using namespace lie2;

namespace {

const std::string kGolden = std::string(LIE2_SOURCE_DIR) + "/tests/golden";

struct Result {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        pass = false;
        notes.push_back("FAIL " + why);
    }
    void note(const std::string& s) { notes.push_back(s); }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

std::string read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

// All tuples c_0..c_{n-1} over f, optionally with c_0 = 0.
std::vector<GeneratingFunction> all_u(const FieldPtr& f, int n, bool inner) {
    std::vector<GeneratingFunction> out;
    const std::size_t q = f->size();
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    for (std::size_t code = 0; code < total; ++code) {
        Vec c(n);
        std::size_t r = code;
        for (int i = n - 1; i >= 0; --i) c[i] = static_cast<Elem>(r % q), r /= q;
        if (inner && c[0] != 0) continue;
        out.push_back(GeneratingFunction::make(f, n, c));
    }
    return out;
}

// 1. Every constructed algebra passes validate_lie / validate_super.
Result c1() {
    Result r;
    FieldPtr f2 = Field::gf2();
    std::size_t lie = 0, sup = 0;
    auto lie_ok = [&](const LieAlgebra& g, const std::string& what) {
        ++lie;
        ValidationReport v = validate_lie(g);
        r.expect(v.ok, what + ": " + v.summary());
    };
    auto super_ok = [&](const LieSuperalgebra& s, const std::string& what) {
        ++sup;
        ValidationReport v = validate_super(s);
        r.expect(v.ok, what + ": " + v.summary());
    };
    for (Series s : {Series::gl, Series::sl, Series::psl, Series::o, Series::o1, Series::o2, Series::o2_mod_c,
                     Series::tilde_o}) {
        for (std::size_t N = 2; N <= 8; ++N) {
            try {
                ClassicalAlgebra c = make_classical(f2, s, N);
                lie_ok(c.algebra, c.name);
            } catch (const UsageError&) {
                // not defined for this N (e.g. split forms in odd size)
            } catch (const DomainError&) {
            }
        }
    }
    for (int n = 1; n <= 6; ++n) {
        lie_ok(make_vect(f2, n, false), "vect(1;" + std::to_string(n) + ")");
        lie_ok(make_vect(f2, n, true), "vect^(1)(1;" + std::to_string(n) + ")");
        lie_ok(ExtendedVect(f2, n).algebra(), "v_" + std::to_string(n + 1));
    }
    for (int n = 2; n <= 6; ++n) {
        for (const auto& u : all_u(f2, n, false)) super_ok(vect_superization(u).s, "S(vect^(1)(1;" + std::to_string(n) + "), " + u.str() + ")");
        super_ok(kl(f2, n), "kl n=" + std::to_string(n));
        super_ok(q_vect(f2, n), "q_vect n=" + std::to_string(n));
    }
    FieldPtr f4 = Field::gf2k(2);
    for (int n = 2; n <= 4; ++n)
        for (const auto& u : all_u(f4, n, false)) super_ok(vect_superization(u).s, "S over gf4 " + u.str());
    for (Series s : {Series::sl, Series::psl, Series::o1, Series::o2_mod_c}) {
        for (std::size_t N = 3; N <= 8; ++N) {
            ProjectionReps reps;
            try {
                reps = projection_reps(f2, s, N);
            } catch (const UsageError&) {
                continue;
            }
            ClassicalAlgebra g = reps_algebra(f2, s, N);
            for (const auto& rep : reps.reps) super_ok(superize_rep(rep, g).s, reps.algebra + " " + rep.label.str());
        }
    }
    GradingEnumeration e = enumerate_gradings(make_vect(f2, 2, true));
    for (const auto& cls : e.classes)
        for (const auto& U : cls.members) {
            LieAlgebra g = make_vect(f2, 2, true);
            super_ok(method2_superize(one_step_closure({g, GradingOperator::make(g, U)})), "S(vect^(1)(1;2), U)");
        }
    r.note(std::to_string(lie) + " Lie algebras, " + std::to_string(sup) + " superalgebras validated");
    return r;
}

// 2. The dim L_k tables for n = 2..5 against the transcribed goldens.
Result c2() {
    Result r;
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::string> got = lines(vect_table(n).str());
        std::vector<std::string> want = lines(read(kGolden + "/vect_table_n" + std::to_string(n) + ".txt"));
        std::set<std::string> g(got.begin(), got.end()), w(want.begin(), want.end());
        for (const auto& l : want)
            if (!g.count(l)) r.fail("n=" + std::to_string(n) + " expected row: " + l);
        for (const auto& l : got)
            if (!w.count(l)) r.fail("n=" + std::to_string(n) + " computed row: " + l);
        if (got.size() == want.size() && g == w && got != want) r.fail("n=" + std::to_string(n) + " row order differs");
    }
    if (r.pass) r.note("all rows match for n = 2..5");
    return r;
}

// 3. sdim = (2^(n-1)+1 | 2^(n-1)) for every u, n = 2..6.
Result c3() {
    Result r;
    for (int n = 2; n <= 6; ++n) {
        SdimLawReport s = superdimension_law(Field::gf2(), n);
        r.expect(s.ok(), "gf2 n=" + std::to_string(n) + ": " + std::to_string(s.failures) + " failures");
    }
    for (int n = 2; n <= 4; ++n) {
        SdimLawReport s = superdimension_law(Field::gf2k(2), n);
        r.expect(s.ok(), "gf4 n=" + std::to_string(n) + ": " + std::to_string(s.failures) + " failures");
    }
    SdimLawReport s = superdimension_law(Field::gf2k(3), 6, 200, 7);
    r.expect(s.ok(), "gf8 n=6 sampled");
    if (r.pass) r.note("gf2 n=2..6 exhaustive, gf4 n=2..4 exhaustive, gf8 n=6 200 samples");
    return r;
}

// 4. vect^(1)(1;2): the U(c_0,c_1) family, three classes over GF(2), the two (1|2) tables.
Result c4() {
    Result r;
    for (int k : {1, 2, 3}) {
        FieldPtr f = Field::gf2k(k);
        LieAlgebra g = make_vect(f, 2, true);
        std::set<Vec> family;
        family.insert(Matrix(f, 3, 3).flatten());
        for (Elem c0 = 0; c0 < f->size(); ++c0)
            for (Elem c1 = 0; c1 < f->size(); ++c1) {
                Matrix U = vect_grading(GeneratingFunction::make(f, 2, {c0, c1}));
                const Elem d = f->mul(c0, c1) ^ 1;
                Matrix want = Matrix::from_rows(f, {{d, c0, f->sqr(c0)}, {c1, 0, c0}, {f->sqr(c1), c1, d}});
                if (U != want) r.fail(f->name() + " U(" + f->format(c0) + "," + f->format(c1) + ") differs");
                family.insert(U.flatten());
            }
        // The linear solution U_lin: five free parameters in the displayed pattern.
        std::vector<Vec> lin;
        for (auto cells : std::vector<std::vector<std::pair<int, int>>>{
                 {{0, 0}, {2, 2}}, {{0, 1}, {1, 2}}, {{0, 2}}, {{1, 0}, {2, 1}}, {{2, 0}}}) {
            Matrix m(f, 3, 3);
            for (auto [i, j] : cells) m.at(i, j) = 1;
            lin.push_back(m.flatten());
        }
        std::vector<Vec> der;
        for (const auto& d : derivation_space(g)) der.push_back(d.flatten());
        r.expect(Subspace::span(f, 9, der) == Subspace::span(f, 9, lin), f->name() + " der g differs from U_lin");
        std::set<Vec> idem;
        for (const auto& m : idempotent_derivations(g)) idem.insert(m.flatten());
        r.expect(idem == family, f->name() + " idempotent derivations: " + std::to_string(idem.size()) + " vs " +
                                     std::to_string(family.size()) + " in the family");
    }
    FieldPtr f2 = Field::gf2();
    LieAlgebra g = make_vect(f2, 2, true);
    GradingEnumeration e = enumerate_gradings(g);
    r.expect(e.classes.size() == 3, "GF(2) classes: " + std::to_string(e.classes.size()));
    auto kernel = [&](Elem c0, Elem c1) {
        Matrix U = vect_grading(GeneratingFunction::make(f2, 2, {c0, c1}));
        return Subspace::span(f2, 3, rank_nullspace(U).basis);
    };
    r.expect(kernel(0, 0) == Subspace::span(f2, 3, {{0, 1, 0}}), "g_ev(0,0) != K e_0");
    r.expect(kernel(1, 1) == Subspace::span(f2, 3, {{1, 1, 1}}), "g_ev(1,1) != K(e_-1 + e_0 + e_1)");
    for (auto [c0, c1] : {std::pair{0, 0}, std::pair{1, 1}}) {
        SmallCase sc = vect2_small_case(f2, c0, c1);
        r.expect(sc.ok(), sc.name + " mismatch");
        if (sc.ok()) r.note(sc.name + ": " + std::to_string(sc.listed) + " listed relations agree");
    }
    r.note("U family checked over gf2, gf4, gf8; " + std::to_string(e.classes.size()) + " classes over gf2");
    return r;
}

// 5. Char poly of the d^2 action: exhaustive over GF(2) for n <= 5, 1000 samples over GF(64) for n = 6.
Result c5() {
    Result r;
    for (int n = 2; n <= 5; ++n) {
        CharpolyReport c = verify_charpoly(Field::gf2(), n);
        r.expect(c.ok() && c.exhaustive, "gf2 n=" + std::to_string(n) + ": " + std::to_string(c.failures) + " failures");
    }
    CharpolyReport c = verify_charpoly(Field::gf2k(6), 6, 1000, 42);
    r.expect(c.ok() && c.tested >= 1000, "gf64 n=6: " + std::to_string(c.failures) + " failures");
    r.note("gf64 n=6: " + std::to_string(c.tested) + " tuples, seed 42");
    return r;
}

// 6. q_discriminant(kl_{n-1}, X_{-1}) = not_q with the witness relations.
Result c6() {
    Result r;
    FieldPtr f = Field::gf2();
    for (int n = 3; n <= 6; ++n) {
        LieSuperalgebra s = kl(f, n);
        Vec x = unit_vec(s.dim(), kl_even_index(n, -1));
        QDiscriminant q = q_discriminant(s, x);
        const std::size_t bound = (std::size_t{1} << (n - 1)) + 1;
        r.expect(q.verdict == QVerdict::not_q, "n=" + std::to_string(n) + " verdict " + to_string(q.verdict));
        // (ad X_{-1})^(2^(n-1)+1) = 0 on the even part, computed directly.
        Matrix ad = s.even_part().ad(Vec(x.begin(), x.begin() + s.dim_even()));
        Matrix p = Matrix::identity(f, s.dim_even());
        for (std::size_t i = 0; i < bound; ++i) p = p * ad;
        r.expect(p.is_zero(), "n=" + std::to_string(n) + " (ad X_-1)^" + std::to_string(bound) + " != 0");
        Vec y = unit_vec(s.dim(), kl_odd_index(n, -1));
        r.expect(s.bracket(x, y) == y, "n=" + std::to_string(n) + " [X_-1, Y_-1] != Y_-1");
        r.expect(!(fingerprint(s) == fingerprint(q_vect(f, n))), "n=" + std::to_string(n) + " fingerprint equals q_vect");
    }
    if (r.pass) r.note("not_q for n = 3..6");
    return r;
}

// 7. Highest-weight vectors of the kl odd module and the Lucas identities.
Result c7() {
    Result r;
    FieldPtr f = Field::gf2();
    for (int n = 3; n <= 5; ++n) {
        LieSuperalgebra s = kl(f, n);
        const int top = (1 << (n - 1)) - 2;
        std::vector<Vec> raising;
        for (int k = 1; k <= n - 2; ++k) raising.push_back(unit_vec(s.dim(), kl_even_index(n, (1 << k) - 1)));
        WeightVectors w = weight_vectors(s, raising, unit_vec(s.dim(), kl_even_index(n, -1)));
        const std::size_t d0 = s.dim_even();
        Subspace want = Subspace::span(f, s.dim_odd(), {unit_vec(s.dim_odd(), kl_odd_index(n, top - 1) - d0),
                                                        unit_vec(s.dim_odd(), kl_odd_index(n, top) - d0)});
        r.expect(w.highest == want, "n=" + std::to_string(n) + " highest-weight dim " + std::to_string(w.highest.dim()));
        r.expect(w.lowest.dim() == 0, "n=" + std::to_string(n) + " lowest-weight dim " + std::to_string(w.lowest.dim()));
        r.expect(kl_lucas_identities(n), "n=" + std::to_string(n) + " Lucas identities");
    }
    if (r.pass) r.note("highest = span{Y_top-1, Y_top}, lowest = 0 for n = 3..5");
    return r;
}

// 8. Projection rep counts for the classical series.
Result c8() {
    Result r;
    FieldPtr f = Field::gf2();
    struct Case {
        Series s;
        std::size_t N, expected;
    };
    std::vector<Case> cases;
    for (std::size_t n = 2; n <= 4; ++n) {
        cases.push_back({Series::sl, 2 * n + 1, n + 1});
        cases.push_back({Series::sl, 2 * n, n + 1});
        cases.push_back({Series::psl, 2 * n, n + 1});
    }
    for (std::size_t n = 1; n <= 3; ++n) cases.push_back({Series::o1, 2 * n + 1, 2 * n + 1});
    for (std::size_t n = 3; n <= 4; ++n) {
        cases.push_back({Series::o1, 2 * n, 2 * n + 1});
        cases.push_back({Series::o2_mod_c, 2 * n, n / 2 + 2});
    }
    for (const auto& c : cases) {
        ProjectionReps reps = projection_reps(f, c.s, c.N);
        ClassicalAlgebra g = reps_algebra(f, c.s, c.N);
        std::string tag = reps.algebra + ": " + std::to_string(reps.reps.size()) + " of " + std::to_string(c.expected);
        bool ok = reps.reps.size() == c.expected;
        for (const auto& rep : reps.reps) {
            ProjectionCheck pc = verify_projection(rep, g);
            RepSuperization su = superize_rep(rep, g);
            if (!pc.report.ok) ok = false, r.fail(reps.algebra + " " + rep.label.str() + " verify_projection");
            if (!su.sdim_match) ok = false, r.fail(reps.algebra + " " + rep.label.str() + " sdim differs from label");
        }
        if (reps.reps.size() != c.expected) {
            std::string why = tag;
            for (const auto& u : reps.unrealizable) why += "; " + u;
            r.fail(why);
        } else if (ok) {
            r.note(tag);
        }
    }
    return r;
}

// 9. Derivation support patterns of vect^(1)(1;n), n = 2, 3, 4.
Result c9() {
    Result r;
    for (int n = 2; n <= 4; ++n) {
        SievePattern p = sierpinski_pattern(n);
        r.expect(p.grid() == read(kGolden + "/sieve_n" + std::to_string(n) + ".txt"), "n=" + std::to_string(n) + " grid");
        r.expect(p.lower_relations, "n=" + std::to_string(n) + " lower-triangular relations");
        r.expect(p.upper_relations, "n=" + std::to_string(n) + " upper-triangular relations");
        r.expect(p.derivation_dim == p.expected_params, "n=" + std::to_string(n) + " der dim");
    }
    if (r.pass) r.note("grids and relations match for n = 2..4");
    return r;
}

// 10. Deformation identities and solvability of the even part for u(0) = 0.
Result c10() {
    Result r;
    std::size_t deform = 0, solv = 0;
    for (int n = 3; n <= 4; ++n)
        for (const auto& u : all_u(Field::gf2(), n, true)) {
            ++deform;
            DeformationCheck d = check_deformation(u);
            r.expect(d.ok(), "deformation " + u.str());
        }
    for (int k : {1, 2})
        for (int n = 2; n <= 5; ++n)
            for (const auto& u : all_u(Field::gf2k(k), n, true)) {
                ++solv;
                r.expect(even_part_solvable(u), "even part not solvable for " + u.str() + " over " + u.f->name());
            }
    r.note(std::to_string(deform) + " deformation cases, " + std::to_string(solv) + " solvability cases");
    return r;
}

// 11. sigma_rescale orbits over GF(4) and GF(8), n = 3, stable across seeds.
Result c11() {
    Result r;
    for (int k : {2, 3}) {
        std::set<std::size_t> counts;
        for (std::uint64_t seed : {1, 2, 3, 17, 12345}) {
            RescaleCheck c = rescale_check(Field::gf2k(k), 3, seed);
            counts.insert(c.orbits);
            r.expect(c.ok(), c.field + " seed " + std::to_string(seed) + ": " + std::to_string(c.orbits) + " orbits, burnside " +
                                 std::to_string(c.burnside) + ", reference " + std::to_string(c.reference_orbits));
            if (seed == 1)
                r.note(c.field + ": " + std::to_string(c.tuples) + " tuples, " + std::to_string(c.orbits) + " orbits, " +
                       std::to_string(c.fingerprint_classes) + " fingerprint classes");
        }
        r.expect(counts.size() == 1, "orbit count varies with the seed over gf" + std::to_string(1 << k));
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "run a single criterion (1..11)")->check(CLI::Range(0, 11));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"validation suite", c1},
        {"dim L_k tables (n = 2..5)", c2},
        {"superdimension law", c3},
        {"vect^(1)(1;2) gradings", c4},
        {"char poly of the d^2 action", c5},
        {"kl is not q(vect)", c6},
        {"kl highest-weight vectors", c7},
        {"classical projection counts", c8},
        {"Sierpinski patterns", c9},
        {"deformation identities", c10},
        {"rescale orbits", c11},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<std::size_t>(only) != i + 1) continue;
        auto t0 = std::chrono::steady_clock::now();
        Result res;
        try {
            res = criteria[i].second();
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream head;
        head.setf(std::ios::fixed);
        head.precision(1);
        head << (res.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << "  (" << secs << " s)";
        std::cout << head.str() << "\n";
        for (const auto& n : res.notes) std::cout << "        " << n << "\n";
        std::cout.flush();
        if (!res.pass) ++failed;
    }
    return failed ? 1 : 0;
}
