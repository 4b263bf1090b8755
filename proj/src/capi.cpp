#include "lie2/lie2.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lie2/classical.hpp"
#include "lie2/divpow.hpp"
#include "lie2/error.hpp"
#include "lie2/experiments.hpp"
#include "lie2/json_io.hpp"
#include "lie2/known.hpp"

using nlohmann::json;
using namespace lie2;

struct lie2_field {
    FieldPtr f;
};
struct lie2_algebra {
    LieAlgebra g;
};
struct lie2_super {
    LieSuperalgebra s;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
lie2_status guarded(F&& fn) {
    try {
        lie2_status st = fn();
        if (st == LIE2_OK) g_last_error.clear();
        return st;
    } catch (const UsageError& e) {
        g_last_error = e.what();
        return LIE2_ERR_USAGE;
    } catch (const DomainError& e) {
        g_last_error = e.what();
        return LIE2_ERR_DOMAIN;
    } catch (const ResourceError& e) {
        g_last_error = e.what();
        return LIE2_ERR_RESOURCE;
    } catch (const std::exception& e) {
        g_last_error = std::string("internal error: ") + e.what();
        return LIE2_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "internal error";
        return LIE2_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) throw UsageError(std::string(what) + " is null");
}

lie2_status emit(const json& doc, char** out) {
    need(out, "output pointer");
    *out = dup(doc.dump(2));
    if (!doc.value("ok", true)) {
        g_last_error = "check failed";
        return LIE2_ERR_MISMATCH;
    }
    return LIE2_OK;
}

json vec_json(const Vec& v) { return json(v); }

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

std::string matrix_text(const Matrix& m, const Field& f) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + f.format(m.at(i, j));
        s += "]\n";
    }
    return s;
}

json fingerprint_json(const SuperFingerprint& fp) {
    return {{"sdim", {fp.dim_even, fp.dim_odd}},
            {"even", {{"dim", fp.even.dim},
                      {"lower_central", fp.even.lower_central},
                      {"derived", fp.even.derived},
                      {"solvable", fp.even.solvable},
                      {"center_dim", fp.even.center_dim}}},
            {"center", {fp.center_even, fp.center_odd}},
            {"odd_chain", fp.odd_chain},
            {"derived", {fp.derived_even, fp.derived_odd}},
            {"text", fp.str()}};
}

json report_json(const ValidationReport& r) {
    return {{"ok", r.ok}, {"checks", r.checks}, {"failures", r.failures}, {"violations", r.violations}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ClassicalAlgebra classical(const FieldPtr& f, const std::string& series, std::size_t n, int derived, int mod_center) {
    Series s = parse_series(series);
    if (derived < 0 && mod_center < 0) return make_classical(f, s, n);
    Series base = s;
    int d = 0;
    bool mc = false;
    std::optional<BilinearForm> form;
    switch (s) {
        case Series::psl: base = Series::sl, mc = true; break;
        case Series::o1: base = Series::o, d = 1; break;
        case Series::o2: base = Series::o, d = 2, form = BilinearForm::split(f, n); break;
        case Series::o2_mod_c: base = Series::o, d = 2, mc = true, form = BilinearForm::split(f, n); break;
        default: break;
    }
    if (derived >= 0) d = derived;
    if (mod_center >= 0) mc = mod_center != 0;
    return make_classical(f, base, n, form, d, mc);
}

json superalgebra_doc(const LieSuperalgebra& s) {
    ValidationReport v = validate_super(s);
    SuperFingerprint fp = fingerprint(s);
    json doc;
    doc["superalgebra"] = json::parse(super_to_json(s));
    doc["validation"] = report_json(v);
    doc["fingerprint"] = fingerprint_json(fp);
    doc["ok"] = v.ok;
    return doc;
}

std::string super_text(const LieSuperalgebra& s, const json& doc) {
    std::ostringstream o;
    o << "sdim (" << s.dim_even() << "|" << s.dim_odd() << ")\n";
    o << "fingerprint " << doc["fingerprint"]["text"].get<std::string>() << "\n";
    o << "validate_super " << (doc["validation"]["ok"].get<bool>() ? "ok" : "FAILED") << " ("
      << doc["validation"]["checks"].get<std::size_t>() << " checks)\n";
    for (const auto& v : doc["validation"]["violations"]) o << "  " << v.get<std::string>() << "\n";
    return o.str();
}

std::string golden_compare(const std::string& dir, const std::string& file, const std::string& text, bool* ok) {
    std::string want = read_file(dir + "/" + file);
    *ok = want == text;
    return want;
}

}  // namespace

extern "C" {

const char* lie2_last_error(void) { return g_last_error.c_str(); }
void lie2_string_free(char* s) { std::free(s); }
const char* lie2_version(void) { return "1.0.0"; }

lie2_status lie2_field_new(const char* name, lie2_field** out) {
    return guarded([&] {
        need(name, "field name");
        need(out, "output pointer");
        *out = new lie2_field{Field::parse(name)};
        return LIE2_OK;
    });
}
void lie2_field_free(lie2_field* f) { delete f; }

lie2_status lie2_field_mul(const lie2_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    return guarded([&] {
        need(f, "field");
        need(out, "output pointer");
        f->f->check(a);
        f->f->check(b);
        *out = f->f->mul(a, b);
        return LIE2_OK;
    });
}

lie2_status lie2_field_inv(const lie2_field* f, uint32_t a, uint32_t* out) {
    return guarded([&] {
        need(f, "field");
        need(out, "output pointer");
        f->f->check(a);
        *out = f->f->inv(a);
        return LIE2_OK;
    });
}

lie2_status lie2_field_format(const lie2_field* f, uint32_t a, char** out) {
    return guarded([&] {
        need(f, "field");
        need(out, "output pointer");
        f->f->check(a);
        *out = dup(f->f->format(a));
        return LIE2_OK;
    });
}

lie2_status lie2_algebra_from_json(const char* text, lie2_algebra** out) {
    return guarded([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = new lie2_algebra{lie_from_json(text)};
        return LIE2_OK;
    });
}

lie2_status lie2_algebra_classical(const char* field, const char* series, size_t n, int derived, int mod_center,
                                   lie2_algebra** out) {
    return guarded([&] {
        need(field, "field");
        need(series, "series");
        need(out, "output pointer");
        *out = new lie2_algebra{classical(Field::parse(field), series, n, derived, mod_center).algebra};
        return LIE2_OK;
    });
}

lie2_status lie2_algebra_vect(const char* field, int n, int derived, lie2_algebra** out) {
    return guarded([&] {
        need(field, "field");
        need(out, "output pointer");
        if (n < 1 || n > kMaxHeight) throw UsageError("n must be in 1.." + std::to_string(kMaxHeight));
        *out = new lie2_algebra{make_vect(Field::parse(field), n, derived != 0)};
        return LIE2_OK;
    });
}

void lie2_algebra_free(lie2_algebra* g) { delete g; }
size_t lie2_algebra_dim(const lie2_algebra* g) { return g ? g->g.dim() : 0; }

lie2_status lie2_algebra_to_json(const lie2_algebra* g, char** out) {
    return guarded([&] {
        need(g, "algebra");
        need(out, "output pointer");
        *out = dup(lie_to_json(g->g));
        return LIE2_OK;
    });
}

lie2_status lie2_algebra_validate(const lie2_algebra* g, int* ok, char** report) {
    return guarded([&] {
        need(g, "algebra");
        need(ok, "output pointer");
        ValidationReport r = validate_lie(g->g);
        *ok = r.ok ? 1 : 0;
        if (report) *report = dup(r.summary());
        return LIE2_OK;
    });
}

lie2_status lie2_algebra_bracket(const lie2_algebra* g, const uint32_t* x, const uint32_t* y, uint32_t* out) {
    return guarded([&] {
        need(g, "algebra");
        need(x, "x");
        need(y, "y");
        need(out, "output pointer");
        const std::size_t d = g->g.dim();
        Vec vx(x, x + d), vy(y, y + d);
        for (std::size_t i = 0; i < d; ++i) {
            g->g.field()->check(vx[i]);
            g->g.field()->check(vy[i]);
        }
        Vec r = g->g.bracket(vx, vy);
        std::copy(r.begin(), r.end(), out);
        return LIE2_OK;
    });
}

lie2_status lie2_algebra_derivation_dim(const lie2_algebra* g, size_t* out) {
    return guarded([&] {
        need(g, "algebra");
        need(out, "output pointer");
        *out = derivation_space(g->g).size();
        return LIE2_OK;
    });
}

lie2_status lie2_super_from_json(const char* text, lie2_super** out) {
    return guarded([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = new lie2_super{super_from_json(text)};
        return LIE2_OK;
    });
}

lie2_status lie2_super_known(const char* field, const char* name, size_t a, size_t b, lie2_super** out) {
    return guarded([&] {
        need(field, "field");
        need(name, "name");
        need(out, "output pointer");
        *out = new lie2_super{make_known_super(Field::parse(field), name, a, b)};
        return LIE2_OK;
    });
}

lie2_status lie2_super_vect(const char* field, int n, const char* u, lie2_super** out) {
    return guarded([&] {
        need(field, "field");
        need(u, "u");
        need(out, "output pointer");
        *out = new lie2_super{vect_superization(GeneratingFunction::parse(Field::parse(field), n, u)).s};
        return LIE2_OK;
    });
}

lie2_status lie2_super_superize(const lie2_algebra* g, const uint32_t* U, lie2_super** out) {
    return guarded([&] {
        need(g, "algebra");
        need(U, "U");
        need(out, "output pointer");
        const std::size_t d = g->g.dim();
        Matrix m(g->g.field(), d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                g->g.field()->check(U[i * d + j]);
                m.at(i, j) = U[i * d + j];
            }
        GradedPair gp{g->g, GradingOperator::make(g->g, m)};
        *out = new lie2_super{method2_superize(one_step_closure(gp))};
        return LIE2_OK;
    });
}

void lie2_super_free(lie2_super* s) { delete s; }
size_t lie2_super_dim_even(const lie2_super* s) { return s ? s->s.dim_even() : 0; }
size_t lie2_super_dim_odd(const lie2_super* s) { return s ? s->s.dim_odd() : 0; }

lie2_status lie2_super_to_json(const lie2_super* s, char** out) {
    return guarded([&] {
        need(s, "superalgebra");
        need(out, "output pointer");
        *out = dup(super_to_json(s->s));
        return LIE2_OK;
    });
}

lie2_status lie2_super_validate(const lie2_super* s, int* ok, char** report) {
    return guarded([&] {
        need(s, "superalgebra");
        need(ok, "output pointer");
        ValidationReport r = validate_super(s->s);
        *ok = r.ok ? 1 : 0;
        if (report) *report = dup(r.summary());
        return LIE2_OK;
    });
}

lie2_status lie2_super_fingerprint(const lie2_super* s, char** out) {
    return guarded([&] {
        need(s, "superalgebra");
        need(out, "output pointer");
        *out = dup(fingerprint(s->s).str());
        return LIE2_OK;
    });
}

int lie2_super_equal(const lie2_super* a, const lie2_super* b) { return a && b && a->s == b->s ? 1 : 0; }

// ------------------------------------------------------------------ runners

lie2_status lie2_run_classical(const char* field, const char* series, size_t n, int derived, int mod_center,
                               char** out) {
    return guarded([&] {
        need(field, "field");
        need(series, "series");
        ClassicalAlgebra c = classical(Field::parse(field), series, n, derived, mod_center);
        ValidationReport v = validate_lie(c.algebra);
        json doc = json::parse(lie_to_json(c.algebra));
        doc["name"] = c.name;
        doc["validation"] = report_json(v);
        doc["ok"] = v.ok;
        std::ostringstream t;
        t << c.name << " dim " << c.algebra.dim() << " validate_lie " << (v.ok ? "ok" : "FAILED") << "\n";
        doc["text"] = t.str();
        return emit(doc, out);
    });
}

lie2_status lie2_run_gradings(const char* field, const char* series, size_t n, int enumerate, size_t limit,
                              char** out) {
    return guarded([&] {
        need(field, "field");
        need(series, "series");
        FieldPtr f = Field::parse(field);
        Series s = parse_series(series);
        ClassicalAlgebra g = reps_algebra(f, s, n);
        ProjectionReps reps = projection_reps(f, s, n);
        json doc;
        doc["algebra"] = reps.algebra;
        doc["field"] = f->name();
        doc["expected"] = reps.expected;
        doc["unrealizable"] = reps.unrealizable;
        std::ostringstream t;
        t << reps.algebra << ": " << reps.reps.size() << " projection classes (expected " << reps.expected << ")\n";
        bool ok = reps.reps.size() == reps.expected;
        json list = json::array();
        std::vector<SuperFingerprint> rep_fps;
        for (const auto& r : reps.reps) {
            ProjectionCheck pc = verify_projection(r, g);
            RepSuperization sup = superize_rep(r, g);
            rep_fps.push_back(sup.fp);
            bool rep_ok = pc.report.ok && sup.valid.ok && sup.sdim_match && sup.fingerprint_match;
            ok = ok && rep_ok;
            json j{{"label", r.label.str()},
                   {"A", matrix_json(r.A)},
                   {"basis", matrix_json(r.basis)},
                   {"dim_image", r.dim_image},
                   {"verification", report_json(pc.report)},
                   {"superization", {{"sdim", {sup.fp.dim_even, sup.fp.dim_odd}},
                                     {"predicted_sdim", {sup.predicted_fp.dim_even, sup.predicted_fp.dim_odd}},
                                     {"sdim_match", sup.sdim_match},
                                     {"fingerprint_match", sup.fingerprint_match},
                                     {"validation", report_json(sup.valid)}}},
                   {"ok", rep_ok}};
            if (pc.c_A) j["c_A"] = *pc.c_A;
            list.push_back(j);
            t << "  " << r.label.str() << "  dim Im A = " << r.dim_image << "  verify " << (pc.report.ok ? "ok" : "FAILED")
              << "  sdim (" << sup.fp.dim_even << "|" << sup.fp.dim_odd << ")"
              << (sup.fingerprint_match ? "  fingerprint matches label" : "  FINGERPRINT DIFFERS FROM LABEL") << "\n";
        }
        for (const auto& u : reps.unrealizable) t << "  unrealizable: " << u << "\n";
        doc["reps"] = list;
        if (enumerate) {
            GradingEnumeration e = enumerate_gradings(g.algebra, limit ? limit : std::size_t{1} << 16);
            json classes = json::array();
            t << "enumeration over " << f->name() << ": der dim " << e.derivation_dim << ", " << e.combinations
              << " combinations, " << e.classes.size() << " fingerprint classes\n";
            for (const auto& c : e.classes) {
                json labels = json::array();
                for (std::size_t i = 0; i < reps.reps.size(); ++i)
                    if (rep_fps[i] == c.fp) labels.push_back(reps.reps[i].label.str());
                classes.push_back({{"members", c.members.size()}, {"fingerprint", fingerprint_json(c.fp)}, {"reps", labels}});
                t << "  " << c.members.size() << " x " << c.fp.str() << "  reps: " << labels.dump() << "\n";
            }
            t << "  (equivalence over the algebraic closure not decided by enumeration)\n";
            doc["enumeration"] = {{"derivation_dim", e.derivation_dim}, {"combinations", e.combinations}, {"classes", classes}};
        }
        doc["ok"] = ok;
        doc["text"] = t.str();
        return emit(doc, out);
    });
}

lie2_status lie2_run_gradings_json(const char* algebra_json, size_t limit, char** out) {
    return guarded([&] {
        need(algebra_json, "json");
        LieAlgebra g = lie_from_json(algebra_json);
        ValidationReport v = validate_lie(g);
        if (!v.ok) throw UsageError("input is not a Lie algebra: " + v.summary());
        GradingEnumeration e = enumerate_gradings(g, limit ? limit : std::size_t{1} << 16);
        json classes = json::array();
        std::ostringstream t;
        t << "dim " << g.dim() << " over " << g.field()->name() << ": der dim " << e.derivation_dim << ", "
          << e.combinations << " combinations, " << e.classes.size() << " fingerprint classes\n";
        for (const auto& c : e.classes) {
            json members = json::array();
            for (const auto& m : c.members) members.push_back(matrix_json(m));
            classes.push_back({{"fingerprint", fingerprint_json(c.fp)}, {"gradings", members}});
            t << "  " << c.members.size() << " x " << c.fp.str() << "\n";
        }
        t << "  (equivalence over the algebraic closure not decided by enumeration)\n";
        json doc{{"derivation_dim", e.derivation_dim}, {"combinations", e.combinations}, {"classes", classes},
                 {"ok", true}, {"text", t.str()}};
        return emit(doc, out);
    });
}

lie2_status lie2_run_superize(const char* grading_json, char** out) {
    return guarded([&] {
        need(grading_json, "json");
        json in;
        try {
            in = json::parse(grading_json);
        } catch (const json::exception& e) {
            throw UsageError(std::string("invalid JSON: ") + e.what());
        }
        if (!in.contains("algebra") || !in.contains("U")) throw UsageError("grading document needs 'algebra' and 'U'");
        LieAlgebra g = lie_from_json(in["algebra"].dump());
        const std::size_t d = g.dim();
        const json& rows = in["U"];
        if (!rows.is_array() || rows.size() != d) throw UsageError("U must have dim rows");
        Matrix U(g.field(), d, d);
        for (std::size_t i = 0; i < d; ++i) {
            if (!rows[i].is_array() || rows[i].size() != d) throw UsageError("U must be square");
            for (std::size_t j = 0; j < d; ++j) {
                const json& c = rows[i][j];
                Elem e = c.is_string() ? g.field()->parse_elem(c.get<std::string>()) : c.get<Elem>();
                g.field()->check(e);
                U.at(i, j) = e;
            }
        }
        GradedPair gp{g, GradingOperator::make(g, U)};
        RestrictedClosure rc = one_step_closure(gp);
        LieSuperalgebra s = method2_superize(rc);
        json doc = superalgebra_doc(s);
        doc["adjoined"] = rc.h.dim() - rc.base_dim;
        doc["text"] = super_text(s, doc);
        return emit(doc, out);
    });
}

lie2_status lie2_run_known(const char* field, const char* name, size_t a, size_t b, char** out) {
    return guarded([&] {
        need(field, "field");
        need(name, "name");
        FieldPtr f = Field::parse(field);
        const std::string nm = name;
        LieSuperalgebra s = make_known_super(f, nm, a, b);
        json doc = superalgebra_doc(s);
        std::string text = nm + "\n" + super_text(s, doc);
        if (nm == "kl" || nm == "kl-printed") {
            const int n = static_cast<int>(a);
            bool same = kl_from_vect(f, n) == s;
            doc["equals_vect_superization"] = same;
            text += std::string("equals the D_1 superization in the e/o basis: ") + (same ? "yes" : "no") + "\n";
            if (n >= 3) {
                QDiscriminant q = q_discriminant(s, unit_vec(s.dim(), kl_even_index(n, -1)));
                doc["q_discriminant"] = {{"verdict", to_string(q.verdict)},
                                         {"nilpotency_even", q.nilpotency_even},
                                         {"nilpotent_odd", q.nilpotent_odd}};
                text += "q_discriminant(X_-1) = " + to_string(q.verdict) + "\n";
            }
        }
        doc["text"] = text;
        return emit(doc, out);
    });
}

lie2_status lie2_run_tables(int n, const char* golden_dir, char** out) {
    return guarded([&] {
        VectTable t = vect_table(n);
        json rows = json::array();
        std::string csv = "n,tag,lower,derived,params\n";
        auto join = [](const std::vector<std::size_t>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        };
        for (const auto& r : t.rows) {
            rows.push_back({{"tag", r.tag}, {"lower", r.lower}, {"derived", r.derived}, {"params", r.params}});
            std::string p;
            for (std::size_t i = 0; i < r.params.size(); ++i) p += (i ? " " : "") + r.params[i];
            csv += std::to_string(n) + ",\"" + r.tag + "\",\"" + join(r.lower) + "\",\"" + join(r.derived) + "\",\"" + p + "\"\n";
        }
        json doc{{"n", n}, {"series", "vect1"}, {"rows", rows}, {"text", t.str()}, {"csv", csv}, {"ok", true}};
        if (golden_dir) {
            bool same = false;
            std::string want = golden_compare(golden_dir, "vect_table_n" + std::to_string(n) + ".txt", t.str(), &same);
            doc["golden_match"] = same;
            doc["ok"] = same;
            if (!same) doc["golden"] = want;
        }
        return emit(doc, out);
    });
}

lie2_status lie2_run_verify_charpoly(const char* field, int n, size_t samples, uint64_t seed, char** out) {
    return guarded([&] {
        need(field, "field");
        CharpolyReport r = verify_charpoly(Field::parse(field), n, samples, seed);
        std::ostringstream t;
        t << "n=" << n << " field " << r.field << (r.exhaustive ? " exhaustive" : " sampled, seed " + std::to_string(seed))
          << ": " << r.tested << " tuples, " << r.failures << " counterexamples\n";
        for (const auto& m : r.mismatches) t << "  " << m << "\n";
        json doc{{"n", n},           {"field", r.field},       {"exhaustive", r.exhaustive}, {"seed", seed},
                 {"tested", r.tested}, {"failures", r.failures}, {"counterexamples", r.mismatches},
                 {"ok", r.ok()},      {"text", t.str()}};
        return emit(doc, out);
    });
}

lie2_status lie2_run_vect(const char* field, int n, const char* u_text, const char* mode, char** out) {
    return guarded([&] {
        need(field, "field");
        need(mode, "mode");
        const std::string m = mode;
        FieldPtr f = Field::parse(field);
        if (m == "sierpinski") return lie2_run_sierpinski(n, nullptr, out);
        need(u_text, "u");
        GeneratingFunction u = GeneratingFunction::parse(f, n, u_text);
        std::ostringstream t;
        json doc;
        doc["u"] = u.str();
        doc["n"] = n;
        doc["field"] = f->name();
        if (m == "grade") {
            Matrix U = vect_grading(u);
            AmbientSuperization a = vect_superization(u);
            json sup = superalgebra_doc(a.s);
            LieFingerprint even = fingerprint(a.s.even_part());
            doc["U"] = matrix_json(U);
            doc["superization"] = sup;
            doc["even_part"] = {{"lower_central", even.lower_central}, {"derived", even.derived}, {"solvable", even.solvable}};
            doc["ok"] = sup["ok"];
            t << "U on vect^(1)(1;" << n << ") for u = " << u.str() << ":\n" << matrix_text(U, *f);
            t << super_text(a.s, sup);
            t << "even part: L_k " << series_string(even.lower_central) << "  L^(k) " << series_string(even.derived)
              << (even.solvable ? "  solvable" : "") << "\n";
        } else if (m == "charpoly") {
            Polynomial got = d2_charpoly(u), want = conjectured_d2_charpoly(u);
            doc["charpoly"] = got.str();
            doc["formula"] = want.str();
            doc["ok"] = got == want;
            t << "char poly of the d^2 action: " << got.str() << "\nformula:                    " << want.str() << "\n"
              << (got == want ? "match" : "MISMATCH") << "\n";
        } else {
            throw UsageError("mode must be grade, charpoly or sierpinski");
        }
        doc["text"] = t.str();
        return emit(doc, out);
    });
}

lie2_status lie2_run_sierpinski(int n, const char* golden_dir, char** out) {
    return guarded([&] {
        SievePattern p = sierpinski_pattern(n);
        json doc{{"n", n},
                 {"size", p.size},
                 {"derivation_dim", p.derivation_dim},
                 {"expected_params", p.expected_params},
                 {"support", p.support},
                 {"lower_relations", p.lower_relations},
                 {"upper_relations", p.upper_relations},
                 {"grid", p.grid()}};
        bool ok = p.lower_relations && p.upper_relations && p.derivation_dim == p.expected_params;
        std::ostringstream t;
        t << p.grid() << "der dim " << p.derivation_dim << " (expected " << p.expected_params << "), lower relations "
          << (p.lower_relations ? "hold" : "FAIL") << ", upper relations " << (p.upper_relations ? "hold" : "FAIL") << "\n";
        if (golden_dir) {
            bool same = false;
            golden_compare(golden_dir, "sieve_n" + std::to_string(n) + ".txt", p.grid(), &same);
            doc["golden_match"] = same;
            ok = ok && same;
        }
        doc["ok"] = ok;
        doc["text"] = t.str();
        return emit(doc, out);
    });
}

}  // extern "C"
