#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lie2/superalgebra.hpp"

namespace lie2 {

// Nondegenerate symmetric forms over a perfect field of characteristic 2 are classified by
// dimension and by whether they are alternating (B(v,v) = 0 for all v).
enum class FormKind { I, Pi, Degenerate };
std::string to_string(FormKind k);

// Odd dimension is always I; even dimension is Pi iff the diagonal vanishes.
FormKind classify_form(const Matrix& gram);

struct FormBlock {
    FormKind kind = FormKind::I;
    std::size_t dim = 0;  // even for Pi
};
// Block-diagonal Gram matrix: I_a, or [[0, I_m], [I_m, 0]] for a Pi block of size 2m.
Matrix block_gram(FieldPtr f, const std::vector<FormBlock>& blocks);

struct BilinearForm {
    Matrix gram;
    FormKind kind = FormKind::I;
    static BilinearForm identity(FieldPtr f, std::size_t n);
    static BilinearForm split(FieldPtr f, std::size_t n);  // n even, Gram [[0, I], [I, 0]]
    // Throws UsageError unless gram is symmetric and invertible.
    static BilinearForm from_gram(Matrix gram);
};

// Basis (columns of P, entries in GF(2)) with P^T B P = block_gram(target); nullopt when no
// such basis exists, which the form invariants decide before any search.
std::optional<Matrix> find_transition(const Matrix& B, const std::vector<FormBlock>& target);

enum class Series { gl, sl, psl, o, o1, o2, o2_mod_c, tilde_o };
Series parse_series(std::string_view name);
std::string series_name(Series s);

// gl(N) with basis e_ij at index i*N + j.
LieAlgebra make_gl(FieldPtr f, std::size_t N);
Matrix unflatten(FieldPtr f, std::size_t N, const Vec& v);

// A matrix Lie algebra inside gl(N), optionally divided by its center.
struct ClassicalAlgebra {
    std::string name;
    std::size_t N = 0;
    std::optional<BilinearForm> form;
    LieAlgebra gl;
    Subspace sub;                     // gl(N) coordinates
    std::optional<Quotient> quotient; // of restrict_to(gl, sub) by its center
    LieAlgebra algebra;               // the result
    // Operator on `algebra` induced by an operator on gl(N) preserving sub.
    Matrix induced(const Matrix& on_gl) const;
};

// Base series gl, sl, o_B, tilde-o_B followed by `derived` derived steps and an optional
// central quotient. Orthogonal kinds default to the identity form, tilde-o to the split form.
ClassicalAlgebra make_classical(FieldPtr f, Series base, std::size_t N, std::optional<BilinearForm> form,
                                int derived, bool mod_center);
// psl = sl mod center, o1 = o', o2 = o'', o2_mod_c = o''/c; o2 and o2_mod_c default to the split form.
ClassicalAlgebra make_classical(FieldPtr f, Series s, std::size_t N, std::optional<BilinearForm> form = {});

// Superalgebra names predicted for a grading.
struct SuperLabel {
    enum class Kind { sl, psl, oo, pe };
    Kind kind = Kind::sl;
    std::size_t a = 0, b = 0;                               // (even|odd) dims of the superspace
    FormKind form_even = FormKind::I, form_odd = FormKind::I;  // oo only
    int derived = 0;
    bool mod_center = false;
    std::string str() const;
};
// The labelled superalgebra built from supermatrices: traceless for sl/psl, form preserving
// for oo (form diag(B_even, B_odd)) and pe (odd form pairing the two halves).
LieSuperalgebra label_superalgebra(FieldPtr f, const SuperLabel& l);

struct ProjectionRep {
    Matrix A;                 // standard coordinates, A^2 = A
    Matrix basis;             // columns: adapted basis, Ker A first
    SuperLabel label;
    std::size_t dim_image = 0;
    std::optional<Elem> c_A;  // tilde-o constant
};

struct ProjectionReps {
    std::string algebra;
    std::size_t expected = 0;               // number of classes in the classification statement
    std::vector<ProjectionRep> reps;
    std::vector<std::string> unrealizable;  // listed labels without a projection, with the reason
};
// Series sl (N >= 3), psl (N even >= 4), o1 (N odd >= 3, or N even >= 6), o2_mod_c (N even >= 6).
ProjectionReps projection_reps(FieldPtr f, Series s, std::size_t N);
// The algebra the reps grade.
ClassicalAlgebra reps_algebra(FieldPtr f, Series s, std::size_t N);

struct ProjectionCheck {
    bool idempotent = false;
    bool preserves = false;       // ad_A maps the algebra into itself
    bool derivation = false;      // induced U is a derivation
    bool grading = false;         // U^2 = U
    bool form_ok = true;          // Im A orthogonal to Ker A, or the tilde-o condition
    std::optional<Elem> c_A;
    std::size_t image_dim = 0;
    ValidationReport report;
};
ProjectionCheck verify_projection(const ProjectionRep& rep, const ClassicalAlgebra& g);

struct RepSuperization {
    LieSuperalgebra s;
    SuperFingerprint fp, predicted_fp;
    bool sdim_match = false, fingerprint_match = false;
    ValidationReport valid;
};
RepSuperization superize_rep(const ProjectionRep& rep, const ClassicalAlgebra& g);

// All values c_M over projections M of tilde-o_B(N) by exhaustive enumeration; throws
// ResourceError when q^dim exceeds `limit`.
std::vector<Elem> tilde_o_projection_constants(FieldPtr f, const BilinearForm& B, std::size_t limit = std::size_t{1} << 24);

}  // namespace lie2
