#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lie2/liealg.hpp"

namespace lie2 {

// Lie superalgebra over a field of characteristic 2 with a squaring on the odd part.
// Basis: even vectors 0..d0-1 followed by odd vectors d0..d0+d1-1 ("total" indices).
// The bracket table is stored symmetric; [o_i,o_i] is always 0 and the square of a
// general odd vector is expanded as sum a_i^2 sq(o_i) + sum_{i<j} a_i a_j [o_i,o_j].
class LieSuperalgebra {
public:
    LieSuperalgebra() = default;
    LieSuperalgebra(FieldPtr f, std::size_t dim_even, std::size_t dim_odd);

    const FieldPtr& field() const { return sc_.field(); }
    std::size_t dim_even() const { return d0_; }
    std::size_t dim_odd() const { return d1_; }
    std::size_t dim() const { return d0_ + d1_; }
    bool is_odd_index(std::size_t t) const { return t >= d0_; }

    // Total-index setters; set_bracket writes both orders.
    void set_bracket(std::size_t a, std::size_t b, const SparseVec& v);
    void set_square(std::size_t odd_index, const SparseVec& v);  // odd_index in 0..d1-1, v over total indices
    const SparseVec& bracket_basis(std::size_t a, std::size_t b) const { return sc_.get(a, b); }
    const SparseVec& square_basis(std::size_t odd_index) const { return sq_.at(odd_index); }
    // Raw table, possibly invalid; validate_super inspects it.
    const StructureConstants& table() const { return sc_; }

    Vec bracket(const Vec& x, const Vec& y) const;
    // x must be odd (zero even coordinates).
    Vec square(const Vec& x) const;
    Matrix ad(const Vec& x) const;

    LieAlgebra even_part() const;
    // The bracket alone, forgetting parity and squares; alternating since [o_i,o_i] = 0.
    LieAlgebra underlying() const;
    // Action of an even vector (total coordinates) on the odd part, d1 x d1.
    Matrix even_on_odd(const Vec& x) const;

    std::vector<std::string> labels;  // optional, total indices
    std::string label(std::size_t t) const;

    bool operator==(const LieSuperalgebra& o) const;

private:
    StructureConstants sc_;
    std::vector<SparseVec> sq_;
    std::size_t d0_ = 0, d1_ = 0;
};

ValidationReport validate_super(const LieSuperalgebra& s, unsigned spot_samples = 16);

// Idempotent derivation of g encoding the grading g_0 = Ker U, g_1 = Im U.
struct GradingOperator {
    Matrix U;
    // Verifies U is a derivation of g with U^2 = U; throws UsageError otherwise.
    static GradingOperator make(const LieAlgebra& g, Matrix U);
};

struct GradedPair {
    LieAlgebra g;
    GradingOperator grading;
};

// The minimal subalgebra of the restricted closure containing g and x^[2] for odd x,
// realized by derivations: x^[2] acts on g as (ad_x)^2, reused when inner, adjoined otherwise.
struct RestrictedClosure {
    LieAlgebra h;                   // basis: g's basis, then adjoined elements
    Matrix U;                       // extended grading on h (zero on adjoined elements)
    std::size_t base_dim = 0;       // dim g
    std::vector<Vec> odd_basis;     // in h coordinates
    std::vector<Vec> odd_squares;   // x^[2] of each odd basis vector, in h coordinates
};
RestrictedClosure one_step_closure(const GradedPair& gp, std::size_t max_adjoined = 256);
LieSuperalgebra method2_superize(const RestrictedClosure& c);

// Superization inside a restricted ambient algebra: amb contains g (a subspace closed
// under the bracket), U_amb is an idempotent derivation of amb preserving g, and
// two_map is the ambient 2-map. Squares of the odd basis of U(g) are adjoined and the
// result is closed under the bracket.
struct AmbientSuperization {
    LieSuperalgebra s;
    std::vector<Vec> even;     // ambient coordinates
    std::vector<Vec> odd;
    std::vector<Vec> squares;  // x^[2] of the odd basis vectors
};
AmbientSuperization superize_in_ambient(const LieAlgebra& amb, const Subspace& g, const Matrix& U_amb,
                                        const std::function<Vec(const Vec&)>& two_map, std::size_t max_steps = 64);

// Structure constants of the superalgebra spanned by the given even and odd ambient
// vectors, with the given squares of the odd vectors. The span must be closed.
LieSuperalgebra superalgebra_in_basis(const LieAlgebra& amb, const std::vector<Vec>& even, const std::vector<Vec>& odd,
                                      const std::vector<Vec>& odd_squares);

// Graded subspaces given by total-coordinate vectors.
struct GradedSubspace {
    Subspace even;  // in total coordinates
    Subspace odd;
    std::size_t sdim_even() const { return even.dim(); }
    std::size_t sdim_odd() const { return odd.dim(); }
};
GradedSubspace super_center(const LieSuperalgebra& s);
// Span of all brackets and odd squares, split by parity.
GradedSubspace derived_super(const LieSuperalgebra& s);
LieSuperalgebra sub_superalgebra(const LieSuperalgebra& s, const GradedSubspace& h);
LieSuperalgebra quotient_super(const LieSuperalgebra& s, const GradedSubspace& ideal);

struct SuperFingerprint {
    std::size_t dim_even = 0, dim_odd = 0;
    LieFingerprint even;
    std::size_t center_even = 0, center_odd = 0;
    std::vector<std::size_t> odd_chain;  // M_0 = odd part, M_k = [g_0, M_{k-1}], until stable
    std::size_t derived_even = 0, derived_odd = 0;
    bool operator==(const SuperFingerprint& o) const = default;
    std::string str() const;
};
SuperFingerprint fingerprint(const LieSuperalgebra& s);

// Supermatrix superalgebras in characteristic 2: bracket XY + YX, square X^2.
// parity[i] is the parity of the i-th coordinate; the span of `mats` must be closed.
struct MatrixSuperalgebra {
    std::size_t N = 0;
    std::vector<int> parity;
    std::vector<Matrix> even_mats, odd_mats;
    LieSuperalgebra s;
};
MatrixSuperalgebra matrix_superalgebra(FieldPtr f, const std::vector<int>& parity, const std::vector<Matrix>& mats);
// Coordinates of X in the basis (even_mats, odd_mats); throws if X is outside the span.
Vec matrix_coords(const MatrixSuperalgebra& m, const Matrix& x);

}  // namespace lie2
