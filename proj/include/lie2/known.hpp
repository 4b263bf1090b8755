#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lie2/classical.hpp"
#include "lie2/divpow.hpp"
#include "lie2/superalgebra.hpp"

namespace lie2 {

// kl_{n-1}: even X_k (k = -2..2^(n-1)-2), odd Y_m (m = -1..2^(n-1)-2), labels "X_k", "Y_m".
// Relations, terms outside the index range dropped, binom2 of negative arguments = 0:
//   [X_k, X_m] = binom2(k+m+2, k+1) X_{k+m} for -1 <= k < m; [X_{-2}, X_m] = X_{m-2} (m >= 1), 0 (m = -1, 0)
//   [Y_k, Y_m] = binom2(k+m+2, k+1) X_{k+m}
//   [X_k, Y_m] = binom2(k+m+2, k+1) (Y_{k+m} + Y_{k+m+1}) for k >= -1, except [X_{-1}, Y_{-1}] = Y_{-1}
//   [X_{-2}, Y_m] = Y_{m-2} + Y_m
//   Y_{-1}^2 = X_{-2} + X_{-1}, Y_k^2 = binom2(2k+1, k) X_{2k}
LieSuperalgebra kl(FieldPtr f, int n);
// The same table with [X_{-2}, Y_m] read off the general [X_k, Y_m] rule (hence 0) and
// Y_{-1}^2 = X_{-2} + X_0; it violates the super Jacobi identity.
LieSuperalgebra kl_printed(FieldPtr f, int n);
std::size_t kl_even_index(int n, int k);  // position of X_k
std::size_t kl_odd_index(int n, int m);   // total position of Y_m

// The D_1 superization of v_{n+1} in the e/o basis with e_k -> X_k, o_m -> Y_m.
LieSuperalgebra kl_from_vect(FieldPtr f, int n);

// q(g) for g = vect(1;n-1): even part v_n = vect(1;n-1) + K d^2, odd part P vect(1;n-1) with
// [x, Py] = P[x,y], [Px, Py] = [x,y], (Py)^2 = y^[2]. Labels "X_k" (X_{-2} = d^2, X_k = x^(k+1) d), "PX_k".
LieSuperalgebra q_vect(FieldPtr f, int n);

// Method-2 superization of vect^(1)(1;n) for the grading D_u, computed in v_{n+1}.
AmbientSuperization vect_superization(const GeneratingFunction& u);
// The u = 0 case.
AmbientSuperization k_contact(FieldPtr f, int n);

// In q(g) the odd part is a submodule of the adjoint module, so an even x with ad_x nilpotent on
// the even part but not on the odd part rules q out (not_q); otherwise x decides nothing (q_like).
enum class QVerdict { not_q, q_like };
std::string to_string(QVerdict v);
struct QDiscriminant {
    QVerdict verdict = QVerdict::not_q;
    bool nilpotent_even = false;
    std::size_t nilpotency_even = 0;  // least m with (ad_x)^m = 0 on the even part, 0 if none
    bool nilpotent_odd = false;
};
QDiscriminant q_discriminant(const LieSuperalgebra& s, const Vec& x);

// Odd vectors killed by every raising operator (highest) or by the lowering operator (lowest).
struct WeightVectors {
    Subspace highest, lowest;  // odd coordinates
};
WeightVectors weight_vectors(const LieSuperalgebra& s, const std::vector<Vec>& raising, const Vec& lowering);

// The binomials binom(2^(n-1)-2+2^k, 2^k), binom(2^(n-1)-1+2^k, 2^k), binom(2^(n-1)-2+2^k, 2^k-1)
// vanish mod 2 for k = 1..n-2; returns false at the first nonzero one.
bool kl_lucas_identities(int n);

// Linear bijection (columns: images of basis vectors, both sides in total coordinates)
// respecting parity, bracket and squaring.
bool is_super_homomorphism(const LieSuperalgebra& from, const LieSuperalgebra& to, const Matrix& phi);

// Named superalgebras: "kl", "kl-printed", "q-vect" (n), "k" (u = 0 superization, n),
// "oo-II", "oo-IPi", "oo-PiPi" (a|b), "pe" (a).
LieSuperalgebra make_known_super(FieldPtr f, std::string_view name, std::size_t a, std::size_t b = 0);

// vect^(1)(1;2) superizations against the explicit (1|2) supermatrix tables.
struct SmallCase {
    std::string name;                 // "oo^(1)_IPi(1|2)" or "oo^(1)_II(1|2)"
    LieSuperalgebra from_vect;        // in the listed e/o basis of v_3
    LieSuperalgebra from_matrices;    // the corresponding supermatrices in the same order
    std::size_t listed = 0;           // displayed relations checked on each side
    bool spans_superization = false;  // the e/o basis spans the ambient superization of the grading
    bool vect_matches_matrices = false;
    bool vect_matches_table = false;
    bool matrices_match_table = false;  // the matrix-side relations in the matrix basis
    bool ok() const { return spans_superization && vect_matches_matrices && vect_matches_table && matrices_match_table; }
};
// c = (0,0) or (1,1).
SmallCase vect2_small_case(FieldPtr f, int c0, int c1);

}  // namespace lie2
