#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lie2/liealg.hpp"
#include "lie2/superalgebra.hpp"

namespace lie2 {

// binom(a, b) mod 2 by Lucas: 1 iff the bits of b are a subset of the bits of a.
inline int binom2(std::uint64_t a, std::uint64_t b) { return (a & b) == b ? 1 : 0; }

constexpr int kMaxHeight = 12;

// Element of O(1;n): sum of c_r x^(r), r < 2^n, with x^(r) x^(s) = binom(r+s, r) x^(r+s).
class DividedPoly {
public:
    DividedPoly() = default;
    DividedPoly(FieldPtr f, int n);  // zero
    static DividedPoly monomial(FieldPtr f, int n, std::size_t r, Elem c = 1);
    static DividedPoly constant(FieldPtr f, int n, Elem c);
    static DividedPoly from_coeffs(FieldPtr f, int n, Vec c);

    const FieldPtr& field() const { return f_; }
    int height() const { return n_; }
    std::size_t size() const { return c_.size(); }
    const Vec& coeffs() const { return c_; }
    Elem coeff(std::size_t r) const { return r < c_.size() ? c_[r] : 0; }
    Elem constant_term() const { return c_.empty() ? 0 : c_[0]; }
    bool is_zero() const;

    DividedPoly operator+(const DividedPoly& o) const;
    DividedPoly operator*(const DividedPoly& o) const;
    DividedPoly scaled(Elem a) const;
    // Shift of exponents down by m: the distinguished derivative d^m.
    DividedPoly partial(std::size_t m = 1) const;
    // k-th divided power; requires zero constant term.
    DividedPoly divided_power(std::size_t k) const;
    bool operator==(const DividedPoly& o) const { return n_ == o.n_ && c_ == o.c_; }
    // "x^(3)+t*x+1"
    std::string str() const;

private:
    FieldPtr f_;
    int n_ = 0;
    Vec c_;
};

DividedPoly dp_mul(const DividedPoly& p, const DividedPoly& q);
DividedPoly dp_partial(const DividedPoly& p, std::size_t m = 1);

// u = c_0 + sum_{k>=1} c_k x^(2^k); this shape is exactly the one satisfying
// x du = 0, u^2 = c_0^2.
struct GeneratingFunction {
    FieldPtr f;
    int n = 0;
    Vec c;  // c_0 .. c_{n-1}

    static GeneratingFunction make(FieldPtr f, int n, Vec c);
    // "c0,c1,..." with field elements in Field::parse_elem syntax; also "0100" over GF(2).
    static GeneratingFunction parse(FieldPtr f, int n, std::string_view text);
    Elem a() const { return c[0]; }
    DividedPoly poly() const;
    // "(0100)" when all entries are 0/1, else "(0,t,t^2+1)".
    std::string str() const;
};
// x du = 0, d(const) = 0, u^2 = u(0)^2 for an arbitrary polynomial.
bool satisfies_u_prop(const DividedPoly& u);

// v_{n+1} = vect(1;n) + K d^2 with basis d^2, d, x d, ..., x^(2^n-1) d (indices 0, 1, ..., 2^n).
class ExtendedVect {
public:
    ExtendedVect(FieldPtr f, int n);

    const FieldPtr& field() const { return f_; }
    int height() const { return n_; }
    std::size_t N() const { return std::size_t{1} << n_; }
    std::size_t dim() const { return N() + 1; }
    static std::size_t index_of(std::size_t r) { return r + 1; }
    const LieAlgebra& algebra() const { return alg_; }

    Vec field_vec(const DividedPoly& f, Elem d2 = 0) const;
    DividedPoly coefficient(const Vec& v) const;
    Vec bracket(const Vec& x, const Vec& y) const { return alg_.bracket(x, y); }
    // (f d)^[2] = (f df) d + f(0)^2 d^2; arguments with a d^2 component are rejected.
    Vec two_map(const Vec& v) const;
    Subspace vect() const;          // vect(1;n)
    Subspace derived_vect() const;  // vect^(1)(1;n): x^(r) d, r <= 2^n - 2
    // ad of D_u = (u + x + x u sum a^(2^i-2) d^(2^i) u) d + sum a^(2^i) d^(2^i) on v_{n+1}.
    Matrix grading_operator(const GeneratingFunction& u) const;
    // Parity for u = 0: d^2 and x^(odd) d even, x^(even) d odd.
    bool zero_parity_odd(std::size_t index) const { return index > 0 && (index - 1) % 2 == 0; }

private:
    FieldPtr f_;
    int n_;
    LieAlgebra alg_;
};

// vect(1;n) or vect^(1)(1;n) in the basis x^(r) d (e_{r-1} = x^(r) d).
LieAlgebra make_vect(FieldPtr f, int n, bool derived);
// D_u restricted to vect^(1)(1;n), basis x^(r) d, r = 0..2^n-2.
Matrix vect_grading(const GeneratingFunction& u);

// Basis of the D_1-superization: e_{-2} = d^2 + (1+x) d, e_k = (1+x) w^(k+1) d, o_k = w^(k+1) d, w = x + x^(2).
struct EOBasis {
    std::vector<Vec> evens;  // e_{-2}, ..., e_{2^(n-1)-2}, in v_{n+1} coordinates
    std::vector<Vec> odds;   // o_{-1}, ..., o_{2^(n-1)-2}
    int first_even = -2, first_odd = -1;
};
EOBasis e_o_basis(FieldPtr f, int n);

struct DeformMaps {
    Matrix T, A;
};
DeformMaps deform_maps(const ExtendedVect& v, const GeneratingFunction& u);
// v_{n+1} with [X,Y]_u = A[X,Y], [d^2,Y]_u = (1 + u d^2 u)[d^2,Y], (X^2)_u = A X^2, graded by the
// u = 0 parity. Basis: even indices of v_{n+1} in order, then odd ones.
LieSuperalgebra deformed_bracket(const ExtendedVect& v, const GeneratingFunction& u);
// Total basis order used by deformed_bracket, as v_{n+1} indices.
std::vector<std::size_t> zero_parity_order(const ExtendedVect& v);

// (c_1, ..., c_{n-1}) -> (eps^(2^k - 1) c_k); c_0 is left unchanged.
GeneratingFunction sigma_rescale(const GeneratingFunction& u, Elem eps);
struct RescaleOrbits {
    std::vector<std::vector<Vec>> orbits;  // tuples (c_1..c_{n-1}), sorted; orbit sorted by first tuple
    std::size_t burnside = 0;              // orbit count by Burnside's lemma
};
RescaleOrbits rescale_orbits(FieldPtr f, int n);

// v d -> (1 + u d^2 u) d^2 v d on span{x^(r) d : r odd}, basis ascending in r.
Matrix d2_operator(const GeneratingFunction& u);
Polynomial d2_charpoly(const GeneratingFunction& u, bool verify = true);
// lambda^(2^(n-1)) + sum_{k=0}^{n-2} c_{n-1-k}^(2^(k+1)) lambda^(2^k)
Polynomial conjectured_d2_charpoly(const GeneratingFunction& u);

struct SievePattern {
    int n = 0;
    std::size_t size = 0;                   // 2^n - 1
    std::size_t derivation_dim = 0;
    std::size_t expected_params = 0;        // (2^n - 1) + n
    std::vector<std::vector<bool>> support; // support[i][j], 0-based
    bool lower_relations = false;           // c_{i,j} = binom(i, j-1) c_{i-j+1,1} for i >= j
    bool upper_relations = false;           // c_{1,j} = 0 unless j = 2^k + 1; c_{i,j} = c_{i-1,j-1} for i < j
    std::string grid() const;               // rows of '*' and '_'
};
SievePattern sierpinski_pattern(int n);

// O(m;1) with basis prod_{i<=s} (1+x_i)^{j_i} prod_{i>s} x_i^{j_i}, bucketed by sum j_i a_i mod 2.
struct BKGrading {
    int m = 0, s = 0;
    std::vector<int> degrees;
    std::vector<std::uint32_t> even, odd;  // exponent masks J
    std::string label(std::uint32_t mask) const;
};
BKGrading bk_grading(int m, int s, const std::vector<int>& degrees);
// vect(m;1) with basis x^J d_k at index k * 2^m + J.
LieAlgebra make_vect_m_one(FieldPtr f, int m);
// The induced grading on vect(m;1): ad of sum_{i<=s} a_i (1+x_i) d_i + sum_{i>s} a_i x_i d_i.
Matrix bk_vect_grading(FieldPtr f, int m, int s, const std::vector<int>& degrees);

}  // namespace lie2
