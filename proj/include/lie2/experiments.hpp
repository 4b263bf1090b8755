#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lie2/divpow.hpp"
#include "lie2/known.hpp"
#include "lie2/superalgebra.hpp"

namespace lie2 {

// One row of the even-part table for vect^(1)(1;n): series dimensions from L_1 up to the
// first stable term, and the GF(2) parameter tuples (c_0 ... c_{n-1}) producing them.
struct TableRow {
    std::string tag;  // "Heisenberg", "solv", "v_n" ("o(3)/c=v_3" for n = 3), "?" if unidentified
    std::vector<std::size_t> lower, derived;
    std::vector<std::string> params;
    std::string str() const;  // "solv | 3,2 | 3,0 | (010), (0a0) a!=0"
};
struct VectTable {
    int n = 0;
    std::vector<TableRow> rows;
    std::string str() const;  // one row per line
};
// Over GF(2). The outer family (1ab...) is also run over GF(4) and flagged if any member leaves
// its row; for n = 3 the families (0a0) a != 0 and (0ab) b != 0 are listed only when every GF(4)
// member lands in the row.
VectTable vect_table(int n);

// sdim S = (2^(n-1)+1 | 2^(n-1)) and dim [S_0, S_0] = 2^(n-1) - 1 for every u over f
// (all tuples when samples = 0, else `samples` seeded random tuples).
struct SdimLawReport {
    int n = 0;
    std::string field;
    std::size_t tested = 0, failures = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return tested > 0 && failures == 0; }
};
SdimLawReport superdimension_law(FieldPtr f, int n, std::size_t samples = 0, std::uint64_t seed = 1);

// Char poly of the d^2 action against the closed formula over tuples (c_1..c_{n-1}), c_0 = 0.
struct CharpolyReport {
    int n = 0;
    std::string field;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::size_t tested = 0, failures = 0;
    std::vector<std::string> mismatches;  // capped
    bool ok() const { return tested > 0 && failures == 0; }
};
// samples = 0: all q^(n-1) tuples (ResourceError above 2^20).
CharpolyReport verify_charpoly(FieldPtr f, int n, std::size_t samples = 0, std::uint64_t seed = 1);

// Idempotent derivations by enumerating der g; throws ResourceError when q^dim der g > limit.
std::vector<Matrix> idempotent_derivations(const LieAlgebra& g, std::size_t limit = std::size_t{1} << 16);

struct GradingClass {
    SuperFingerprint fp;
    std::vector<Matrix> members;
    std::string even_part;  // LieFingerprint of Ker U
};
struct GradingEnumeration {
    std::size_t derivation_dim = 0, combinations = 0;
    std::vector<GradingClass> classes;  // by fingerprint of the method-2 superization; U = 0 included
};
GradingEnumeration enumerate_gradings(const LieAlgebra& g, std::size_t limit = std::size_t{1} << 16);

// The deformation picture for u(0) = 0: T_u carries 0-parity to u-parity and satisfies
//   [T X, T Y] = T A [X,Y],  (T X)^2 = T A X^2 (X 0-odd),  [T d^2, T X] = T((1 + u d^2 u)[d^2, X]),
// the deformed bracket satisfies super Jacobi, and T is an isomorphism onto the u-superization.
struct DeformationCheck {
    std::string u;
    bool invertible = false, parity = false, bracket = false, square = false, d2 = false, jacobi = false,
         isomorphism = false;
    bool ok() const { return invertible && parity && bracket && square && d2 && jacobi && isomorphism; }
};
DeformationCheck check_deformation(const GeneratingFunction& u);

// Even part of the u-superization is solvable.
bool even_part_solvable(const GeneratingFunction& u);

// Orbits of (c_1..c_{n-1}) under sigma_eps, built by union-find in a seeded random order.
struct RescaleCheck {
    std::string field;
    int n = 0;
    std::uint64_t seed = 0;
    std::size_t tuples = 0, orbits = 0, burnside = 0, reference_orbits = 0;
    bool partition = false;               // disjoint, covering, each orbit sigma-stable
    bool fingerprints_constant = false;   // superizations agree within every orbit
    std::size_t fingerprint_classes = 0;  // distinct fingerprints over all tuples
    bool ok() const { return partition && fingerprints_constant && orbits == burnside && orbits == reference_orbits; }
};
RescaleCheck rescale_check(FieldPtr f, int n, std::uint64_t seed);

}  // namespace lie2
