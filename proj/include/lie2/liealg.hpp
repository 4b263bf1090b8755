#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lie2/field.hpp"
#include "lie2/linalg.hpp"

namespace lie2 {

struct Term {
    std::size_t index;
    Elem coeff;
    bool operator==(const Term& o) const { return index == o.index && coeff == o.coeff; }
};
// Sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, std::size_t dim);
void add_term(SparseVec& s, std::size_t index, Elem coeff);

// Raw structure constants c^{ij}_k. May violate the Lie axioms; validate_lie reports how.
class StructureConstants {
public:
    StructureConstants() = default;
    StructureConstants(FieldPtr f, std::size_t dim);

    const FieldPtr& field() const { return f_; }
    std::size_t dim() const { return dim_; }
    const SparseVec& get(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, SparseVec v);
    void add(std::size_t i, std::size_t j, std::size_t k, Elem c);
    // Sets [e_i,e_j] and [e_j,e_i] together.
    void set_pair(std::size_t i, std::size_t j, const SparseVec& v);
    bool operator==(const StructureConstants& o) const;

private:
    FieldPtr f_;
    std::size_t dim_ = 0;
    std::vector<SparseVec> table_;
};

class LieAlgebra {
public:
    LieAlgebra() = default;
    // Throws UsageError unless c^{ii} = 0 and c^{ij} = c^{ji} (alternation in char 2).
    explicit LieAlgebra(StructureConstants sc, std::vector<std::string> labels = {});

    const FieldPtr& field() const { return sc_.field(); }
    std::size_t dim() const { return sc_.dim(); }
    const StructureConstants& sc() const { return sc_; }
    const SparseVec& basis_bracket(std::size_t i, std::size_t j) const { return sc_.get(i, j); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(std::size_t i) const;

    Vec bracket(const Vec& x, const Vec& y) const;
    Vec bracket_basis(std::size_t i, const Vec& y) const;
    Matrix ad(const Vec& x) const;
    Matrix ad_basis(std::size_t i) const;

private:
    StructureConstants sc_;
    std::vector<std::string> labels_;
};

// Canonical subspace: reduced echelon basis with ascending pivots.
class Subspace {
public:
    Subspace() = default;
    Subspace(FieldPtr f, std::size_t ambient_dim);
    static Subspace span(FieldPtr f, std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace whole(FieldPtr f, std::size_t ambient_dim);

    const FieldPtr& field() const { return f_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool contains(const Vec& v) const;
    // Coordinates in the echelon basis; throws UsageError if v is not in the subspace.
    Vec coords(const Vec& v) const;
    Vec from_coords(const Vec& c) const;
    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool contains(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;

private:
    FieldPtr f_;
    std::size_t n_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

struct ValidationReport {
    bool ok = true;
    std::size_t checks = 0;
    std::vector<std::string> violations;  // capped; count is in failures
    std::size_t failures = 0;
    void fail(std::string msg);
    void merge(const ValidationReport& o);
    std::string summary() const;
};

ValidationReport validate_lie(const StructureConstants& sc);
ValidationReport validate_lie(const LieAlgebra& g);

// [A, B] as a subspace.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
Subspace center(const LieAlgebra& g);
// Centralizer of the subspace h in g.
Subspace centralizer(const LieAlgebra& g, const Subspace& h);

enum class SeriesKind { LowerCentral, Derived };
// L_0 = h, then L_k = [L_0, L_{k-1}] or [L^{(k-1)}, L^{(k-1)}]; stops after the first repeated term.
std::vector<Subspace> series(const LieAlgebra& g, const Subspace& h, SeriesKind kind);
bool is_solvable(const LieAlgebra& g, const Subspace& h);
bool is_subalgebra(const LieAlgebra& g, const Subspace& h);
bool is_ideal(const LieAlgebra& g, const Subspace& h);

// The subalgebra h as a standalone algebra in the coordinates of its echelon basis.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& h);

struct Quotient {
    LieAlgebra algebra;
    Subspace complement;  // spanned by the standard basis vectors at non-pivot columns of the ideal
    Matrix projection;    // dim g/I x dim g
    Matrix lift;          // dim g x dim g/I, onto the complement
};
Quotient quotient_map(const LieAlgebra& g, const Subspace& ideal);
LieAlgebra quotient_by(const LieAlgebra& g, const Subspace& ideal);

// Matrices D (column j = D(e_j)) forming the canonical basis of der g.
std::vector<Matrix> derivation_space(const LieAlgebra& g, RowReducer::Backend backend = RowReducer::Backend::Auto);
bool is_derivation(const LieAlgebra& g, const Matrix& d);
// z with ad_z = (ad_x)^2, free coordinates zero; nullopt if (ad_x)^2 is outer.
std::optional<Vec> two_power(const LieAlgebra& g, const Vec& x);

struct LieFingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> lower_central;  // dims of L_0, L_1, ... including the first repeat
    std::vector<std::size_t> derived;
    bool solvable = false;
    std::size_t center_dim = 0;
    bool operator==(const LieFingerprint& o) const = default;
    std::string str() const;
};
LieFingerprint fingerprint(const LieAlgebra& g);

// "a,b,c": dims of L_1, L_2, ... stopping at the first stable term (printed once).
std::string series_string(const std::vector<Subspace>& s);
std::string series_string(const std::vector<std::size_t>& dims);

}  // namespace lie2
