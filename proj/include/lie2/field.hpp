#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lie2 {

// Elements of GF(2^k) are bit vectors of polynomial residues: bit i is the coefficient of t^i.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static constexpr int kMaxDegree = 16;

    // Cached per degree, using the built-in modulus table.
    static FieldPtr gf2k(int k);
    static FieldPtr gf2() { return gf2k(1); }
    // Custom modulus (bit vector including the leading t^k term). Rejects reducible polynomials.
    static FieldPtr with_modulus(int k, std::uint32_t modulus);
    // "gf2", "gf4", "gf8", "gf16", ..., "gf2e<k>".
    static FieldPtr parse(std::string_view text);
    // Modulus from the built-in table for degree k.
    static std::uint32_t default_modulus(int k);

    int degree() const { return k_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t size() const { return 1u << k_; }
    bool is_gf2() const { return k_ == 1; }
    std::string name() const;

    static Elem add(Elem a, Elem b) { return a ^ b; }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem sqr(Elem a) const { return mul(a, a); }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    // Unique b with b^2 = a, namely a^(2^(k-1)).
    Elem sqrt(Elem a) const;
    // Absolute trace to GF(2): a + a^2 + ... + a^(2^(k-1)).
    int trace(Elem a) const;
    // Smallest (as a bit vector) d with d^2 + d = c; nullopt when Tr(c) = 1.
    std::optional<Elem> artin_schreier(Elem c) const;

    Elem generator() const { return exp_[1]; }
    bool contains(Elem a) const { return a < size(); }
    void check(Elem a) const;

    // "0", "1", "t", "t^2+t+1"; GF(2) elements print as 0/1.
    std::string format(Elem a) const;
    // Accepts the format() syntax or a plain integer bit vector.
    Elem parse_elem(std::string_view text) const;

    // Embedding of this field into GF(2^(2k)), the escalation target for Artin-Schreier roots.
    struct Extension {
        FieldPtr big;
        std::vector<Elem> image;  // image of each element of the small field
    };
    const Extension& doubled() const;

private:
    Field(int k, std::uint32_t modulus);

    int k_;
    std::uint32_t modulus_;
    std::vector<Elem> exp_;           // length 2*(q-1), doubled to avoid a modulo in mul
    std::vector<std::uint32_t> log_;  // log_[0] unused
    mutable std::unique_ptr<Extension> ext_;
    mutable std::once_flag ext_flag_;
};

// Polynomial multiplication and reduction over GF(2) on bit vectors; exposed for tests.
std::uint64_t gf2_poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, int k);
bool gf2_poly_irreducible(std::uint64_t poly, int k);

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr f, Elem v);

    const FieldPtr& field() const { return f_; }
    Elem value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const { return *this + o; }
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement sqrt() const;
    bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }
    std::string str() const;

private:
    void same_field(const FieldElement& o) const;
    FieldPtr f_;
    Elem v_ = 0;
};

}  // namespace lie2
