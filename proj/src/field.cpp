#include "lie2/field.hpp"

#include <array>
#include <charconv>
#include <map>
#include <mutex>

#include "lie2/error.hpp"

namespace lie2 {

namespace {

// Irreducible (and primitive) moduli, bit i = coefficient of t^i.
constexpr std::array<std::uint32_t, 17> kModuli = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x5B,   0x83,    0x11D,
    0x211,   0x46F,  0x805,  0x10EB, 0x201B, 0x40A9, 0x8035, 0x1002D,
};

int bit_length(std::uint64_t v) {
    int n = 0;
    while (v) {
        ++n;
        v >>= 1;
    }
    return n;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    int dm = bit_length(m) - 1;
    for (int d = bit_length(a) - 1; d >= dm; --d)
        if (a >> d & 1) a ^= m << (d - dm);
    return a;
}

}  // namespace

std::uint64_t gf2_poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, int k) {
    std::uint64_t r = 0;
    for (int i = 0; i < k; ++i)
        if (b >> i & 1) r ^= a << i;
    return poly_mod(r, modulus);
}

bool gf2_poly_irreducible(std::uint64_t poly, int k) {
    if (bit_length(poly) != k + 1) return false;
    if (k == 1) return true;
    // Rabin-style check: t^(2^k) = t mod poly and gcd(t^(2^(k/p)) - t, poly) = 1 for primes p | k.
    auto frob = [&](int times) {
        std::uint64_t x = 2;
        for (int i = 0; i < times; ++i) x = gf2_poly_mulmod(x, x, poly, k);
        return x;
    };
    if (frob(k) != 2) return false;
    auto gcd = [](std::uint64_t a, std::uint64_t b) {
        while (b) {
            a = poly_mod(a, b);
            std::swap(a, b);
        }
        return a;
    };
    for (int p = 2; p <= k; ++p) {
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime || k % p) continue;
        if (gcd(poly, frob(k / p) ^ 2) != 1) return false;
    }
    return true;
}

Field::Field(int k, std::uint32_t modulus) : k_(k), modulus_(modulus) {
    const std::uint32_t q = 1u << k;
    const std::uint32_t order = q - 1;
    // Find a generator of the multiplicative group, trying t first.
    Elem g = 0;
    for (Elem cand = (k == 1 ? 1 : 2); cand < q; ++cand) {
        Elem x = cand;
        std::uint32_t ord = 1;
        while (x != 1) {
            x = static_cast<Elem>(gf2_poly_mulmod(x, cand, modulus, k));
            ++ord;
        }
        if (ord == order) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw InternalError("no multiplicative generator found");
    exp_.assign(2 * order + 1, 0);
    log_.assign(q, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = exp_[i + order] = x;
        log_[x] = i;
        x = static_cast<Elem>(gf2_poly_mulmod(x, g, modulus, k));
    }
    exp_[2 * order] = 1;
}

FieldPtr Field::gf2k(int k) {
    static std::mutex mu;
    static std::map<int, FieldPtr> cache;
    if (k < 1 || k > kMaxDegree) throw UsageError("field degree must be in 1.." + std::to_string(kMaxDegree));
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    auto f = with_modulus(k, kModuli[k]);
    cache[k] = f;
    return f;
}

std::uint32_t Field::default_modulus(int k) {
    if (k < 1 || k > kMaxDegree) throw UsageError("field degree must be in 1.." + std::to_string(kMaxDegree));
    return kModuli[k];
}

FieldPtr Field::with_modulus(int k, std::uint32_t modulus) {
    if (k < 1 || k > kMaxDegree) throw UsageError("field degree must be in 1.." + std::to_string(kMaxDegree));
    if (!gf2_poly_irreducible(modulus, k)) throw UsageError("modulus is not irreducible of degree " + std::to_string(k));
    return FieldPtr(new Field(k, modulus));
}

FieldPtr Field::parse(std::string_view text) {
    auto num = [&](std::string_view s) {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("bad field name: " + std::string(text));
        return v;
    };
    if (text.rfind("gf2e", 0) == 0) return gf2k(num(text.substr(4)));
    if (text.rfind("gf", 0) == 0) {
        int q = num(text.substr(2));
        for (int k = 1; k <= kMaxDegree; ++k)
            if (q == (1 << k)) return gf2k(k);
    }
    throw UsageError("bad field name: " + std::string(text) + " (expected gf2, gf4, gf8, ... or gf2e<k>)");
}

std::string Field::name() const {
    return k_ == 1 ? "gf2" : "gf2e" + std::to_string(k_);
}

void Field::check(Elem a) const {
    if (a >= size()) throw UsageError("element out of range for " + name());
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero");
    const std::uint32_t order = size() - 1;
    return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = size() - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

Elem Field::sqrt(Elem a) const {
    return pow(a, std::uint64_t{1} << (k_ - 1));
}

int Field::trace(Elem a) const {
    Elem s = 0, x = a;
    for (int i = 0; i < k_; ++i) {
        s ^= x;
        x = sqr(x);
    }
    return static_cast<int>(s & 1);
}

std::optional<Elem> Field::artin_schreier(Elem c) const {
    // d -> d^2 + d is GF(2)-linear; solve the k x k bit system with column i = image of t^i.
    std::vector<std::uint32_t> cols(k_);
    for (int i = 0; i < k_; ++i) {
        Elem ti = 1u << i;
        cols[i] = sqr(ti) ^ ti;
    }
    // Rows of the augmented system: row r has bit i = (image of t^i)_r, bit k = c_r.
    std::vector<std::uint32_t> rows(k_, 0);
    for (int r = 0; r < k_; ++r) {
        for (int i = 0; i < k_; ++i)
            if (cols[i] >> r & 1) rows[r] |= 1u << i;
        if (c >> r & 1) rows[r] |= 1u << k_;
    }
    std::vector<int> pivot_row(k_, -1);
    int rank = 0;
    for (int col = 0; col < k_; ++col) {
        int p = -1;
        for (int r = rank; r < k_; ++r)
            if (rows[r] >> col & 1) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[p], rows[rank]);
        for (int r = 0; r < k_; ++r)
            if (r != rank && (rows[r] >> col & 1)) rows[r] ^= rows[rank];
        pivot_row[col] = rank++;
    }
    for (int r = rank; r < k_; ++r)
        if (rows[r] >> k_ & 1) return std::nullopt;
    Elem d = 0;
    for (int col = 0; col < k_; ++col)
        if (pivot_row[col] >= 0 && (rows[pivot_row[col]] >> k_ & 1)) d |= 1u << col;
    // The two roots differ by 1; return the smaller bit vector.
    return std::min(d, d ^ 1u);
}

std::string Field::format(Elem a) const {
    if (a == 0) return "0";
    std::string s;
    for (int i = k_ - 1; i >= 0; --i) {
        if (!(a >> i & 1)) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "t";
        else
            s += "t^" + std::to_string(i);
    }
    return s;
}

Elem Field::parse_elem(std::string_view text) const {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t += ch;
    if (t.empty()) throw UsageError("empty field element");
    if (t.find('t') == std::string::npos) {
        unsigned long v = 0;
        try {
            v = std::stoul(t, nullptr, 0);
        } catch (const std::exception&) {
            throw UsageError("bad field element: " + t);
        }
        if (v >= size()) throw UsageError("field element out of range: " + t);
        return static_cast<Elem>(v);
    }
    Elem a = 0;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t end = t.find('+', pos);
        if (end == std::string::npos) end = t.size();
        std::string term = t.substr(pos, end - pos);
        int e = -1;
        if (term == "1")
            e = 0;
        else if (term == "t")
            e = 1;
        else if (term.rfind("t^", 0) == 0)
            e = std::stoi(term.substr(2));
        if (e < 0 || e >= k_) throw UsageError("bad field element term: " + term);
        a ^= 1u << e;
        pos = end + 1;
    }
    return a;
}

const Field::Extension& Field::doubled() const {
    std::call_once(ext_flag_, [this] {
        if (2 * k_ > kMaxDegree) throw ResourceError("cannot escalate " + name() + ": degree cap exceeded");
        auto ext = std::make_unique<Extension>();
        ext->big = gf2k(2 * k_);
        const Field& B = *ext->big;
        // A root r of our modulus inside the big field; t maps to r.
        Elem root = 0;
        bool found = false;
        for (Elem r = 0; r < B.size() && !found; ++r) {
            Elem acc = 0;
            for (int i = k_; i >= 0; --i) acc = B.mul(acc, r) ^ ((modulus_ >> i) & 1);
            if (acc == 0) {
                root = r;
                found = true;
            }
        }
        if (!found) throw InternalError("modulus has no root in the doubled field");
        ext->image.assign(size(), 0);
        for (Elem a = 0; a < size(); ++a) {
            Elem img = 0, p = 1;
            for (int i = 0; i < k_; ++i) {
                if (a >> i & 1) img ^= p;
                p = B.mul(p, root);
            }
            ext->image[a] = img;
        }
        ext_ = std::move(ext);
    });
    return *ext_;
}

FieldElement::FieldElement(FieldPtr f, Elem v) : f_(std::move(f)), v_(v) {
    if (!f_) throw UsageError("field element without a field");
    f_->check(v_);
}

void FieldElement::same_field(const FieldElement& o) const {
    if (f_ != o.f_) throw UsageError("mixed fields in arithmetic");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    same_field(o);
    return {f_, v_ ^ o.v_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    same_field(o);
    return {f_, f_->mul(v_, o.v_)};
}

FieldElement FieldElement::inv() const { return {f_, f_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
FieldElement FieldElement::sqrt() const { return {f_, f_->sqrt(v_)}; }
std::string FieldElement::str() const { return f_->format(v_); }

}  // namespace lie2
