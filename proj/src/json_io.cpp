#include "lie2/json_io.hpp"

#include <json.hpp>

#include "lie2/error.hpp"

namespace lie2 {

namespace {

using json = nlohmann::json;

json parse_doc(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.contains(key)) throw UsageError(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad value for '") + key + "': " + e.what());
    }
}

Elem coeff(const Field& f, const json& c) {
    if (c.is_number_unsigned() || c.is_number_integer()) {
        auto v = c.get<long long>();
        if (v < 0 || v >= static_cast<long long>(f.size()))
            throw UsageError("coefficient " + c.dump() + " is not in " + f.name());
        return static_cast<Elem>(v);
    }
    if (c.is_string()) return f.parse_elem(c.get<std::string>());
    throw UsageError("coefficient must be an integer or a string");
}

std::size_t index(const json& v, std::size_t bound, const char* what) {
    if (!v.is_number_unsigned() && !v.is_number_integer()) throw UsageError(std::string(what) + " index must be an integer");
    auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= bound)
        throw UsageError(std::string(what) + " index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i);
}

const json& rows(const json& j, const char* key, std::size_t width) {
    static const json empty = json::array();
    if (!j.contains(key)) return empty;
    const json& a = j.at(key);
    if (!a.is_array()) throw UsageError(std::string("'") + key + "' must be an array");
    for (const auto& r : a)
        if (!r.is_array() || r.size() != width)
            throw UsageError(std::string("'") + key + "' rows must have " + std::to_string(width) + " entries");
    return a;
}

std::vector<std::string> labels_of(const json& j, std::size_t dim) {
    if (!j.contains("labels")) return {};
    auto l = get_field<std::vector<std::string>>(j, "labels");
    if (!l.empty() && l.size() != dim) throw UsageError("labels must match the dimension");
    return l;
}

json coeff_json(Elem c) { return c; }

}  // namespace

std::string lie_to_json(const LieAlgebra& g) {
    json j;
    j["field"] = g.field()->name();
    j["dim"] = g.dim();
    json e = json::array();
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = a + 1; b < g.dim(); ++b)
            for (const Term& t : g.basis_bracket(a, b)) e.push_back({a, b, t.index, coeff_json(t.coeff)});
    j["entries"] = e;
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j.dump();
}

LieAlgebra lie_from_json(std::string_view text) {
    json j = parse_doc(text);
    FieldPtr f = Field::parse(get_field<std::string>(j, "field"));
    const auto dim = get_field<std::size_t>(j, "dim");
    StructureConstants sc(f, dim);
    for (const auto& r : rows(j, "entries", 4)) {
        std::size_t a = index(r[0], dim, "entry"), b = index(r[1], dim, "entry"), k = index(r[2], dim, "entry");
        if (a == b) throw UsageError("[e_i, e_i] must be 0");
        Elem c = coeff(*f, r[3]);
        sc.add(a, b, k, c);
        sc.add(b, a, k, c);
    }
    return LieAlgebra(std::move(sc), labels_of(j, dim));
}

std::string super_to_json(const LieSuperalgebra& s) {
    const std::size_t d0 = s.dim_even(), d1 = s.dim_odd();
    json j;
    j["field"] = s.field()->name();
    j["dim_even"] = d0;
    j["dim_odd"] = d1;
    json ee = json::array(), eo = json::array(), oo = json::array(), sq = json::array();
    for (std::size_t a = 0; a < s.dim(); ++a) {
        for (std::size_t b = a + 1; b < s.dim(); ++b) {
            for (const Term& t : s.bracket_basis(a, b)) {
                const bool oa = s.is_odd_index(a), ob = s.is_odd_index(b);
                if (!oa && !ob) ee.push_back({a, b, t.index, coeff_json(t.coeff)});
                else if (!oa && ob) eo.push_back({a, b - d0, t.index - d0, coeff_json(t.coeff)});
                else oo.push_back({a - d0, b - d0, t.index, coeff_json(t.coeff)});
            }
        }
    }
    for (std::size_t i = 0; i < d1; ++i)
        for (const Term& t : s.square_basis(i)) sq.push_back({i, t.index, coeff_json(t.coeff)});
    j["sc_ee"] = ee;
    j["sc_eo"] = eo;
    j["sc_oo"] = oo;
    j["squares"] = sq;
    if (!s.labels.empty()) j["labels"] = s.labels;
    return j.dump();
}

LieSuperalgebra super_from_json(std::string_view text) {
    json j = parse_doc(text);
    FieldPtr f = Field::parse(get_field<std::string>(j, "field"));
    const auto d0 = get_field<std::size_t>(j, "dim_even");
    const auto d1 = get_field<std::size_t>(j, "dim_odd");
    LieSuperalgebra s(f, d0, d1);
    std::vector<SparseVec> table(s.dim() * s.dim());
    auto put = [&](std::size_t a, std::size_t b, std::size_t k, Elem c) {
        add_term(table[a * s.dim() + b], k, c);
        if (a != b) add_term(table[b * s.dim() + a], k, c);
    };
    for (const auto& r : rows(j, "sc_ee", 4)) {
        std::size_t a = index(r[0], d0, "sc_ee"), b = index(r[1], d0, "sc_ee"), k = index(r[2], d0, "sc_ee");
        if (a == b) throw UsageError("[e_i, e_i] must be 0");
        put(a, b, k, coeff(*f, r[3]));
    }
    for (const auto& r : rows(j, "sc_eo", 4)) {
        std::size_t a = index(r[0], d0, "sc_eo"), b = index(r[1], d1, "sc_eo"), k = index(r[2], d1, "sc_eo");
        put(a, d0 + b, d0 + k, coeff(*f, r[3]));
    }
    for (const auto& r : rows(j, "sc_oo", 4)) {
        std::size_t a = index(r[0], d1, "sc_oo"), b = index(r[1], d1, "sc_oo"), k = index(r[2], d0, "sc_oo");
        if (a == b) throw UsageError("[o_i, o_i] is given by squares");
        put(d0 + a, d0 + b, k, coeff(*f, r[3]));
    }
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = a + 1; b < s.dim(); ++b) s.set_bracket(a, b, table[a * s.dim() + b]);
    std::vector<SparseVec> sq(d1);
    for (const auto& r : rows(j, "squares", 3)) {
        std::size_t i = index(r[0], d1, "squares"), k = index(r[1], d0, "squares");
        add_term(sq[i], k, coeff(*f, r[2]));
    }
    for (std::size_t i = 0; i < d1; ++i) s.set_square(i, sq[i]);
    s.labels = labels_of(j, s.dim());
    return s;
}

}  // namespace lie2
