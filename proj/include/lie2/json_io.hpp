#pragma once

#include <string>
#include <string_view>

#include "lie2/liealg.hpp"
#include "lie2/superalgebra.hpp"

namespace lie2 {

// Lie algebra:
//   {"field": "gf2", "dim": 3, "entries": [[i, j, k, c], ...], "labels": [...]}
// meaning [e_i, e_j] has coefficient c at e_k; each unordered pair once, i != j.
// Coefficients are field elements as integers (bit vectors) or strings like "t^2+1".
std::string lie_to_json(const LieAlgebra& g);
// Throws UsageError on malformed input; entries for the same (pair, k) accumulate.
LieAlgebra lie_from_json(std::string_view text);

// Lie superalgebra, indices local to each parity block:
//   {"field", "dim_even", "dim_odd",
//    "sc_ee": [[i, j, k, c]]  [even_i, even_j] -> even_k
//    "sc_eo": [[i, j, k, c]]  [even_i, odd_j]  -> odd_k
//    "sc_oo": [[i, j, k, c]]  [odd_i, odd_j]   -> even_k, i != j
//    "squares": [[i, k, c]]   odd_i^2          -> even_k
//    "labels": [...]}
std::string super_to_json(const LieSuperalgebra& s);
LieSuperalgebra super_from_json(std::string_view text);

}  // namespace lie2
