#pragma once

#include <functional>
#include <vector>

#include "lie2/superalgebra.hpp"

namespace lie2::detail {

using BracketFn = std::function<Vec(const Vec&, const Vec&)>;

// Superalgebra on the given even and odd vectors of an ambient space with bracket br.
// Throws UsageError if the vectors are dependent, the span is not closed, or parity breaks.
LieSuperalgebra build_super(FieldPtr f, std::size_t amb_dim, const std::vector<Vec>& even, const std::vector<Vec>& odd,
                            const BracketFn& br, const std::vector<Vec>& odd_squares);

}  // namespace lie2::detail
