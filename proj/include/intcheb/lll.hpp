#pragma once

// Exact integral LLL reduction (delta = 3/4) driven by a Gram matrix.

#include <vector>

#include "intcheb/poly.hpp"

namespace intcheb {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Reduces the lattice whose basis has the given positive definite integer
/// Gram matrix. Row i of the result holds the coordinates of the i-th reduced
/// vector in the input basis; the transformation is unimodular.
IntMatrix lll_gram(const IntMatrix& gram);
/// Same, after clearing denominators of a rational Gram matrix.
IntMatrix lll_gram(const RatMatrix& gram);

/// LLL on explicit integer row vectors under the Euclidean inner product.
/// Rows must be linearly independent. Returns the reduced rows.
IntMatrix lll_rows(const IntMatrix& rows);

/// x^T G y
Rational quadratic_form(const RatMatrix& gram, const std::vector<Integer>& x, const std::vector<Integer>& y);

}  // namespace intcheb
