#pragma once

#include <gmpxx.h>

#include <vector>

#include "torusknot/farey.hpp"

namespace torusknot {

using IntMatrix = std::vector<std::vector<Int>>;
using RatVector = std::vector<mpq_class>;
using RatMatrix = std::vector<RatVector>;

mpq_class determinant(const IntMatrix& m);

// Signature of a symmetric matrix by congruence diagonalization over Q.
int signature(const IntMatrix& m);

// Solves m x = b exactly; throws std::domain_error when m is singular.
RatVector solve(const IntMatrix& m, const std::vector<Int>& b);

// Exact inverse; throws std::domain_error when m is singular.
RatMatrix inverse(const IntMatrix& m);

RatVector multiply(const RatMatrix& m, const std::vector<Int>& v);

mpq_class dot(const std::vector<Int>& a, const RatVector& b);

}  // namespace torusknot
