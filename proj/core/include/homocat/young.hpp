// Schur-functor label arithmetic for GL(k): tuples with possibly negative
// entries, Littlewood-Richardson tensor decomposition, dualization, and
// determinant twists.

#ifndef HOMOCAT_YOUNG_HPP
#define HOMOCAT_YOUNG_HPP

#include "numeric.hpp"

#include <map>
#include <vector>

namespace homocat {

// Non-increasing integer tuple of fixed length k; negative entries allowed.
using GLWeight = std::vector<long long>;

using LRDecomposition = std::map<GLWeight, long long>;

bool is_gl_weight(const GLWeight& v);

// Multiplicities of Sigma^nu in Sigma^lambda (x) Sigma^mu for GL(k);
// diagrams with more than k rows are discarded.  Labels with negative
// entries are handled by shifting both factors to genuine Young diagrams
// via det_twist, decomposing, and shifting back.
LRDecomposition lr_decompose(const GLWeight& lambda, const GLWeight& mu, int k);

// (-lambda_k, ..., -lambda_1): label of the dual bundle, an involution.
GLWeight dualize(const GLWeight& lambda);

// Adds c to every entry: label of Sigma^lambda R (x) (top wedge of R)^c.
GLWeight det_twist(const GLWeight& lambda, long long c);

} // namespace homocat

#endif
