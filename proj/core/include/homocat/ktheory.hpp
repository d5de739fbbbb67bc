// Euler bilinear form, Gram matrices in exceptional bases, K-level mutations
// with the braid-group action, dual sequences, and Kronecker-product Gram
// matrices for product varieties.

#ifndef HOMOCAT_KTHEORY_HPP
#define HOMOCAT_KTHEORY_HPP

#include "bott.hpp"

#include <vector>

namespace homocat {

using GramMatrix = std::vector<std::vector<Int>>;
using KClass = std::vector<Int>;

enum class Side { Left, Right };

struct MutationState {
    // Classes expressed in the fixed initial exceptional basis; the ambient
    // Euler form (gram of the initial basis) never changes.
    std::vector<KClass> classes;
    GramMatrix gram;

    bool operator==(const MutationState&) const = default;
};

// G[i][j] = chi(E_i, E_j) = alternating sum of Ext dims, via ext_table.
GramMatrix gram_from_collection(const Geometry& geom,
                                const std::vector<GLWeight>& labels);

// chi evaluated on coordinate vectors: u^T G v.
Int chi(const GramMatrix& gram, const KClass& u, const KClass& v);

// Fresh state: classes = standard basis vectors.
MutationState initial_state(const GramMatrix& gram);

// Mutate the exceptional pair at positions (i, i+1), 0-based i:
//   left:  (a, b) -> (chi(a,b) a - b, a)
//   right: (a, b) -> (b, chi(a,b) b - a)
MutationState mutate(const MutationState& s, int i, Side dir);

// Semi-orthonormality of the tracked classes: chi(c_i, c_i) = 1 and
// chi(c_j, c_i) = 0 for j > i.
bool semi_orthonormal(const MutationState& s);

// Iterated-mutation dual sequences:
//   right dual: E_i-dual = L_{E_1} ... L_{E_{n-i}} E_{n-i+1}
//   left dual:  dual-E_i = R_{E_n} ... R_{E_{n-i+2}} E_{n-i+1}
std::vector<KClass> dual_sequence(const MutationState& s, Side side);

// Kronecker product in lexicographic block order: entry for the pair
// ((i1,i2),(j1,j2)) is gx[i1][j1] * gy[i2][j2].
GramMatrix kron_gram(const GramMatrix& gx, const GramMatrix& gy);

// Coordinates of Sigma^target R in the given exceptional basis, obtained by
// solving the unit-upper-triangular system G x = (chi(E_j, target))_j.
KClass kclass_in_basis(const Geometry& geom, const std::vector<GLWeight>& basis,
                       const GramMatrix& gram, const GLWeight& target);

Int det_unimodular_check(const GramMatrix& g); // determinant (exact)

} // namespace homocat

#endif
