// Cellular free resolutions of monomial ideals: the Y^n cell complex for the
// ideal (x_i y_j)_{i<j}, incidence-function audits, the cellular chain
// complex with monomial coefficients, acyclicity checking over the lcm
// lattice, the Eagon-Northcott comparison complex for the 2 x (n+1)
// determinantal ideal, and the block decomposition of the pushforward of
// O(d) along the second projection of the degenerate diagonal.

#ifndef HOMOCAT_CELLRES_HPP
#define HOMOCAT_CELLRES_HPP

#include "numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace homocat {

// ---------------------------------------------------------------- monomials

// Exponent vector over a fixed variable set.  For the bigraded setting the
// variables are x_0..x_n, y_0..y_n in that order (2(n+1) slots).
using Monomial = std::vector<int>;

Monomial mono_one(int num_vars);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_quot(const Monomial& b, const Monomial& a); // b / a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
int mono_degree(const Monomial& m);
std::vector<std::string> xy_names(int n); // x0..xn, y0..yn
std::string mono_to_string(const Monomial& m, const std::vector<std::string>& names);

// All exponent vectors of total degree `deg` in `num_vars` variables,
// lexicographic order.
std::vector<Monomial> monomials_of_degree(int num_vars, int deg);

struct MonomialIdeal {
    int num_vars = 0;
    std::vector<Monomial> generators; // minimal, pairwise non-dividing
};

// The ideal (x_i y_j : 0 <= i < j <= n) in 2(n+1) variables.
MonomialIdeal xy_ideal(int n);

// ------------------------------------------------------------ cell complex

struct CellFace {
    int id = 0;
    int dim = 0;
    Monomial label;
    // For Y^n faces: strictly increasing index tuple and the row count
    // split; empty/meaningless for hand-built complexes.
    std::vector<int> indices;
    int mu1 = 0;
};

struct CellComplex {
    int num_vars = 0;
    std::vector<CellFace> faces;               // ids are positions
    std::vector<std::vector<int>> by_dim;      // face ids per dimension
    std::map<std::pair<int, int>, int> incidence; // (face, facet) -> +-1

    int dimension() const { return static_cast<int>(by_dim.size()) - 1; }
};

// The complex with one h-face per pair (I, mu1), I a strictly increasing
// (h+2)-tuple in [0, n] and 0 <= mu1 <= h; label = product of x over the
// first mu1+1 indices and y over the rest.  Facets: erase the l-th of the
// first mu1+1 indices (sign (-1)^l, 1-based l, quotient x), or the j-th of
// the remaining ones (sign (-1)^{mu1+j}, quotient y).
CellComplex yn_build(int n);

// Full simplex on the given vertex labels with standard boundary signs.
CellComplex simplex_complex(const std::vector<Monomial>& vertex_labels);

struct AuditResult {
    bool ok = true;
    std::string detail; // first violation, if any
};

// Checks (a) every edge has exactly two vertex facets with signs summing to
// zero against the empty face, and (b) every codim-2 containment has exactly
// two intermediate facets e1, e2 with
// eps(e,e1)eps(e1,e'') + eps(e,e2)eps(e2,e'') = 0.
AuditResult incidence_audit(const CellComplex& X);

// --------------------------------------------------------- graded complexes

struct Term {
    long long coeff = 0;
    Monomial mono;
};
using Entry = std::vector<Term>;               // a polynomial matrix entry
using PolyMatrix = std::vector<std::vector<Entry>>; // rows x cols

struct GradedComplex {
    int num_vars = 0;
    std::vector<long long> ranks; // ranks[h] = rank of F_h, h = 0..len-1
    // diff[0] : F_0 -> R (1 x ranks[0], the augmentation);
    // diff[h] : F_h -> F_{h-1} for h >= 1.
    std::vector<PolyMatrix> diff;
};

// Asserts diff[h] o diff[h+1] = 0 for all h (including the augmentation).
bool composes_to_zero(const GradedComplex& C);

// F_{X,M}: degree-h module spanned by h-faces, differential
// d(e) = sum eps(e,e') (m_e / m_e') e', augmentation v -> m_v.
// Throws if the vertex labels of X are not exactly the generators of M.
GradedComplex cellular_complex(const CellComplex& X, const MonomialIdeal& M);

// True iff X_{<=b} has vanishing reduced rational homology for every b in
// the lcm lattice of the vertex labels.
bool is_resolution(const CellComplex& X, const MonomialIdeal& M);

// "(row, col, entry)" lines, one per nonzero entry, for external checking.
std::string sparse_triples(const PolyMatrix& m,
                           const std::vector<std::string>& names);

// ------------------------------------------------------------ Eagon-Northcott

// Basis of the h-th term: pairs (I, mu1), |I| = h+2, 0 <= mu1 <= h, in the
// same order as the h-faces of yn_build(n).
std::vector<std::pair<std::vector<int>, int>> en_basis(int n, int h);

// The complex K_h = wedge^{h+2} F (x) Sym^h G-dual resolving the ideal of
// 2x2 minors (x_i y_j - x_j y_i); differential: signed contraction against
// x in the first slot and y in the second, both with sign (-1)^{l+1};
// augmentation f_a ^ f_b -> x_a y_b - x_b y_a.
GradedComplex eagon_northcott(int n);

// Rank-nullity exactness audit of 0 -> K_{n-1} -> ... -> K_0 -> I -> 0 in
// every bidegree (a, b) with a <= amax, b <= bmax, by exact sparse rank
// over the rationals.  Generator of K_h with row split mu1 sits in bidegree
// (mu1 + 1, h - mu1 + 1).
bool en_bidegree_exact(int n, int amax, int bmax);

// ------------------------------------------------- degenerate Beilinson data

struct BeilinsonBlock {
    Monomial x_monomial;   // exponent vector in x_0..x_n only (n+1 slots)
    int min_index = 0;     // smallest i with x_i present; n for the unit
    std::vector<int> killed; // {j : j > min_index}: quotient is O/(y_j : j here)
};

struct BeilinsonObject {
    int n = 0, d = 0;
    std::vector<BeilinsonBlock> blocks;
    // (i, multiplicity): summand supported on an (n-i-1)-plane, i = -1..n-1,
    // zero multiplicities omitted.
    std::vector<std::pair<int, Int>> summands;
    bool hilbert_ok = false; // audited in y-degrees 0..d+n+2
};

// Decomposition of the pushforward of O(d) restricted to the degenerate
// diagonal: one block per degree-d monomial m in x, quotient ring
// k[y]/(y_j : j > min index of m).
BeilinsonObject beilinson_degenerate_object(int n, int d);

// Hilbert function of the block decomposition in y-degree t.
Int beilinson_hf(const BeilinsonObject& obj, int t);
// Closed form: sum over blocks grouped by plane dimension.
Int beilinson_hf_closed(int n, int d, int t);

// Exact cross-check: the y-degree-t slice of the cokernel of the actual
// presentation matrix (built from the cellular resolution's first map) has
// the dimension predicted by the block decomposition.  Intended for small
// n, d only.
bool beilinson_image_rank_check(int n, int d, int t);

// Pushforward strand audit: tensor the cellular resolution of the quotient
// by xy_ideal(n) with O(d) in x, take x-sections termwise, and check the
// resulting complex of y-graded modules is exact away from position -1
// (i.e. the pushforward is a sheaf, not a complex), per y-degree t <= tmax.
bool pushforward_strand_audit(int n, int d, int tmax);

// Stalk dimensions of the n = 1 object: (at the point {y_1 = 0}, elsewhere).
std::pair<Int, Int> p1_stalk_dims(int d);

struct BlockMap {
    Monomial source;      // x-monomial of the source block, degree e
    Monomial target;      // x_k * source, degree e+1
    bool identity = false; // identity iff x_k occurs in the source monomial
};

// The block maps of multiplication by x_k from the degree-e object to the
// degree-(e+1) object: identity onto the block of x_k*m iff x_k | m, else
// the canonical quotient surjection.
std::vector<BlockMap> beilinson_degenerate_morphism(int n, int e, int k);

} // namespace homocat

#endif
