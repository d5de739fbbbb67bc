// Classical root systems A/B/C/D in epsilon-coordinates, Weyl group elements
// as signed permutations, the shifted dominance-reduction step that drives
// Bott-style cohomology computations, and the Weyl dimension formula.
//
// Conventions:
//  * Family A with rank r is GL(r)-style: weights are length-r vectors, the
//    Weyl group is S_r with no sign changes, and rho is normalized to
//    (r-1, r-2, ..., 0).
//  * B/C/D use the genuine half-sum of positive roots for rho.
//  * A Weyl element w acts by (w v)_i = signs_i * v_{perm_i}.
//  * length(w) = #{ positive roots alpha : w(alpha) is a negative root }.

#ifndef HOMOCAT_ROOTSYS_HPP
#define HOMOCAT_ROOTSYS_HPP

#include "numeric.hpp"

#include <stdexcept>
#include <vector>

namespace homocat {

enum class Family { A, B, C, D };

struct RootSystem {
    Family family;
    int rank;
};

using Weight = std::vector<Rat>;

struct WeylElement {
    std::vector<int> perm;   // 0-based permutation of {0..rank-1}
    std::vector<int> signs;  // entries +1 / -1; all +1 for family A

    bool operator==(const WeylElement& o) const = default;
};

struct ReductionOutcome {
    bool singular = false;
    WeylElement w;      // only meaningful when !singular
    int length = 0;     // l(w)
    Weight dominant;    // w(input)
};

// --- Weyl element algebra -------------------------------------------------

WeylElement identity_element(int rank);
bool is_identity(const WeylElement& w);
Weight apply(const WeylElement& w, const Weight& v);
// (a * b)(v) = a(b(v))
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);

// --- Root system data -----------------------------------------------------

std::vector<Weight> positive_roots(const RootSystem& rs);
std::vector<Weight> simple_roots(const RootSystem& rs);
Weight rho(const RootSystem& rs);

// Number of positive roots sent to negative roots by w.
int length(const RootSystem& rs, const WeylElement& w);

// Full Weyl group enumeration (used by the parabolic machinery and by
// exhaustive oracles in tests; practical for rank <= 7).
std::vector<WeylElement> weyl_group(const RootSystem& rs);

// --- Dominance reduction ----------------------------------------------------

// Given delta (typically lambda + rho), either report that some nontrivial
// Weyl element fixes delta (the singular case), or return the unique w with
// w(delta) strictly dominant-regular together with its length.
ReductionOutcome dominant_reduce(const RootSystem& rs, const Weight& delta);

// Is nu a dominant weight for rs (used as the weyl_dim precondition)?
bool is_dominant(const RootSystem& rs, const Weight& nu);

// prod_{alpha > 0} <nu + rho, alpha> / <rho, alpha>, exact arithmetic.
Int weyl_dim(const RootSystem& rs, const Weight& nu);

// Convenience: exact rational dot product of two weights.
Rat dot(const Weight& a, const Weight& b);

} // namespace homocat

#endif
