// The four dominance-reduction cohomology engines:
//  * absolute cohomology of Sigma^gamma R on a type-A Grassmannian,
//  * absolute cohomology of Sigma^lambda R on a type-C isotropic Grassmannian,
//  * relative direct images along a full-flag bundle fiber (dotted S_k action),
//  * general single-irreducible G/P cohomology,
// plus Ext-table assembly by Littlewood-Richardson + the matching engine.

#ifndef HOMOCAT_BOTT_HPP
#define HOMOCAT_BOTT_HPP

#include "parab.hpp"
#include "rootsys.hpp"
#include "young.hpp"

#include <map>
#include <vector>

namespace homocat {

struct CohomologyResult {
    bool zero = true;
    int degree = 0;
    Weight highest_weight; // dominant weight of the single cohomology group
    Int dim;               // its dimension
};

struct ExtTable {
    // degree -> list of (dominant highest weight, multiplicity)
    std::map<int, std::vector<std::pair<Weight, long long>>> groups;
    // degree -> total dimension (multiplicities times weyl_dim)
    std::map<int, Int> total_dim;

    bool empty() const { return groups.empty(); }
};

struct DirectImageResult {
    bool zero = true;
    int degree = 0;
    // Label mu of the direct image Sigma^mu R-dual (non-increasing); the
    // Sigma-of-R form is dualize(label), a downstream normalization.
    GLWeight label;
    int l_twist = 0; // 1 iff the input weight was half-odd-integral
};

struct Geometry {
    enum class Kind { GrassA, IGrassC };
    Kind kind;
    int k = 0;
    int n = 0; // GrassA: R has rank k inside an n-space;
               // IGrassC: rank k isotropic inside a 2n-space
};

// H^*(Grass(k, n), Sigma^gamma R) via reduction of (0^{n-k}, gamma) + rho.
CohomologyResult coh_grass_A(int k, int n, const GLWeight& gamma);

// H^*(IGrass(k, 2n), Sigma^lambda R) via the type-C weight
// mu = (-lambda_k, ..., -lambda_1, 0, ..., 0).
CohomologyResult coh_igrass_C(int k, int n, const GLWeight& lambda);

// Direct images R^* pi_* L(lambda) along a rank-k full-flag bundle fiber,
// computed by the dotted S_k action with rho = (k-1, ..., 0).  Weights must
// be all-integral or all-half-odd; in the latter case 1/2 is subtracted from
// every coordinate and l_twist is set to 1.
DirectImageResult relative_bott_flag(int k, const Weight& lambda);

// General absolute engine on G/P for a single irreducible bundle with
// Levi-dominant weight lambda.
CohomologyResult general_bott_gp(const ParabolicSpec& p, const Weight& lambda);

// Ext^*(Sigma^a R, Sigma^b R) assembled from lr_decompose(b (x) dualize(a))
// fed through the engine matching the geometry.
ExtTable ext_table(const Geometry& geom, const GLWeight& a, const GLWeight& b);

// Euler characteristic: alternating sum of total dims of an ExtTable.
Int euler_characteristic(const ExtTable& t);

} // namespace homocat

#endif
