// Enumeration of generating-set candidates on (isotropic) Grassmannians,
// the 90-weight heart scan on the rank-3 odd-orthogonal isotropic
// Grassmannian, and verification of exceptional / strong / poset conditions
// for ordered bundle collections.

#ifndef HOMOCAT_EXCSEQ_HPP
#define HOMOCAT_EXCSEQ_HPP

#include "bott.hpp"

#include <set>
#include <string>
#include <vector>

namespace homocat {

// Canonical bundle label Sigma^schur R (x) L^{l_twist}, where L is the
// square root of the Plucker line bundle O(1) = (top wedge R)-dual; the
// l_twist component is only ever nonzero for the spin-geometry scan.
struct BundleLabel {
    GLWeight schur;
    int l_twist = 0;

    auto operator<=>(const BundleLabel&) const = default;
};

std::string label_to_string(const BundleLabel& b);

enum class VerifyMode { Sequence, Poset, VeryStrongPoset };

struct Offender {
    int i = 0, j = 0;   // 0-based positions in the input list, pair (E_i, E_j)
    int degree = 0;     // offending Ext degree
    Int dim;            // its dimension
};

struct VerificationReport {
    bool is_exceptional_each = false;
    bool is_exceptional_sequence = false;
    bool is_strong = false;
    bool admissible_poset_ok = false;
    std::vector<Offender> offenders;
    // Necessary condition for completeness: list length vs Schubert count.
    long long labels_count = 0;
    long long schubert_cells = 0;
    bool completeness_necessary_ok = false;

    bool passes(VerifyMode mode) const;
};

// All Young diagrams with at most `rows` rows and at most `cols` columns,
// as GL weights of length `rows`.
std::vector<GLWeight> partitions_in_box(int rows, int cols);

// All diagrams nu with (columns of nu) <= 2n-k and
// (rows of nu) >= (columns of nu) - 2(n-k), as labels Sigma^nu R.
std::vector<BundleLabel> enumerate_thm333(int k, int n);

// The full box of integer k-tuples with -2n+2j-1 <= lambda_j <= 0;
// cardinality prod_j (2n-2j+2).
std::vector<Weight> enumerate_sharp(int k, int n);

// The 9 x 5 x 2 = 90 half-integral weights obtained by summing one member
// of each of the three fixed generator lists for the rank-3 spin geometry.
std::vector<Weight> enumerate_hearts_b3();

// Push every heart weight through relative_bott_flag(3, .), convert each
// nonzero image to its canonical (Sigma-of-R, l_twist) form, deduplicate.
std::set<BundleLabel> igrass37_scan();

// Verify an ordered collection of Sigma^schur R labels on a geometry where
// ext_table is available.  Completeness is never claimed; only the numeric
// necessary condition (length vs Schubert count) is reported.
VerificationReport verify_collection(const Geometry& geom,
                                     const std::vector<GLWeight>& labels,
                                     VerifyMode mode);

// Componentwise criterion for Hom(Sigma^lambda R, Sigma^mu R) != 0 on a
// type-A Grassmannian.
bool hom_criterion_grass(const GLWeight& lambda, const GLWeight& mu);

} // namespace homocat

#endif
