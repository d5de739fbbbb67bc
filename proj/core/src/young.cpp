#include "homocat/young.hpp"

#include <algorithm>
#include <stdexcept>

namespace homocat {

bool is_gl_weight(const GLWeight& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

GLWeight dualize(const GLWeight& lambda) {
    GLWeight out(lambda.rbegin(), lambda.rend());
    for (auto& e : out) e = -e;
    return out;
}

GLWeight det_twist(const GLWeight& lambda, long long c) {
    GLWeight out = lambda;
    for (auto& e : out) e += c;
    return out;
}

namespace {

// Enumerate fillings of nu/lambda by boxes labeled 1..m (m = rows of mu),
// label i used mu_i times, one horizontal strip per label, subject to the
// lattice-word condition with the reading order "right to left, top down".
// State: shape = current diagram (length k), cum[i][r] = number of boxes
// labeled <= recorded cumulatively per row.
struct LRSearch {
    int k;
    GLWeight mu;
    const GLWeight* lambda;
    LRDecomposition result;

    // cum_prev[r] = #boxes of the previous label in rows 1..r (prefix sums)
    void place_label(int label, GLWeight shape, const std::vector<long long>& cum_prev) {
        if (label > static_cast<int>(mu.size()) || mu[label - 1] == 0) {
            if (label > static_cast<int>(mu.size())) {
                result[shape] += 1;
                return;
            }
            // zero row of mu: nothing to place for this label
            place_label(label + 1, std::move(shape), std::vector<long long>(k, 0));
            return;
        }
        const long long boxes = mu[label - 1];
        // choose c_r boxes of this label in row r, recursively top down
        std::vector<long long> c(k, 0);
        dfs_row(label, 0, boxes, shape, cum_prev, c);
    }

    void dfs_row(int label, int row, long long remaining, GLWeight& shape,
                 const std::vector<long long>& cum_prev, std::vector<long long>& c) {
        if (row == k) {
            if (remaining != 0) return;
            std::vector<long long> cum_this(k, 0);
            long long acc = 0;
            for (int r = 0; r < k; ++r) {
                acc += c[r];
                cum_this[r] = acc;
            }
            place_label(label + 1, shape, cum_this);
            return;
        }
        // Bounds for c[row]:
        //  * horizontal strip: new shape[row] <= old shape[row-1]
        //    (also guarantees column-distinctness of equal labels);
        //  * partition shape: new shape[row] <= new shape[row-1];
        //  * lattice word: cum_this(row) <= cum_prev(row-1) for label >= 2.
        const long long old_here = shape[row];
        long long maxc = remaining;
        if (row > 0) {
            maxc = std::min(maxc, shape[row - 1] - old_here); // shape[row-1] already updated
            // horizontal strip vs the pre-update value of the row above:
            // shape[row-1] before update is recoverable from c[row-1]
            const long long old_above = shape[row - 1] - c[row - 1];
            maxc = std::min(maxc, old_above - old_here);
        }
        long long placed_above = 0;
        for (int r = 0; r < row; ++r) placed_above += c[r];
        if (label >= 2) {
            const long long cap = (row > 0 ? cum_prev[row - 1] : 0) - placed_above;
            maxc = std::min(maxc, cap);
        }
        if (maxc < 0) maxc = 0;
        for (long long take = 0; take <= maxc; ++take) {
            c[row] = take;
            shape[row] = old_here + take;
            dfs_row(label, row + 1, remaining - take, shape, cum_prev, c);
        }
        c[row] = 0;
        shape[row] = old_here;
    }
};

} // namespace

LRDecomposition lr_decompose(const GLWeight& lambda, const GLWeight& mu, int k) {
    if (static_cast<int>(lambda.size()) != k || static_cast<int>(mu.size()) != k)
        throw std::invalid_argument("lr_decompose: labels must have length k");
    if (!is_gl_weight(lambda) || !is_gl_weight(mu))
        throw std::invalid_argument("lr_decompose: labels must be non-increasing");

    const long long shift_l = std::max(0LL, -lambda.back());
    const long long shift_m = std::max(0LL, -mu.back());
    GLWeight sl = det_twist(lambda, shift_l);
    GLWeight sm = det_twist(mu, shift_m);

    LRSearch search;
    search.k = k;
    search.mu = sm;
    search.lambda = &sl;
    GLWeight shape = sl;
    search.place_label(1, std::move(shape), std::vector<long long>(k, 0));

    if (shift_l + shift_m == 0) return search.result;
    LRDecomposition shifted;
    for (const auto& [nu, mult] : search.result)
        shifted[det_twist(nu, -(shift_l + shift_m))] = mult;
    return shifted;
}

} // namespace homocat
