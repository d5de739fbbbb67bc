#include "homocat/excseq.hpp"
#include "homocat/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace homocat {

std::string label_to_string(const BundleLabel& b) {
    std::string s = "S(";
    for (size_t i = 0; i < b.schur.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b.schur[i]);
    }
    s += ")";
    if (b.l_twist) s += "xL";
    return s;
}

std::vector<GLWeight> partitions_in_box(int rows, int cols) {
    std::vector<GLWeight> out;
    GLWeight cur(rows, 0);
    // lexicographic enumeration of non-increasing tuples in [0, cols]^rows
    auto rec = [&](auto&& self, int pos, long long bound) -> void {
        if (pos == rows) {
            out.push_back(cur);
            return;
        }
        for (long long v = bound; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, cols);
    return out;
}

std::vector<BundleLabel> enumerate_thm333(int k, int n) {
    if (!(1 <= k && k <= n))
        throw std::invalid_argument("enumerate_thm333: need 1 <= k <= n");
    std::vector<BundleLabel> out;
    for (const auto& nu : partitions_in_box(k, 2 * n - k)) {
        const long long columns = nu.empty() ? 0 : nu.front();
        long long rows = 0;
        for (long long e : nu)
            if (e > 0) ++rows;
        if (rows >= columns - 2 * (n - k)) out.push_back({nu, 0});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> enumerate_sharp(int k, int n) {
    if (!(1 <= k && k <= n))
        throw std::invalid_argument("enumerate_sharp: need 1 <= k <= n");
    std::vector<Weight> out;
    Weight cur(k, Rat(0));
    auto rec = [&](auto&& self, int j) -> void {
        if (j == k) {
            out.push_back(cur);
            return;
        }
        // lambda_{j+1} ranges over [-2n + 2(j+1) - 1, 0]
        for (long long v = -2LL * n + 2 * (j + 1) - 1; v <= 0; ++v) {
            cur[j] = Rat(v);
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Weight> enumerate_hearts_b3() {
    auto w = [](Rat a, Rat b, Rat c) { return Weight{a, b, c}; };
    const Rat h(1, 2);
    // First-step generators (9): four spin-twisted and five plain.
    const std::vector<Weight> A = {
        w(h - 5, h, h), w(h - 5, -h, -h), w(h - 5, -h, h), w(h - 5, h, -h),
        w(-4, 0, 0),    w(-3, 0, 0),      w(-2, 0, 0),     w(-1, 0, 0),
        w(0, 0, 0)};
    // Second-step generators (5).
    const std::vector<Weight> B = {
        w(h, h - 3, h), w(h, h - 3, -h), w(0, -2, 0), w(0, -1, 0), w(0, 0, 0)};
    // Third-step generators (2).
    const std::vector<Weight> C = {w(h, h, -h), w(0, 0, 0)};

    std::vector<Weight> out;
    out.reserve(A.size() * B.size() * C.size());
    for (const auto& a : A)
        for (const auto& b : B)
            for (const auto& c : C)
                out.push_back(w(a[0] + b[0] + c[0], a[1] + b[1] + c[1],
                                a[2] + b[2] + c[2]));
    return out;
}

std::set<BundleLabel> igrass37_scan() {
    const auto hearts = enumerate_hearts_b3();
    std::vector<BundleLabel> results(hearts.size());
    std::vector<char> nonzero(hearts.size(), 0);
    parallel_for(hearts.size(), [&](size_t i) {
        const auto img = relative_bott_flag(3, hearts[i]);
        if (img.zero) return;
        results[i] = {dualize(img.label), img.l_twist};
        nonzero[i] = 1;
    });
    std::set<BundleLabel> out;
    for (size_t i = 0; i < hearts.size(); ++i)
        if (nonzero[i]) out.insert(results[i]);
    return out;
}

bool hom_criterion_grass(const GLWeight& lambda, const GLWeight& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("hom_criterion_grass: mismatched lengths");
    for (size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] < mu[i]) return false;
    return true;
}

bool VerificationReport::passes(VerifyMode mode) const {
    switch (mode) {
        case VerifyMode::Sequence:
            return is_exceptional_each && is_exceptional_sequence;
        case VerifyMode::Poset:
        case VerifyMode::VeryStrongPoset:
            return is_exceptional_each && is_strong && admissible_poset_ok;
    }
    return false;
}

VerificationReport verify_collection(const Geometry& geom,
                                     const std::vector<GLWeight>& labels,
                                     VerifyMode mode) {
    const int m = static_cast<int>(labels.size());
    VerificationReport rep;
    rep.labels_count = m;

    // Necessary completeness condition: number of Schubert cells.
    ParabolicSpec p;
    switch (geom.kind) {
        case Geometry::Kind::GrassA:
            p = {{Family::A, geom.n}, {geom.k}};
            break;
        case Geometry::Kind::IGrassC:
            p = {{Family::C, geom.n}, {geom.k}};
            break;
    }
    rep.schubert_cells = schubert_count(p);
    rep.completeness_necessary_ok = (rep.schubert_cells == m);

    // Full pairwise Ext tables, computed in parallel with deterministic slots.
    std::vector<ExtTable> tables(static_cast<size_t>(m) * m);
    parallel_for(tables.size(), [&](size_t t) {
        const int i = static_cast<int>(t) / m;
        const int j = static_cast<int>(t) % m;
        tables[t] = ext_table(geom, labels[i], labels[j]);
    });
    auto tab = [&](int i, int j) -> const ExtTable& {
        return tables[static_cast<size_t>(i) * m + j];
    };

    rep.is_exceptional_each = true;
    for (int i = 0; i < m; ++i) {
        const auto& t = tab(i, i);
        const bool ok = t.groups.size() == 1 && t.total_dim.count(0) &&
                        t.total_dim.at(0) == 1;
        if (!ok) {
            rep.is_exceptional_each = false;
            for (const auto& [deg, dim] : t.total_dim)
                if (deg != 0 || dim != 1)
                    rep.offenders.push_back({i, i, deg, dim});
        }
    }

    // Ordered vanishing: Ext^l(E_j, E_i) = 0 for all l, i < j.
    rep.is_exceptional_sequence = rep.is_exceptional_each;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (const auto& [deg, dim] : tab(j, i).total_dim) {
                rep.is_exceptional_sequence = false;
                rep.offenders.push_back({j, i, deg, dim});
            }

    // Strongness: Ext^{!=0} vanishing in both directions for all pairs.
    rep.is_strong = rep.is_exceptional_each;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (const auto& [deg, dim] : tab(i, j).total_dim)
                if (deg != 0 && !(i == j)) {
                    rep.is_strong = false;
                    rep.offenders.push_back({i, j, deg, dim});
                }

    // Admissible (total) order: Hom(E_j, E_i) = 0 for j > i.
    rep.admissible_poset_ok = true;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (tab(j, i).total_dim.count(0)) {
                rep.admissible_poset_ok = false;
                if (mode != VerifyMode::Sequence)
                    rep.offenders.push_back({j, i, 0, tab(j, i).total_dim.at(0)});
            }

    std::sort(rep.offenders.begin(), rep.offenders.end(),
              [](const Offender& a, const Offender& b) {
                  return std::tie(a.i, a.j, a.degree) < std::tie(b.i, b.j, b.degree);
              });
    rep.offenders.erase(
        std::unique(rep.offenders.begin(), rep.offenders.end(),
                    [](const Offender& a, const Offender& b) {
                        return a.i == b.i && a.j == b.j && a.degree == b.degree;
                    }),
        rep.offenders.end());
    return rep;
}

} // namespace homocat
