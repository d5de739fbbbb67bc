#include "homocat/parab.hpp"

#include <algorithm>
#include <stdexcept>

namespace homocat {

bool valid_grass_index(const GrassIndex& g, int n, int isotropic_2n) {
    const int bound = isotropic_2n > 0 ? isotropic_2n : n;
    int prev = 0;
    for (int v : g.idx) {
        if (v <= prev || v > bound) return false;
        prev = v;
    }
    if (isotropic_2n > 0) {
        for (int v : g.idx) {
            int partner = isotropic_2n + 1 - v;
            if (partner != v &&
                std::find(g.idx.begin(), g.idx.end(), partner) != g.idx.end())
                return false;
        }
    }
    return true;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    const int r = rs.rank;
    if (i < 1 || i > r || (rs.family == Family::A && i == r))
        throw std::invalid_argument("simple_reflection: index out of range");
    WeylElement w = identity_element(r);
    if (i < r) {
        std::swap(w.perm[i - 1], w.perm[i]);
        return w;
    }
    switch (rs.family) {
        case Family::A:
            break; // unreachable
        case Family::B:
        case Family::C:
            w.signs[r - 1] = -1;
            break;
        case Family::D:
            std::swap(w.perm[r - 2], w.perm[r - 1]);
            w.signs[r - 2] = -1;
            w.signs[r - 1] = -1;
            break;
    }
    return w;
}

long long schubert_count(const ParabolicSpec& p) {
    const int r = p.rs.rank;
    const int num_simple = (p.rs.family == Family::A) ? r - 1 : r;
    for (int i : p.omitted)
        if (i < 1 || i > num_simple)
            throw std::invalid_argument("schubert_count: omitted index out of range");
    if (r > 7)
        throw std::invalid_argument("schubert_count: enumeration budget exceeded (rank > 7)");

    const auto simples = simple_roots(p.rs);
    std::vector<Weight> levi_simples;
    for (int i = 1; i <= num_simple; ++i)
        if (!p.omitted.count(i)) levi_simples.push_back(simples[i - 1]);

    auto is_positive = [](const Weight& v) {
        for (const auto& c : v) {
            if (c > Rat(0)) return true;
            if (c < Rat(0)) return false;
        }
        return false;
    };

    long long count = 0;
    for (const auto& w : weyl_group(p.rs)) {
        bool minimal = true;
        for (const auto& a : levi_simples)
            if (!is_positive((apply)(w, a))) {
                minimal = false;
                break;
            }
        if (minimal) ++count;
    }
    return count;
}

std::vector<long long> grass_young_bijection(int k, int n, const GrassIndex& g) {
    if (static_cast<int>(g.idx.size()) != k || !valid_grass_index(g, n))
        throw std::invalid_argument("grass_young_bijection: malformed index tuple");
    std::vector<long long> lambda(k);
    for (int t = 1; t <= k; ++t)
        lambda[t - 1] = g.idx[k - t] - (k - t + 1);
    return lambda;
}

bool bruhat_leq(const GrassIndex& a, const GrassIndex& b) {
    if (a.idx.size() != b.idx.size())
        throw std::invalid_argument("bruhat_leq: mismatched tuple lengths");
    for (size_t j = 0; j < a.idx.size(); ++j)
        if (a.idx[j] > b.idx[j]) return false;
    return true;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
    const int num_simple = (rs.family == Family::A) ? rs.rank - 1 : rs.rank;
    const auto simples = simple_roots(rs);
    auto is_negative = [](const Weight& v) {
        for (const auto& c : v) {
            if (c > Rat(0)) return false;
            if (c < Rat(0)) return true;
        }
        return false;
    };
    // Greedy right descents: if w(alpha_i) < 0 then l(w s_i) = l(w) - 1.
    std::vector<int> rev;
    WeylElement cur = w;
    while (!is_identity(cur)) {
        bool found = false;
        for (int i = 1; i <= num_simple; ++i) {
            if (is_negative((apply)(cur, simples[i - 1]))) {
                rev.push_back(i);
                cur = compose(cur, simple_reflection(rs, i));
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("reduced_word: no descent found for non-identity element");
    }
    // cur ended as identity with w * s_{rev[0]} * ... * s_{rev[m-1]} = id,
    // hence w = s_{rev[m-1]} * ... * s_{rev[0]}.
    std::reverse(rev.begin(), rev.end());
    return rev;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
    if (a.perm.size() != b.perm.size())
        throw std::invalid_argument("bruhat_leq: mismatched ranks");
    if (length(rs, a) > length(rs, b)) return false;
    const auto word = reduced_word(rs, b);
    const auto simples = simple_roots(rs);
    auto is_negative = [](const Weight& v) {
        for (const auto& c : v) {
            if (c > Rat(0)) return false;
            if (c < Rat(0)) return true;
        }
        return false;
    };
    // Scan the fixed reduced word of b from the left; peel a letter off a
    // whenever it is a left descent.  a <= b iff a is exhausted at the end.
    WeylElement v = a;
    for (int letter : word) {
        // l(s_i v) < l(v) iff v^{-1}(alpha_i) < 0.
        if (is_negative((apply)(inverse(v), simples[letter - 1])))
            v = compose(simple_reflection(rs, letter), v);
    }
    return is_identity(v);
}

} // namespace homocat
