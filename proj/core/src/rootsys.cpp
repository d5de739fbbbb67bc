#include "homocat/rootsys.hpp"

#include <algorithm>
#include <numeric>

namespace homocat {

WeylElement identity_element(int rank) {
    WeylElement w;
    w.perm.resize(rank);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.signs.assign(rank, 1);
    return w;
}

bool is_identity(const WeylElement& w) {
    for (size_t i = 0; i < w.perm.size(); ++i)
        if (w.perm[i] != static_cast<int>(i) || w.signs[i] != 1) return false;
    return true;
}

Weight apply(const WeylElement& w, const Weight& v) {
    Weight out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = Rat(w.signs[i]) * v[w.perm[i]];
    return out;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    const int r = static_cast<int>(a.perm.size());
    WeylElement c;
    c.perm.resize(r);
    c.signs.resize(r);
    for (int i = 0; i < r; ++i) {
        c.perm[i] = b.perm[a.perm[i]];
        c.signs[i] = a.signs[i] * b.signs[a.perm[i]];
    }
    return c;
}

WeylElement inverse(const WeylElement& w) {
    const int r = static_cast<int>(w.perm.size());
    WeylElement inv;
    inv.perm.resize(r);
    inv.signs.resize(r);
    for (int i = 0; i < r; ++i) {
        inv.perm[w.perm[i]] = i;
        inv.signs[w.perm[i]] = w.signs[i];
    }
    return inv;
}

static Weight eps(int rank, int i, int ci) {
    Weight v(rank, Rat(0));
    v[i] = Rat(ci);
    return v;
}

static Weight eps2(int rank, int i, int ci, int j, int cj) {
    Weight v(rank, Rat(0));
    v[i] = Rat(ci);
    v[j] = Rat(cj);
    return v;
}

std::vector<Weight> positive_roots(const RootSystem& rs) {
    const int r = rs.rank;
    if (r < 1 || (rs.family == Family::D && r < 2))
        throw std::invalid_argument("positive_roots: unsupported rank for this family");
    std::vector<Weight> roots;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            roots.push_back(eps2(r, i, 1, j, -1));
    if (rs.family == Family::B || rs.family == Family::C || rs.family == Family::D) {
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                roots.push_back(eps2(r, i, 1, j, 1));
    }
    if (rs.family == Family::B)
        for (int i = 0; i < r; ++i) roots.push_back(eps(r, i, 1));
    if (rs.family == Family::C)
        for (int i = 0; i < r; ++i) roots.push_back(eps(r, i, 2));
    return roots;
}

std::vector<Weight> simple_roots(const RootSystem& rs) {
    const int r = rs.rank;
    if (r < 1 || (rs.family == Family::D && r < 2))
        throw std::invalid_argument("simple_roots: unsupported rank for this family");
    std::vector<Weight> roots;
    for (int i = 0; i + 1 < r; ++i)
        roots.push_back(eps2(r, i, 1, i + 1, -1));
    switch (rs.family) {
        case Family::A:
            break;
        case Family::B:
            roots.push_back(eps(r, r - 1, 1));
            break;
        case Family::C:
            roots.push_back(eps(r, r - 1, 2));
            break;
        case Family::D:
            roots.push_back(eps2(r, r - 2, 1, r - 1, 1));
            break;
    }
    return roots;
}

Weight rho(const RootSystem& rs) {
    const int r = rs.rank;
    Weight v(r);
    if (rs.family == Family::A) {
        // GL-style normalization (r-1, ..., 1, 0).
        for (int i = 0; i < r; ++i) v[i] = Rat(r - 1 - i);
        return v;
    }
    // Genuine half-sum of positive roots.
    Weight sum(r, Rat(0));
    for (const auto& a : positive_roots(rs))
        for (int i = 0; i < r; ++i) sum[i] += a[i];
    for (int i = 0; i < r; ++i) v[i] = sum[i] / 2;
    return v;
}

static bool is_negative_root(const Weight& v) {
    for (const auto& c : v) {
        if (c > Rat(0)) return false;
        if (c < Rat(0)) return true;
    }
    return false; // zero vector: not a root, treat as non-negative
}

int length(const RootSystem& rs, const WeylElement& w) {
    int count = 0;
    for (const auto& a : positive_roots(rs))
        if (is_negative_root((apply)(w, a))) ++count;
    return count;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs) {
    const int r = rs.rank;
    std::vector<int> p(r);
    std::iota(p.begin(), p.end(), 0);
    std::vector<WeylElement> out;
    const bool with_signs = rs.family != Family::A;
    const bool even_only = rs.family == Family::D;
    do {
        if (!with_signs) {
            out.push_back({p, std::vector<int>(r, 1)});
            continue;
        }
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            if (even_only && (__builtin_popcount(mask) % 2) != 0) continue;
            std::vector<int> s(r, 1);
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) s[i] = -1;
            out.push_back({p, s});
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

ReductionOutcome dominant_reduce(const RootSystem& rs, const Weight& delta) {
    const int r = rs.rank;
    if (static_cast<int>(delta.size()) != r)
        throw std::invalid_argument("dominant_reduce: weight length != rank");
    ReductionOutcome out;

    auto abs_of = [](const Rat& x) { return x < Rat(0) ? -x : x; };

    if (rs.family == Family::A) {
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (delta[i] == delta[j]) {
                    out.singular = true;
                    return out;
                }
        std::vector<int> idx(r);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return delta[a] > delta[b]; });
        out.w.perm = idx;
        out.w.signs.assign(r, 1);
    } else {
        int zeros = 0;
        for (int i = 0; i < r; ++i)
            if (delta[i] == Rat(0)) ++zeros;
        bool zero_singular = (rs.family == Family::D) ? (zeros >= 2) : (zeros >= 1);
        if (zero_singular) {
            out.singular = true;
            return out;
        }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (abs_of(delta[i]) == abs_of(delta[j])) {
                    out.singular = true;
                    return out;
                }
        std::vector<int> idx(r);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return abs_of(delta[a]) > abs_of(delta[b]); });
        out.w.perm = idx;
        out.w.signs.resize(r);
        int flips = 0;
        for (int i = 0; i < r; ++i) {
            out.w.signs[i] = (delta[idx[i]] < Rat(0)) ? -1 : 1;
            if (out.w.signs[i] == -1) ++flips;
        }
        if (rs.family == Family::D && (flips % 2) != 0) {
            // Restore even sign parity on the smallest coordinate; if that
            // coordinate is zero the dominant weight is unchanged, otherwise
            // its last entry becomes negative (still D-dominant).
            out.w.signs[r - 1] = -out.w.signs[r - 1];
        }
    }

    out.dominant = (apply)(out.w, delta);
    out.length = length(rs, out.w);
    return out;
}

bool is_dominant(const RootSystem& rs, const Weight& nu) {
    const int r = rs.rank;
    if (static_cast<int>(nu.size()) != r) return false;
    for (int i = 0; i + 1 < r; ++i)
        if (nu[i] < nu[i + 1]) return false;
    switch (rs.family) {
        case Family::A:
            return true;
        case Family::B:
            return nu[r - 1] >= Rat(0);
        case Family::C:
            if (nu[r - 1] < Rat(0)) return false;
            for (const auto& c : nu)
                if (c.denominator() != 1) return false;
            return true;
        case Family::D: {
            Rat last = nu[r - 1] < Rat(0) ? -nu[r - 1] : nu[r - 1];
            return r < 2 || nu[r - 2] >= last;
        }
    }
    return false;
}

Rat dot(const Weight& a, const Weight& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int weyl_dim(const RootSystem& rs, const Weight& nu) {
    if (!is_dominant(rs, nu))
        throw std::invalid_argument("weyl_dim: weight is not dominant");
    const Weight rh = rho(rs);
    Weight shifted(nu.size());
    for (size_t i = 0; i < nu.size(); ++i) shifted[i] = nu[i] + rh[i];
    BigRat prod(1);
    for (const auto& a : positive_roots(rs)) {
        Rat num = dot(shifted, a);
        Rat den = dot(rh, a);
        prod *= BigRat(Int(num.numerator()) * Int(den.denominator()),
                       Int(num.denominator()) * Int(den.numerator()));
    }
    if (denominator(prod) != 1)
        throw std::logic_error("weyl_dim: non-integral result");
    return numerator(prod);
}

} // namespace homocat
