// Parabolic subgroups, minimal coset representatives W^P, Schubert-cell
// counting, the Young-diagram bijection for (isotropic) Grassmannians, and
// Bruhat order both in the index-tuple picture and via the subword criterion.

#ifndef HOMOCAT_PARAB_HPP
#define HOMOCAT_PARAB_HPP

#include "rootsys.hpp"

#include <set>
#include <vector>

namespace homocat {

struct ParabolicSpec {
    RootSystem rs;
    // 1-based indices of OMITTED simple roots: W_P is generated by the
    // simple reflections whose index is NOT in this set.
    std::set<int> omitted;
};

struct GrassIndex {
    std::vector<int> idx; // strictly increasing entries in [1, n]
};

// Validate a Grassmannian index tuple (1 <= i_1 < ... < i_k <= n); when
// isotropic_2n > 0 the tuple lives in [1, 2n] and may not contain both
// members of any pair {i, 2n+1-i}.
bool valid_grass_index(const GrassIndex& g, int n, int isotropic_2n = 0);

// |W^P|: number of minimal coset representatives, i.e. elements sending every
// W_P-simple root to a positive root.
long long schubert_count(const ParabolicSpec& p);

// lambda(i)_t = i_{k-t+1} - (k-t+1); a bijection I_{k,n} -> Y(k, n-k).
std::vector<long long> grass_young_bijection(int k, int n, const GrassIndex& g);

// Componentwise Bruhat order on index tuples.
bool bruhat_leq(const GrassIndex& a, const GrassIndex& b);

// General Bruhat order via the subword criterion on one fixed reduced word
// of b (reduced words obtained by greedy descent).
bool bruhat_leq(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

// Reduced word for w as a sequence of 1-based simple-reflection indices,
// found by greedy descent; product left-to-right equals w.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

// Simple reflection s_i (1-based) as a WeylElement.
WeylElement simple_reflection(const RootSystem& rs, int i);

} // namespace homocat

#endif
