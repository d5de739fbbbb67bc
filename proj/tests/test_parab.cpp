#include "doctest.h"

#include <homocat/parab.hpp>

#include <map>
#include <queue>
#include <set>

using namespace homocat;

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;
Key key(const WeylElement& w) { return {w.perm, w.signs}; }

// Family A rank r is GL(r)-style and has r - 1 simple reflections.
int num_simples(const RootSystem& rs) {
    return rs.family == Family::A ? rs.rank - 1 : rs.rank;
}

// All reflections: conjugates of simple reflections.
std::vector<WeylElement> reflections(const RootSystem& rs) {
    std::set<Key> seen;
    std::vector<WeylElement> out;
    const auto W = weyl_group(rs);
    for (const auto& u : W)
        for (int i = 1; i <= num_simples(rs); ++i) {
            WeylElement t =
                compose(compose(u, simple_reflection(rs, i)), inverse(u));
            if (seen.insert(key(t)).second) out.push_back(t);
        }
    return out;
}

// Bruhat order oracle: reachability in the cover graph v -> t*v with
// l(t*v) = l(v) + 1, t a reflection.
std::map<Key, std::set<Key>> bruhat_oracle(const RootSystem& rs) {
    const auto W = weyl_group(rs);
    const auto refl = reflections(rs);
    std::map<Key, std::set<Key>> below; // w -> all v with v <= w
    // process by increasing length
    std::vector<std::pair<int, WeylElement>> order;
    for (const auto& w : W) order.push_back({length(rs, w), w});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [lw, w] : order) {
        auto& s = below[key(w)];
        s.insert(key(w));
        for (const auto& t : refl) {
            WeylElement v = compose(t, w);
            if (length(rs, v) < lw) {
                const auto& sub = below.at(key(v));
                s.insert(sub.begin(), sub.end());
            }
        }
    }
    return below;
}

long long subgroup_order(const RootSystem& rs, const std::set<int>& omitted) {
    // BFS over the subgroup generated by the non-omitted simple reflections.
    std::vector<WeylElement> gens;
    for (int i = 1; i <= num_simples(rs); ++i)
        if (!omitted.count(i)) gens.push_back(simple_reflection(rs, i));
    std::set<Key> seen;
    std::queue<WeylElement> q;
    q.push(identity_element(rs.rank));
    seen.insert(key(q.front()));
    while (!q.empty()) {
        WeylElement w = q.front();
        q.pop();
        for (const auto& g : gens) {
            WeylElement x = compose(w, g);
            if (seen.insert(key(x)).second) q.push(x);
        }
    }
    return static_cast<long long>(seen.size());
}

} // namespace

TEST_SUITE("parab") {

TEST_CASE("schubert_count families") {
    // projective spaces
    for (int n = 1; n <= 6; ++n)
        CHECK(schubert_count({{Family::A, n + 1}, {1}}) == n + 1);
    // ordinary Grassmannians
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(schubert_count({{Family::A, n}, {k}}) ==
                  static_cast<long long>(binomial(n, k)));
    // isotropic Grassmannians
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(schubert_count({{Family::C, n}, {k}}) ==
                  (1LL << k) * static_cast<long long>(binomial(n, k)));
    CHECK(schubert_count({{Family::C, 3}, {2}}) == 12);
    CHECK(schubert_count({{Family::B, 3}, {3}}) == 8);
}

TEST_CASE("coset count times subgroup order equals group order") {
    const std::vector<std::pair<RootSystem, std::set<int>>> cases = {
        {{Family::A, 4}, {2}},
        {{Family::B, 3}, {3}},
        {{Family::C, 3}, {2}},
        {{Family::D, 4}, {1}},
        {{Family::C, 3}, {1, 3}},
    };
    for (const auto& [rs, omitted] : cases)
        CHECK(schubert_count({rs, omitted}) * subgroup_order(rs, omitted) ==
              static_cast<long long>(weyl_group(rs).size()));
}

TEST_CASE("bruhat_leq agrees with the reflection-cover oracle") {
    for (const RootSystem rs : {RootSystem{Family::A, 3},
                                RootSystem{Family::B, 2},
                                RootSystem{Family::C, 3},
                                RootSystem{Family::D, 3}}) {
        const auto below = bruhat_oracle(rs);
        const auto W = weyl_group(rs);
        for (const auto& a : W)
            for (const auto& b : W) {
                const bool expected = below.at(key(b)).count(key(a)) > 0;
                CHECK(bruhat_leq(rs, a, b) == expected);
            }
    }
}

TEST_CASE("reduced_word multiplies back and has minimal length") {
    const RootSystem rs{Family::B, 3};
    for (const auto& w : weyl_group(rs)) {
        const auto word = reduced_word(rs, w);
        CHECK(static_cast<int>(word.size()) == length(rs, w));
        WeylElement prod = identity_element(rs.rank);
        for (int letter : word)
            prod = compose(prod, simple_reflection(rs, letter));
        CHECK(prod == w);
    }
}

TEST_CASE("grass index validity") {
    CHECK(valid_grass_index({{1, 3}}, 4));
    CHECK(!valid_grass_index({{3, 1}}, 4));
    CHECK(!valid_grass_index({{1, 5}}, 4));
    // isotropic: 2n = 4, forbidden pairs {1,4} and {2,3}
    CHECK(valid_grass_index({{1, 2}}, 4, 4));
    CHECK(!valid_grass_index({{1, 4}}, 4, 4));
    CHECK(!valid_grass_index({{2, 3}}, 4, 4));
    CHECK(valid_grass_index({{1, 3}}, 4, 4));
}

TEST_CASE("young bijection and componentwise order") {
    // Grass(2,4): all six index tuples, partitions inside the 2x2 box
    std::vector<GrassIndex> idx = {{{1, 2}}, {{1, 3}}, {{1, 4}},
                                   {{2, 3}}, {{2, 4}}, {{3, 4}}};
    std::set<std::vector<long long>> images;
    for (const auto& g : idx) {
        auto lam = grass_young_bijection(2, 4, g);
        REQUIRE(lam.size() == 2);
        CHECK(lam[0] >= lam[1]);
        CHECK(lam[1] >= 0);
        CHECK(lam[0] <= 2);
        images.insert(lam);
    }
    CHECK(images.size() == 6); // bijective onto Y(2, 2)
    CHECK(grass_young_bijection(2, 4, {{1, 2}}) ==
          std::vector<long long>{0, 0});
    CHECK(grass_young_bijection(2, 4, {{3, 4}}) ==
          std::vector<long long>{2, 2});
    CHECK(grass_young_bijection(2, 4, {{2, 3}}) ==
          std::vector<long long>{1, 1});
    // tuple order corresponds to diagram containment
    for (const auto& a : idx)
        for (const auto& b : idx) {
            const auto la = grass_young_bijection(2, 4, a);
            const auto lb = grass_young_bijection(2, 4, b);
            const bool contained = la[0] <= lb[0] && la[1] <= lb[1];
            CHECK(bruhat_leq(a, b) == contained);
        }
}

} // TEST_SUITE
