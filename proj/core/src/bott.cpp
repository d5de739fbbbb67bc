#include "homocat/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace homocat {

static Weight to_weight(const GLWeight& v) {
    Weight w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = Rat(v[i]);
    return w;
}

static GLWeight to_gl(const Weight& v) {
    GLWeight w(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].denominator() != 1)
            throw std::logic_error("to_gl: non-integral coordinate");
        w[i] = v[i].numerator();
    }
    return w;
}

static CohomologyResult reduce_absolute(const RootSystem& rs, const Weight& lambda) {
    const Weight r = rho(rs);
    Weight delta(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) delta[i] = lambda[i] + r[i];
    const auto red = dominant_reduce(rs, delta);
    CohomologyResult out;
    if (red.singular) return out;
    out.zero = false;
    out.degree = red.length;
    out.highest_weight.resize(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i)
        out.highest_weight[i] = red.dominant[i] - r[i];
    out.dim = weyl_dim(rs, out.highest_weight);
    return out;
}

CohomologyResult coh_grass_A(int k, int n, const GLWeight& gamma) {
    if (static_cast<int>(gamma.size()) != k || !(n > k && k >= 1))
        throw std::invalid_argument("coh_grass_A: need gamma of length k, n > k >= 1");
    Weight full(n, Rat(0));
    for (int i = 0; i < k; ++i) full[n - k + i] = Rat(gamma[i]);
    return reduce_absolute({Family::A, n}, full);
}

CohomologyResult coh_igrass_C(int k, int n, const GLWeight& lambda) {
    if (static_cast<int>(lambda.size()) != k || !(1 <= k && k <= n))
        throw std::invalid_argument("coh_igrass_C: need lambda of length k, 1 <= k <= n");
    Weight mu(n, Rat(0));
    for (int i = 0; i < k; ++i) mu[i] = Rat(-lambda[k - 1 - i]);
    return reduce_absolute({Family::C, n}, mu);
}

DirectImageResult relative_bott_flag(int k, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != k)
        throw std::invalid_argument("relative_bott_flag: weight length != k");
    bool half = false, integral = false;
    for (const auto& c : lambda) {
        if (c.denominator() == 1) integral = true;
        else if (c.denominator() == 2) half = true;
        else throw std::invalid_argument("relative_bott_flag: coordinates must be integral or half-odd");
    }
    if (half && integral)
        throw std::invalid_argument("relative_bott_flag: mixed fractional parts");

    Weight shifted = lambda;
    DirectImageResult out;
    if (half) {
        out.l_twist = 1;
        for (auto& c : shifted) c -= Rat(1, 2);
    }
    const RootSystem rs{Family::A, k};
    const Weight r = rho(rs);
    Weight delta(k);
    for (int i = 0; i < k; ++i) delta[i] = shifted[i] + r[i];
    const auto red = dominant_reduce(rs, delta);
    if (red.singular) return out;
    out.zero = false;
    out.degree = red.length;
    Weight mu(k);
    for (int i = 0; i < k; ++i) mu[i] = red.dominant[i] - r[i];
    out.label = to_gl(mu);
    return out;
}

CohomologyResult general_bott_gp(const ParabolicSpec& p, const Weight& lambda) {
    const int num_simple = (p.rs.family == Family::A) ? p.rs.rank - 1 : p.rs.rank;
    const auto simples = simple_roots(p.rs);
    for (int i = 1; i <= num_simple; ++i) {
        if (p.omitted.count(i)) continue;
        const Weight& a = simples[i - 1];
        // Levi dominance: <lambda, alpha-check> >= 0 for Levi simples.
        if (dot(lambda, a) < Rat(0))
            throw std::invalid_argument("general_bott_gp: weight not Levi-dominant");
    }
    return reduce_absolute(p.rs, lambda);
}

ExtTable ext_table(const Geometry& geom, const GLWeight& a, const GLWeight& b) {
    if (a.size() != b.size() || static_cast<int>(a.size()) != geom.k)
        throw std::invalid_argument("ext_table: label lengths must equal geometry k");
    ExtTable table;
    const auto dec = lr_decompose(b, dualize(a), geom.k);
    for (const auto& [e, mult] : dec) {
        CohomologyResult c;
        switch (geom.kind) {
            case Geometry::Kind::GrassA: c = coh_grass_A(geom.k, geom.n, e); break;
            case Geometry::Kind::IGrassC: c = coh_igrass_C(geom.k, geom.n, e); break;
        }
        if (c.zero) continue;
        table.groups[c.degree].push_back({c.highest_weight, mult});
        table.total_dim[c.degree] += Int(mult) * c.dim;
    }
    // canonical order inside each degree
    for (auto& [deg, v] : table.groups)
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
            return x.first < y.first;
        });
    return table;
}

Int euler_characteristic(const ExtTable& t) {
    Int chi = 0;
    for (const auto& [deg, dim] : t.total_dim)
        chi += (deg % 2 == 0) ? dim : -dim;
    return chi;
}

} // namespace homocat
