#include "homocat/ktheory.hpp"
#include "homocat/parallel.hpp"

#include <stdexcept>

namespace homocat {

GramMatrix gram_from_collection(const Geometry& geom,
                                const std::vector<GLWeight>& labels) {
    const size_t m = labels.size();
    GramMatrix g(m, std::vector<Int>(m));
    parallel_for(m * m, [&](size_t t) {
        const size_t i = t / m, j = t % m;
        g[i][j] = euler_characteristic(ext_table(geom, labels[i], labels[j]));
    });
    return g;
}

Int chi(const GramMatrix& gram, const KClass& u, const KClass& v) {
    const size_t n = gram.size();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("chi: dimension mismatch");
    Int total = 0;
    for (size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        Int row = 0;
        for (size_t j = 0; j < n; ++j) row += gram[i][j] * v[j];
        total += u[i] * row;
    }
    return total;
}

MutationState initial_state(const GramMatrix& gram) {
    MutationState s;
    s.gram = gram;
    const size_t n = gram.size();
    s.classes.assign(n, KClass(n, 0));
    for (size_t i = 0; i < n; ++i) s.classes[i][i] = 1;
    return s;
}

MutationState mutate(const MutationState& s, int i, Side dir) {
    const int n = static_cast<int>(s.classes.size());
    if (i < 0 || i + 1 >= n)
        throw std::out_of_range("mutate: index out of range");
    MutationState out = s;
    const KClass& a = s.classes[i];
    const KClass& b = s.classes[i + 1];
    const Int c = chi(s.gram, a, b);
    KClass mutated(a.size());
    if (dir == Side::Left) {
        for (size_t t = 0; t < a.size(); ++t) mutated[t] = c * a[t] - b[t];
        out.classes[i] = mutated;
        out.classes[i + 1] = a;
    } else {
        for (size_t t = 0; t < a.size(); ++t) mutated[t] = c * b[t] - a[t];
        out.classes[i] = b;
        out.classes[i + 1] = mutated;
    }
    return out;
}

bool semi_orthonormal(const MutationState& s) {
    const int n = static_cast<int>(s.classes.size());
    for (int i = 0; i < n; ++i) {
        if (chi(s.gram, s.classes[i], s.classes[i]) != 1) return false;
        for (int j = i + 1; j < n; ++j)
            if (chi(s.gram, s.classes[j], s.classes[i]) != 0) return false;
    }
    return true;
}

std::vector<KClass> dual_sequence(const MutationState& s, Side side) {
    const int n = static_cast<int>(s.classes.size());
    std::vector<KClass> duals(n);
    for (int i = 1; i <= n; ++i) {
        KClass x = s.classes[n - i]; // E_{n-i+1}
        if (side == Side::Right) {
            // apply L_{E_{n-i}}, ..., L_{E_1}: innermost mutation first
            for (int j = n - i - 1; j >= 0; --j) {
                const Int c = chi(s.gram, s.classes[j], x);
                KClass next(x.size());
                for (size_t t = 0; t < x.size(); ++t)
                    next[t] = c * s.classes[j][t] - x[t];
                x = next;
            }
        } else {
            // apply R_{E_{n-i+2}}, ..., R_{E_n}
            for (int j = n - i + 1; j < n; ++j) {
                const Int c = chi(s.gram, x, s.classes[j]);
                KClass next(x.size());
                for (size_t t = 0; t < x.size(); ++t)
                    next[t] = c * s.classes[j][t] - x[t];
                x = next;
            }
        }
        duals[i - 1] = x;
    }
    return duals;
}

GramMatrix kron_gram(const GramMatrix& gx, const GramMatrix& gy) {
    const size_t a = gx.size(), b = gy.size();
    GramMatrix g(a * b, std::vector<Int>(a * b));
    for (size_t i1 = 0; i1 < a; ++i1)
        for (size_t i2 = 0; i2 < b; ++i2)
            for (size_t j1 = 0; j1 < a; ++j1)
                for (size_t j2 = 0; j2 < b; ++j2)
                    g[i1 * b + i2][j1 * b + j2] = gx[i1][j1] * gy[i2][j2];
    return g;
}

KClass kclass_in_basis(const Geometry& geom, const std::vector<GLWeight>& basis,
                       const GramMatrix& gram, const GLWeight& target) {
    const int n = static_cast<int>(basis.size());
    // v_j = chi(E_j, target); then solve G x = v by back substitution
    // (G is unit upper triangular for an exceptional basis).
    KClass v(n);
    for (int j = 0; j < n; ++j)
        v[j] = euler_characteristic(ext_table(geom, basis[j], target));
    for (int i = 0; i < n; ++i) {
        if (gram[i][i] != 1)
            throw std::invalid_argument("kclass_in_basis: gram not unit upper triangular");
        for (int j = 0; j < i; ++j)
            if (gram[i][j] != 0)
                throw std::invalid_argument("kclass_in_basis: gram not unit upper triangular");
    }
    KClass x(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        Int acc = v[i];
        for (int j = i + 1; j < n; ++j) acc -= gram[i][j] * x[j];
        x[i] = acc;
    }
    return x;
}

Int det_unimodular_check(const GramMatrix& g) {
    // Fraction-free Bareiss elimination.
    const int n = static_cast<int>(g.size());
    if (n == 0) return 1;
    GramMatrix m = g;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace homocat
