#include "homocat/cellres.hpp"
#include "homocat/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>

namespace homocat {

// ---------------------------------------------------------------- monomials

Monomial mono_one(int num_vars) { return Monomial(num_vars, 0); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_quot(const Monomial& b, const Monomial& a) {
    Monomial c(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        c[i] = b[i] - a[i];
        if (c[i] < 0) throw std::invalid_argument("mono_quot: not divisible");
    }
    return c;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
    return c;
}

int mono_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

std::vector<std::string> xy_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 0; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

std::string mono_to_string(const Monomial& m,
                           const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<Monomial> monomials_of_degree(int num_vars, int deg) {
    std::vector<Monomial> out;
    if (deg < 0) return out;
    Monomial cur(num_vars, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == num_vars - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (num_vars == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, deg);
    return out;
}

MonomialIdeal xy_ideal(int n) {
    MonomialIdeal M;
    M.num_vars = 2 * (n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Monomial m(M.num_vars, 0);
            m[i] = 1;
            m[n + 1 + j] = 1;
            M.generators.push_back(m);
        }
    return M;
}

// ------------------------------------------------------------ cell complex

static Monomial yn_label(int n, const std::vector<int>& I, int mu1) {
    Monomial m(2 * (n + 1), 0);
    for (size_t t = 0; t < I.size(); ++t) {
        if (static_cast<int>(t) <= mu1)
            m[I[t]] += 1;              // x part: first mu1+1 indices
        else
            m[n + 1 + I[t]] += 1;      // y part: the rest
    }
    return m;
}

static std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

CellComplex yn_build(int n) {
    if (n < 1) throw std::invalid_argument("yn_build: need n >= 1");
    CellComplex X;
    X.num_vars = 2 * (n + 1);
    X.by_dim.resize(n);
    std::map<std::pair<std::vector<int>, int>, int> lookup;
    for (int h = 0; h < n; ++h) {
        for (const auto& I : subsets_of_size(n, h + 2)) {
            for (int mu1 = 0; mu1 <= h; ++mu1) {
                CellFace f;
                f.id = static_cast<int>(X.faces.size());
                f.dim = h;
                f.indices = I;
                f.mu1 = mu1;
                f.label = yn_label(n, I, mu1);
                lookup[{I, mu1}] = f.id;
                X.by_dim[h].push_back(f.id);
                X.faces.push_back(std::move(f));
            }
        }
    }
    for (const auto& f : X.faces) {
        if (f.dim == 0) continue;
        const int h = f.dim;
        const int mu2 = h - f.mu1;
        // erase the l-th row (1-based l over the first mu1+1 indices)
        if (f.mu1 >= 1) {
            for (int l = 1; l <= f.mu1 + 1; ++l) {
                std::vector<int> J = f.indices;
                J.erase(J.begin() + (l - 1));
                const int sign = (l % 2 == 0) ? 1 : -1; // (-1)^l
                X.incidence[{f.id, lookup.at({J, f.mu1 - 1})}] = sign;
            }
        }
        // erase the j-th column (1-based j over the last mu2+1 indices)
        if (mu2 >= 1) {
            for (int j = 1; j <= mu2 + 1; ++j) {
                std::vector<int> J = f.indices;
                J.erase(J.begin() + (f.mu1 + j));
                const int sign = ((f.mu1 + j) % 2 == 0) ? 1 : -1; // (-1)^{mu1+j}
                X.incidence[{f.id, lookup.at({J, f.mu1})}] = sign;
            }
        }
    }
    return X;
}

CellComplex simplex_complex(const std::vector<Monomial>& vertex_labels) {
    const int k = static_cast<int>(vertex_labels.size());
    if (k == 0) throw std::invalid_argument("simplex_complex: no vertices");
    CellComplex X;
    X.num_vars = static_cast<int>(vertex_labels[0].size());
    X.by_dim.resize(k == 1 ? 1 : k - 1);
    std::map<std::vector<int>, int> lookup;
    for (int h = 0; h < std::max(1, k - 1); ++h) {
        for (const auto& I : subsets_of_size(k - 1, h + 1)) {
            CellFace f;
            f.id = static_cast<int>(X.faces.size());
            f.dim = h;
            f.indices = I;
            f.label = vertex_labels[I[0]];
            for (size_t t = 1; t < I.size(); ++t)
                f.label = mono_lcm(f.label, vertex_labels[I[t]]);
            lookup[I] = f.id;
            X.by_dim[h].push_back(f.id);
            X.faces.push_back(std::move(f));
        }
    }
    for (const auto& f : X.faces) {
        if (f.dim == 0) continue;
        for (size_t l = 0; l < f.indices.size(); ++l) {
            std::vector<int> J = f.indices;
            J.erase(J.begin() + l);
            X.incidence[{f.id, lookup.at(J)}] = (l % 2 == 0) ? 1 : -1;
        }
    }
    return X;
}

AuditResult incidence_audit(const CellComplex& X) {
    // facet lists
    std::vector<std::vector<std::pair<int, int>>> facets(X.faces.size());
    for (const auto& [key, sign] : X.incidence)
        facets[key.first].push_back({key.second, sign});

    for (const auto& f : X.faces) {
        if (f.dim == 1) {
            // against the empty face: exactly two vertices, signs cancel
            int sum = 0;
            for (const auto& [v, s] : facets[f.id]) sum += s;
            if (facets[f.id].size() != 2 || sum != 0)
                return {false, "edge " + std::to_string(f.id) +
                                   ": vertex signs do not cancel"};
        }
        if (f.dim >= 2) {
            std::map<int, std::vector<int>> through; // e'' -> sign products
            for (const auto& [e1, s1] : facets[f.id])
                for (const auto& [e2, s2] : facets[e1])
                    through[e2].push_back(s1 * s2);
            for (const auto& [e2, prods] : through) {
                if (prods.size() != 2)
                    return {false, "codim-2 pair (" + std::to_string(f.id) +
                                       "," + std::to_string(e2) + "): " +
                                       std::to_string(prods.size()) +
                                       " intermediate facets"};
                if (prods[0] + prods[1] != 0)
                    return {false, "codim-2 pair (" + std::to_string(f.id) +
                                       "," + std::to_string(e2) +
                                       "): signs do not cancel"};
            }
        }
    }
    return {true, ""};
}

// --------------------------------------------------------- graded complexes

static Entry entry_normalize(std::map<Monomial, long long>& acc) {
    Entry e;
    for (const auto& [m, c] : acc)
        if (c != 0) e.push_back({c, m});
    return e;
}

bool composes_to_zero(const GradedComplex& C) {
    for (size_t h = 0; h + 1 < C.diff.size(); ++h) {
        const PolyMatrix& A = C.diff[h];     // F_h -> F_{h-1} (or R)
        const PolyMatrix& B = C.diff[h + 1]; // F_{h+1} -> F_h
        const size_t rows = A.size();
        const size_t mid = B.size();
        const size_t cols = mid ? B[0].size() : 0;
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                std::map<Monomial, long long> acc;
                for (size_t m = 0; m < mid; ++m)
                    for (const Term& ta : A[r][m])
                        for (const Term& tb : B[m][c])
                            acc[mono_mul(ta.mono, tb.mono)] +=
                                ta.coeff * tb.coeff;
                if (!entry_normalize(acc).empty()) return false;
            }
    }
    return true;
}

GradedComplex cellular_complex(const CellComplex& X, const MonomialIdeal& M) {
    // vertex labels must be exactly the generators of M (as multisets)
    std::multiset<Monomial> va, vb;
    for (int id : X.by_dim[0]) va.insert(X.faces[id].label);
    for (const auto& g : M.generators) vb.insert(g);
    if (va != vb)
        throw std::invalid_argument(
            "cellular_complex: vertex labels differ from ideal generators");

    GradedComplex C;
    C.num_vars = X.num_vars;
    const int D = X.dimension();
    for (int h = 0; h <= D; ++h)
        C.ranks.push_back(static_cast<long long>(X.by_dim[h].size()));

    // position of each face within its dimension
    std::vector<int> pos(X.faces.size(), -1);
    for (int h = 0; h <= D; ++h)
        for (size_t p = 0; p < X.by_dim[h].size(); ++p)
            pos[X.by_dim[h][p]] = static_cast<int>(p);

    // augmentation: v -> m_v
    PolyMatrix aug(1, std::vector<Entry>(X.by_dim[0].size()));
    for (size_t p = 0; p < X.by_dim[0].size(); ++p)
        aug[0][p] = {Term{1, X.faces[X.by_dim[0][p]].label}};
    C.diff.push_back(std::move(aug));

    for (int h = 1; h <= D; ++h) {
        PolyMatrix d(X.by_dim[h - 1].size(),
                     std::vector<Entry>(X.by_dim[h].size()));
        for (size_t c = 0; c < X.by_dim[h].size(); ++c) {
            const CellFace& e = X.faces[X.by_dim[h][c]];
            for (const auto& [key, sign] : X.incidence) {
                if (key.first != e.id) continue;
                const CellFace& ep = X.faces[key.second];
                d[pos[ep.id]][c].push_back(
                    {sign, mono_quot(e.label, ep.label)});
            }
        }
        C.diff.push_back(std::move(d));
    }
    return C;
}

std::string sparse_triples(const PolyMatrix& m,
                           const std::vector<std::string>& names) {
    std::ostringstream os;
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m[r].size(); ++c)
            for (const Term& t : m[r][c]) {
                os << r << " " << c << " ";
                if (t.coeff < 0)
                    os << "-";
                else
                    os << "+";
                if (std::abs(t.coeff) != 1) os << std::abs(t.coeff) << "*";
                os << mono_to_string(t.mono, names) << "\n";
            }
    return os.str();
}

// --------------------------------------------------------------- exact rank

// Exact rank of a sparse rational matrix given as rows: column -> value.
static long long sparse_rank(std::vector<std::map<int, BigRat>> rows) {
    long long rank = 0;
    std::vector<char> done(rows.size(), 0);
    while (true) {
        // pick the shortest remaining nonempty row
        int best = -1;
        size_t best_len = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || rows[r].empty()) continue;
            if (best < 0 || rows[r].size() < best_len) {
                best = static_cast<int>(r);
                best_len = rows[r].size();
            }
        }
        if (best < 0) break;
        const int pc = rows[best].begin()->first;
        const BigRat pv = rows[best].begin()->second;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || static_cast<int>(r) == best) continue;
            auto it = rows[r].find(pc);
            if (it == rows[r].end()) continue;
            const BigRat factor = it->second / pv;
            for (const auto& [c, v] : rows[best]) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    rows[r][c] = -factor * v;
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) rows[r].erase(jt);
                }
            }
        }
        done[best] = 1;
        ++rank;
    }
    return rank;
}

bool is_resolution(const CellComplex& X, const MonomialIdeal& M) {
    std::multiset<Monomial> va, vb;
    for (int id : X.by_dim[0]) va.insert(X.faces[id].label);
    for (const auto& g : M.generators) vb.insert(g);
    if (va != vb)
        throw std::invalid_argument(
            "is_resolution: vertex labels differ from ideal generators");

    // lcm lattice: closure of the generator set under pairwise joins
    std::set<Monomial> lattice(M.generators.begin(), M.generators.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Monomial> snapshot(lattice.begin(), lattice.end());
        for (size_t i = 0; i < snapshot.size(); ++i)
            for (size_t j = i + 1; j < snapshot.size(); ++j)
                if (lattice.insert(mono_lcm(snapshot[i], snapshot[j])).second)
                    grew = true;
    }
    const std::vector<Monomial> points(lattice.begin(), lattice.end());
    const int D = X.dimension();

    std::atomic<bool> acyclic{true};
    parallel_for(points.size(), [&](size_t pi) {
        if (!acyclic.load()) return;
        const Monomial& b = points[pi];
        // faces of X_{<=b}, positions per dimension
        std::vector<std::vector<int>> sub(D + 1);
        std::vector<int> pos(X.faces.size(), -1);
        for (const auto& f : X.faces)
            if (mono_divides(f.label, b)) {
                pos[f.id] = static_cast<int>(sub[f.dim].size());
                sub[f.dim].push_back(f.id);
            }
        if (sub[0].empty()) {
            acyclic.store(false);
            return;
        }
        // reduced boundary ranks: r[0] = rank of the all-ones augmentation
        std::vector<long long> r(D + 2, 0);
        r[0] = 1;
        for (int h = 1; h <= D; ++h) {
            std::vector<std::map<int, BigRat>> rows(sub[h - 1].size());
            for (size_t c = 0; c < sub[h].size(); ++c)
                for (const auto& [key, sign] : X.incidence) {
                    if (key.first != sub[h][c]) continue;
                    if (pos[key.second] < 0) continue; // cannot happen
                    rows[pos[key.second]][static_cast<int>(c)] = sign;
                }
            r[h] = sparse_rank(std::move(rows));
        }
        for (int h = 0; h <= D; ++h) {
            const long long dim = static_cast<long long>(sub[h].size());
            if (dim - r[h] != r[h + 1]) {
                acyclic.store(false);
                return;
            }
        }
    });
    return acyclic.load();
}

// ------------------------------------------------------------ Eagon-Northcott

std::vector<std::pair<std::vector<int>, int>> en_basis(int n, int h) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (const auto& I : subsets_of_size(n, h + 2))
        for (int mu1 = 0; mu1 <= h; ++mu1) out.push_back({I, mu1});
    return out;
}

GradedComplex eagon_northcott(int n) {
    if (n < 1) throw std::invalid_argument("eagon_northcott: need n >= 1");
    GradedComplex C;
    C.num_vars = 2 * (n + 1);
    std::vector<std::vector<std::pair<std::vector<int>, int>>> bases;
    for (int h = 0; h < n; ++h) {
        bases.push_back(en_basis(n, h));
        C.ranks.push_back(static_cast<long long>(bases.back().size()));
    }
    // augmentation: f_a ^ f_b -> x_a y_b - x_b y_a
    PolyMatrix aug(1, std::vector<Entry>(bases[0].size()));
    for (size_t c = 0; c < bases[0].size(); ++c) {
        const auto& [I, mu1] = bases[0][c];
        Monomial p(C.num_vars, 0), q(C.num_vars, 0);
        p[I[0]] = 1;
        p[n + 1 + I[1]] = 1; // x_a y_b
        q[I[1]] = 1;
        q[n + 1 + I[0]] = 1; // x_b y_a
        aug[0][c] = {Term{1, p}, Term{-1, q}};
    }
    C.diff.push_back(std::move(aug));

    for (int h = 1; h < n; ++h) {
        std::map<std::pair<std::vector<int>, int>, int> pos;
        for (size_t p = 0; p < bases[h - 1].size(); ++p)
            pos[bases[h - 1][p]] = static_cast<int>(p);
        PolyMatrix d(bases[h - 1].size(), std::vector<Entry>(bases[h].size()));
        for (size_t c = 0; c < bases[h].size(); ++c) {
            const auto& [I, mu1] = bases[h][c];
            const int mu2 = h - mu1;
            for (int l = 1; l <= h + 2; ++l) {
                std::vector<int> J = I;
                J.erase(J.begin() + (l - 1));
                const long long sign = (l % 2 == 1) ? 1 : -1; // (-1)^{l+1}
                if (mu1 >= 1) { // contract against x, drop one row slot
                    Monomial q(C.num_vars, 0);
                    q[I[l - 1]] = 1;
                    d[pos.at({J, mu1 - 1})][c].push_back({sign, q});
                }
                if (mu2 >= 1) { // contract against y, drop one column slot
                    Monomial q(C.num_vars, 0);
                    q[n + 1 + I[l - 1]] = 1;
                    d[pos.at({J, mu1})][c].push_back({sign, q});
                }
            }
        }
        C.diff.push_back(std::move(d));
    }
    return C;
}

// ------------------------------------------------------------ strand slices

// Bidegree (x-degree, y-degree) of every generator, per homological degree.
using GenBidegrees = std::vector<std::vector<std::pair<int, int>>>;

static std::pair<int, int> split_bidegree(const Monomial& m, int n) {
    int a = 0, b = 0;
    for (int i = 0; i <= n; ++i) a += m[i];
    for (int i = 0; i <= n; ++i) b += m[n + 1 + i];
    return {a, b};
}

// Dimensions (position 0 = the ring slice, position h+1 = F_h slice) and
// differential ranks (r[h] = rank of the diff[h] slice) in bidegree (a, b).
static void strand_dims_and_ranks(const GradedComplex& C,
                                  const GenBidegrees& bideg, int n, int a,
                                  int b, std::vector<long long>& dims,
                                  std::vector<long long>& ranks) {
    const int len = static_cast<int>(C.ranks.size());
    // basis of each sliced module: (generator, x-monomial, y-monomial)
    struct Slice {
        std::vector<std::tuple<int, int, int>> basis; // gen, x index, y index
        std::map<std::tuple<int, int, int>, int> pos;
        std::vector<std::vector<Monomial>> xm, ym; // per generator
    };
    // monomial tables per degree
    std::map<int, std::vector<Monomial>> mono_tab;
    std::map<int, std::map<Monomial, int>> mono_pos;
    auto table = [&](int deg) -> const std::vector<Monomial>& {
        auto it = mono_tab.find(deg);
        if (it == mono_tab.end()) {
            it = mono_tab.emplace(deg, monomials_of_degree(n + 1, deg)).first;
            auto& mp = mono_pos[deg];
            for (size_t i = 0; i < it->second.size(); ++i)
                mp[it->second[i]] = static_cast<int>(i);
        }
        return it->second;
    };

    // slice[0] = ring, slice[h+1] = F_h
    std::vector<std::vector<std::tuple<int, int, int>>> basis(len + 1);
    std::vector<std::map<std::tuple<int, int, int>, int>> pos(len + 1);
    auto build = [&](int slot, const std::vector<std::pair<int, int>>& gens) {
        for (size_t g = 0; g < gens.size(); ++g) {
            const int xa = a - gens[g].first, yb = b - gens[g].second;
            if (xa < 0 || yb < 0) continue;
            const auto nx = static_cast<int>(table(xa).size());
            const auto ny = static_cast<int>(table(yb).size());
            for (int xi = 0; xi < nx; ++xi)
                for (int yi = 0; yi < ny; ++yi) {
                    pos[slot][{static_cast<int>(g), xi, yi}] =
                        static_cast<int>(basis[slot].size());
                    basis[slot].push_back({static_cast<int>(g), xi, yi});
                }
        }
    };
    build(0, {{0, 0}}); // the ring: one generator in bidegree (0, 0)
    for (int h = 0; h < len; ++h) build(h + 1, bideg[h]);

    dims.assign(len + 1, 0);
    for (int s = 0; s <= len; ++s)
        dims[s] = static_cast<long long>(basis[s].size());

    ranks.assign(len, 0);
    for (int h = 0; h < len; ++h) {
        // diff[h] : slice[h+1] -> slice[h]
        std::vector<std::map<int, BigRat>> rows(basis[h].size());
        const auto& tgt_bideg =
            (h == 0) ? std::vector<std::pair<int, int>>{{0, 0}} : bideg[h - 1];
        for (size_t c = 0; c < basis[h + 1].size(); ++c) {
            const auto& [g, xi, yi] = basis[h + 1][c];
            const Monomial& mx = table(a - bideg[h][g].first)[xi];
            const Monomial& my = table(b - bideg[h][g].second)[yi];
            for (size_t rg = 0; rg < C.diff[h].size(); ++rg) {
                for (const Term& t : C.diff[h][rg][g]) {
                    // split the entry monomial into x and y factors
                    Monomial qx(n + 1, 0), qy(n + 1, 0);
                    for (int i = 0; i <= n; ++i) {
                        qx[i] = t.mono[i];
                        qy[i] = t.mono[n + 1 + i];
                    }
                    const Monomial px = mono_mul(mx, qx);
                    const Monomial py = mono_mul(my, qy);
                    const int txa = a - tgt_bideg[rg].first;
                    const int tyb = b - tgt_bideg[rg].second;
                    if (txa < 0 || tyb < 0) continue;
                    table(txa);
                    table(tyb);
                    const int pxi = mono_pos[txa].at(px);
                    const int pyi = mono_pos[tyb].at(py);
                    const int r = pos[h].at({static_cast<int>(rg), pxi, pyi});
                    rows[r][static_cast<int>(c)] += BigRat(t.coeff);
                    if (rows[r][static_cast<int>(c)] == 0)
                        rows[r].erase(static_cast<int>(c));
                }
            }
        }
        ranks[h] = sparse_rank(std::move(rows));
    }
}

static bool strand_exact(const GradedComplex& C, const GenBidegrees& bideg,
                         int n, int a, int b) {
    std::vector<long long> dims, ranks;
    strand_dims_and_ranks(C, bideg, n, a, b, dims, ranks);
    const int len = static_cast<int>(C.ranks.size());
    for (int h = 0; h < len; ++h) {
        const long long next = (h + 1 < len) ? ranks[h + 1] : 0;
        if (dims[h + 1] - ranks[h] != next) return false;
    }
    return true;
}

bool en_bidegree_exact(int n, int amax, int bmax) {
    const GradedComplex C = eagon_northcott(n);
    GenBidegrees bideg(C.ranks.size());
    for (int h = 0; h < static_cast<int>(C.ranks.size()); ++h)
        for (const auto& [I, mu1] : en_basis(n, h))
            bideg[h].push_back({mu1 + 1, h - mu1 + 1});
    std::atomic<bool> ok{true};
    parallel_for(static_cast<size_t>(amax + 1) * (bmax + 1), [&](size_t t) {
        if (!ok.load()) return;
        const int a = static_cast<int>(t) / (bmax + 1);
        const int b = static_cast<int>(t) % (bmax + 1);
        if (!strand_exact(C, bideg, n, a, b)) ok.store(false);
    });
    return ok.load();
}

// ------------------------------------------------- degenerate Beilinson data

BeilinsonObject beilinson_degenerate_object(int n, int d) {
    if (n < 1 || d < 0)
        throw std::invalid_argument("beilinson_degenerate_object: bad input");
    BeilinsonObject obj;
    obj.n = n;
    obj.d = d;
    std::map<int, Int> counts; // i -> multiplicity
    for (const Monomial& m : monomials_of_degree(n + 1, d)) {
        BeilinsonBlock blk;
        blk.x_monomial = m;
        blk.min_index = n; // the unit monomial keeps the whole ring
        for (int i = 0; i <= n; ++i)
            if (m[i] > 0) {
                blk.min_index = i;
                break;
            }
        for (int j = blk.min_index + 1; j <= n; ++j) blk.killed.push_back(j);
        counts[n - 1 - blk.min_index] += 1;
        obj.blocks.push_back(std::move(blk));
    }
    for (const auto& [i, mult] : counts) obj.summands.push_back({i, mult});

    obj.hilbert_ok = true;
    for (int t = 0; t <= d + n + 2; ++t)
        if (beilinson_hf(obj, t) != beilinson_hf_closed(n, d, t))
            obj.hilbert_ok = false;
    return obj;
}

Int beilinson_hf(const BeilinsonObject& obj, int t) {
    // each block is a polynomial ring in min_index + 1 variables
    Int total = 0;
    for (const auto& blk : obj.blocks)
        total += binomial(t + blk.min_index, blk.min_index);
    return total;
}

Int beilinson_hf_closed(int n, int d, int t) {
    if (d == 0) return binomial(t + n, n); // single structure-sheaf block
    Int total = 0;
    for (int i = -1; i <= n - 1; ++i)
        total += binomial(d + i, d - 1) * binomial(t + n - i - 1, n - i - 1);
    return total;
}

bool beilinson_image_rank_check(int n, int d, int t) {
    const GradedComplex C = cellular_complex(yn_build(n), xy_ideal(n));
    GenBidegrees bideg(C.ranks.size());
    const CellComplex X = yn_build(n);
    for (const auto& f : X.faces)
        bideg[f.dim].push_back(split_bidegree(f.label, n));
    std::vector<long long> dims, ranks;
    strand_dims_and_ranks(C, bideg, n, d, t, dims, ranks);
    const Int coker = Int(dims[0]) - Int(ranks[0]);
    return coker == beilinson_hf(beilinson_degenerate_object(n, d), t);
}

bool pushforward_strand_audit(int n, int d, int tmax) {
    const CellComplex X = yn_build(n);
    const GradedComplex C = cellular_complex(X, xy_ideal(n));
    GenBidegrees bideg(C.ranks.size());
    for (const auto& f : X.faces)
        bideg[f.dim].push_back(split_bidegree(f.label, n));
    std::atomic<bool> ok{true};
    parallel_for(static_cast<size_t>(tmax + 1), [&](size_t t) {
        if (!strand_exact(C, bideg, n, d, static_cast<int>(t)))
            ok.store(false);
    });
    return ok.load();
}

std::pair<Int, Int> p1_stalk_dims(int d) {
    const BeilinsonObject obj = beilinson_degenerate_object(1, d);
    Int at_point = 0, generic = 0;
    for (const auto& blk : obj.blocks) {
        at_point += 1; // every block's support contains {y_1 = 0}
        if (blk.killed.empty()) generic += 1; // only full-ring blocks are global
    }
    return {at_point, generic};
}

std::vector<BlockMap> beilinson_degenerate_morphism(int n, int e, int k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("beilinson_degenerate_morphism: bad k");
    std::vector<BlockMap> out;
    for (const Monomial& m : monomials_of_degree(n + 1, e)) {
        BlockMap bm;
        bm.source = m;
        bm.target = m;
        bm.target[k] += 1;
        bm.identity = (m[k] > 0);
        out.push_back(std::move(bm));
    }
    return out;
}

} // namespace homocat
