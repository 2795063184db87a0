#pragma once

// Independent reference computations and seeded generators for the tests.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lgk/gamma_module.hpp"
#include "lgk/rootdata.hpp"

namespace oracle {

using lgk::FiniteGroup;
using lgk::GammaModule;
using lgk::Int;
using lgk::IntMatrix;
using lgk::IntVec;

inline Int minor(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s.determinant();
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

/// Invariant factors (including 1s) from gcds of k x k minors: d_k / d_{k-1}.
inline IntVec determinantal_invariants(const IntMatrix& m) {
    IntVec out;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Int g = 0;
        subsets(m.rows(), k, [&](const std::vector<std::size_t>& r) {
            subsets(m.cols(), k, [&](const std::vector<std::size_t>& c) { g = gcd(g, minor(m, r, c)); });
        });
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/// Group Z^rows / im(m) from determinantal divisors.
inline lgk::FinAbGroup cokernel_by_minors(const IntMatrix& m) {
    const IntVec inv = determinantal_invariants(m);
    IntVec torsion;
    for (const auto& d : inv)
        if (d != 1) torsion.push_back(d);
    return lgk::FinAbGroup(m.rows() - inv.size(), torsion);
}

inline IntMatrix random_matrix(std::size_t r, std::size_t c, long bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) {
        if (n == 1 && rng() % 2) u(0, 0) = -1;
        return u;
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> k(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        u.add_row_multiple(a, b, k(rng));
        if (rng() % 4 == 0) u.swap_rows(a, b);
    }
    return u;
}

/// Small finite groups: cyclic of order 1..6, Z/2 x Z/2, S_3.
inline std::vector<FiniteGroup> small_groups() {
    std::vector<FiniteGroup> out;
    for (std::size_t n = 1; n <= 6; ++n) out.push_back(FiniteGroup::cyclic(n));
    out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    // S_3 as permutations of {0,1,2}, elements listed in a fixed order.
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    out.push_back(FiniteGroup(table));
    return out;
}

/// Subgroups generated by single elements.
inline std::vector<std::vector<std::size_t>> cyclic_subgroups(const FiniteGroup& g) {
    std::set<std::vector<std::size_t>> found;
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::set<std::size_t> h{g.identity()};
        for (std::size_t y = x; y != g.identity(); y = g.mul(y, x)) h.insert(y);
        found.insert({h.begin(), h.end()});
    }
    found.insert([&] {
        std::vector<std::size_t> all(g.order());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }());
    return {found.begin(), found.end()};
}

/// Permutation action of g on the left cosets of h.
inline GammaModule coset_module(const FiniteGroup& g, const std::vector<std::size_t>& h) {
    std::vector<std::set<std::size_t>> cosets;
    std::vector<std::size_t> which(g.order(), g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (which[x] != g.order()) continue;
        std::set<std::size_t> c;
        for (auto y : h) c.insert(g.mul(x, y));
        for (auto y : c) which[y] = cosets.size();
        cosets.push_back(c);
    }
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::vector<std::size_t> p;
        for (const auto& c : cosets) p.push_back(which[g.mul(x, *c.begin())]);
        perms.push_back(p);
    }
    return GammaModule::permutation(g, perms);
}

/// The sublattice {sum = 0} of a permutation module, basis e_i - e_0.
inline GammaModule augmentation_kernel(const GammaModule& perm) {
    const std::size_t n = perm.rank();
    std::vector<IntMatrix> action;
    for (const auto& a : perm.actions()) {
        IntMatrix m(n - 1, n - 1);
        // image of (e_i - e_0) = e_{p(i)} - e_{p(0)} written in the basis e_j - e_0.
        for (std::size_t i = 1; i < n; ++i) {
            IntVec v(n, Int(0));
            for (std::size_t r = 0; r < n; ++r) v[r] = a(r, i) - a(r, 0);
            for (std::size_t j = 1; j < n; ++j) m(j - 1, i - 1) = v[j];
        }
        action.push_back(m);
    }
    return GammaModule(n - 1, perm.group(), action);
}

/// Conjugates every action matrix by a unimodular change of basis.
inline GammaModule conjugate(const GammaModule& m, const IntMatrix& p) {
    const IntMatrix pi = lgk::unimodular_inverse(p);
    std::vector<IntMatrix> action;
    for (const auto& a : m.actions()) action.push_back(p * a * pi);
    return GammaModule(m.rank(), m.group(), action);
}

/// Random module of rank <= max_rank over a random small group, assembled from
/// permutation modules, augmentation kernels, duals and sign twists, then
/// disguised by a random unimodular basis change.
inline GammaModule random_module_over(const FiniteGroup& g, std::mt19937_64& rng, std::size_t max_rank = 4) {
    const auto subs = cyclic_subgroups(g);
    GammaModule acc = GammaModule::trivial(0, g);
    for (int attempt = 0; attempt < 8 && acc.rank() < max_rank; ++attempt) {
        const auto& h = subs[rng() % subs.size()];
        GammaModule block = coset_module(g, h);
        switch (rng() % 4) {
            case 0: break;
            case 1:
                if (block.rank() > 1) block = augmentation_kernel(block);
                break;
            case 2:
                if (block.rank() > 1) block = augmentation_kernel(block).dual();
                break;
            case 3: {
                // Sign twist through the parity of the coset permutation.
                std::vector<IntMatrix> act;
                for (const auto& a : block.actions()) act.push_back(a.determinant() * a);
                block = GammaModule(block.rank(), g, act);
                break;
            }
        }
        if (acc.rank() + block.rank() > max_rank) continue;
        acc = acc.direct_sum(block);
    }
    if (acc.rank() == 0) acc = GammaModule::trivial(1, g);
    return conjugate(acc, random_unimodular(acc.rank(), rng));
}

inline GammaModule random_module(std::mt19937_64& rng, std::size_t max_rank = 4) {
    const auto groups = small_groups();
    return random_module_over(groups[rng() % groups.size()], rng, max_rank);
}

/// Order of the torsion of Z^n / span(columns) counted through a finite
/// quotient: |(Z/N)^n / image| for an exponent N killing the torsion, when the
/// relations have full rank.
inline Int finite_cokernel_order_by_enumeration(const IntMatrix& rel, long modulus) {
    const std::size_t n = rel.rows();
    std::set<std::vector<long>> span{std::vector<long>(n, 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<long>> current(span.begin(), span.end());
        for (const auto& v : current)
            for (std::size_t j = 0; j < rel.cols(); ++j) {
                std::vector<long> w(n);
                for (std::size_t i = 0; i < n; ++i) {
                    const long r = mpz_fdiv_ui(Int(rel(i, j)).get_mpz_t(), modulus);
                    w[i] = (v[i] + r) % modulus;
                }
                if (span.insert(w).second) grew = true;
            }
    }
    Int total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= modulus;
    return total / Int(static_cast<unsigned long>(span.size()));
}

struct Named {
    std::string name;
    lgk::BasedRootDatum datum;
};

/// Every preset with parameters up to `max_n`, plus a few products and
/// restrictions.
inline std::vector<Named> preset_zoo(std::size_t max_n = 8) {
    using namespace lgk::presets;
    std::vector<Named> out;
    auto add = [&](std::string name, lgk::BasedRootDatum b) { out.push_back({std::move(name), std::move(b)}); };
    for (std::size_t r = 0; r <= 3; ++r) add("Torus" + std::to_string(r), split_torus(r));
    add("NormOne", norm_one_torus());
    for (std::size_t n = 1; n <= max_n; ++n) {
        add("GL" + std::to_string(n), gl(n));
        add("SL" + std::to_string(n), sl(n));
        add("PGL" + std::to_string(n), pgl(n));
    }
    for (std::size_t m = 2; m <= max_n; m += 2) add("Sp" + std::to_string(m), sp(m));
    for (std::size_t m = 2; m <= max_n; ++m) add("SO" + std::to_string(m), so(m));
    for (std::size_t n = 2; n <= max_n; ++n) add("SU" + std::to_string(n), quasi_split_su(n));
    for (std::size_t k = 1; k <= 4; ++k) add("ResGm" + std::to_string(k), lgk::weil_restriction(split_torus(1), k));
    add("ResSL2", lgk::weil_restriction(sl(2), 2));
    add("ResSL3", lgk::weil_restriction(sl(3), 2));
    add("ResSU3", lgk::weil_restriction(quasi_split_su(3), 2));
    add("SL2xPGL3", lgk::product(sl(2), pgl(3)));
    add("SU3xNormOne", lgk::product(quasi_split_su(3), norm_one_torus()));
    add("Sp4xResGm3", lgk::product(sp(4), lgk::weil_restriction(split_torus(1), 3)));
    return out;
}

/// |W| for the irreducible types by the standard product formulas.
inline Int factorial(std::size_t n) {
    Int f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

inline Int weyl_order_a(std::size_t l) { return factorial(l + 1); }
inline Int weyl_order_bc(std::size_t l) { return (Int(1) << static_cast<mp_bitcnt_t>(l)) * factorial(l); }
inline Int weyl_order_d(std::size_t l) { return (Int(1) << static_cast<mp_bitcnt_t>(l - 1)) * factorial(l); }

/// Points z of X (x) Q/Z with entries k/n that pair integrally with every
/// coroot: the n-torsion of the center of the dual group (trivial Galois).
inline std::vector<lgk::RatVec> dual_center_points(const lgk::BasedRootDatum& b, long n) {
    const std::size_t r = b.rank();
    std::vector<lgk::RatVec> out;
    std::vector<long> k(r, 0);
    while (true) {
        lgk::RatVec z;
        for (auto x : k) z.push_back(lgk::Rat(x, n));
        for (auto& q : z) q.canonicalize();
        bool central = true;
        for (const auto& c : b.coroots)
            if (lgk::dot(c, z).get_den() != 1) central = false;
        if (central) out.push_back(z);
        std::size_t i = 0;
        while (i < r && ++k[i] == n) k[i++] = 0;
        if (i == r) break;
    }
    return out;
}

/// <lambda, z> reduced into [0, 1).
inline lgk::Rat character_value(const IntVec& lambda, const lgk::RatVec& z) {
    lgk::Rat v = lgk::dot(lambda, z);
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    v -= f;
    return v;
}

}  // namespace oracle
