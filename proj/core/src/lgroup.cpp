#include "lgk/lgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace lgk {

namespace {

RatVec galois_average(const BasedRootDatum& b, const IntVec& v) {
    RatVec sum = zero_rat_vector(b.rank());
    for (const auto& a : b.lattice.actions()) sum = sum + to_rational(a.apply(v));
    return scale(Rat(1, b.galois().order()), sum);
}

std::vector<std::size_t> normalized_subset(const BasedRootDatum& b, const std::vector<std::size_t>& s) {
    std::set<std::size_t> set;
    for (auto p : s) {
        if (p >= b.simple.size()) throw std::invalid_argument("simple position " + std::to_string(p) + " out of range");
        set.insert(p);
    }
    return {set.begin(), set.end()};
}

void require_stable(const BasedRootDatum& b, const std::vector<std::size_t>& s) {
    if (!is_galois_stable(b, s)) throw std::invalid_argument("subset of Delta is not Galois-stable");
}

bool outside_span(const IntVec& coords, const std::set<std::size_t>& s) {
    for (std::size_t p = 0; p < coords.size(); ++p)
        if (coords[p] != 0 && !s.count(p)) return true;
    return false;
}

}  // namespace

std::vector<ParabolicClass> parabolic_classes(const BasedRootDatum& b) {
    const auto orbits = galois_orbits_on_simple(b);
    if (orbits.size() >= 8 * sizeof(std::size_t)) throw std::invalid_argument("parabolic_classes: too many Galois orbits");
    std::vector<ParabolicClass> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << orbits.size()); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t k = 0; k < orbits.size(); ++k)
            if (mask >> k & 1) subset.insert(subset.end(), orbits[k].begin(), orbits[k].end());
        std::sort(subset.begin(), subset.end());
        out.push_back({std::move(subset)});
    }
    std::sort(out.begin(), out.end(), [](const ParabolicClass& x, const ParabolicClass& y) {
        if (x.subset.size() != y.subset.size()) return x.subset.size() < y.subset.size();
        return x.subset < y.subset;
    });
    return out;
}

std::vector<ParabolicClass> relevant_levis(const BasedRootDatum& b,
                                           const std::optional<std::vector<std::vector<std::size_t>>>& override_set) {
    auto all = parabolic_classes(b);
    if (!override_set) return all;
    std::set<std::vector<std::size_t>> wanted;
    for (const auto& s : *override_set) {
        auto norm = normalized_subset(b, s);
        require_stable(b, norm);
        wanted.insert(std::move(norm));
    }
    std::vector<ParabolicClass> out;
    for (auto& c : all)
        if (wanted.count(c.subset)) out.push_back(std::move(c));
    return out;
}

std::optional<WeylElement> levi_conjugator(const BasedRootDatum& b, const std::vector<std::size_t>& s1,
                                           const std::vector<std::size_t>& s2, std::size_t cap) {
    const auto a = normalized_subset(b, s1);
    const auto c = normalized_subset(b, s2);
    require_stable(b, a);
    require_stable(b, c);
    auto group = weyl_group(b, cap);
    if (a.size() != c.size()) return std::nullopt;
    std::set<std::size_t> target;
    for (auto p : c) target.insert(b.simple[p]);
    for (auto& w : group) {
        std::set<std::size_t> image;
        for (auto p : a) image.insert(w.permutation[b.simple[p]]);
        if (image != target) continue;
        bool fixed = true;
        for (const auto& g : b.lattice.actions())
            if (g * w.matrix != w.matrix * g) {
                fixed = false;
                break;
            }
        if (fixed) return std::move(w);
    }
    return std::nullopt;
}

RelativeData relative_root_datum(const BasedRootDatum& b) {
    RelativeData rel;
    std::vector<RatVec> rows;
    for (const auto& a : b.lattice.actions()) {
        const auto r = to_rational_rows(a - IntMatrix::identity(b.rank()));
        rows.insert(rows.end(), r.begin(), r.end());
    }
    rel.a_star_basis = rational_kernel(rows, b.rank());

    std::map<RatVec, std::size_t> index;
    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        RatVec a = galois_average(b, b.roots[i]);
        if (is_zero(a)) continue;
        auto [it, inserted] = index.emplace(a, rel.roots.size());
        if (inserted) {
            rel.roots.push_back(std::move(a));
            rel.fibers.emplace_back();
        }
        rel.fibers[it->second].push_back(i);
    }
    for (std::size_t k = 0; k < rel.roots.size(); ++k) {
        RatVec c = zero_rat_vector(b.rank());
        for (auto i : rel.fibers[k]) c = c + to_rational(b.coroots[i]);
        const Rat p = dot(rel.roots[k], c);
        if (p == 0) throw std::logic_error("relative_root_datum: degenerate coroot sum");
        rel.coroots.push_back(scale(Rat(2) / p, c));
    }
    for (auto s : b.simple) {
        const std::size_t k = index.at(galois_average(b, b.roots[s]));
        if (std::find(rel.simple.begin(), rel.simple.end(), k) == rel.simple.end()) rel.simple.push_back(k);
    }
    for (std::size_t k = 0; k < rel.roots.size(); ++k) {
        auto it = index.find(scale(Rat(2), rel.roots[k]));
        if (it != index.end()) rel.multipliable.emplace_back(k, it->second);
    }
    return rel;
}

std::vector<RatVec> relative_coroots_from_inner_product(const BasedRootDatum& b, const RelativeData& rel, std::size_t cap) {
    const std::size_t n = b.rank();
    IntMatrix gram(n, n);
    for (const auto& w : weyl_group(b, cap))
        for (const auto& g : b.lattice.actions()) {
            const IntMatrix h = w.matrix * g;
            gram = gram + h.transpose() * h;
        }
    std::vector<RatVec> out;
    for (const auto& a : rel.roots) {
        RatVec ga = zero_rat_vector(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ga[i] += Rat(gram(i, j)) * a[j];
        out.push_back(scale(Rat(2) / dot(a, ga), ga));
    }
    return out;
}

std::vector<RatVec> covector_space(const BasedRootDatum& b, const std::vector<std::size_t>& s) {
    std::vector<RatVec> rows;
    for (const auto& a : b.lattice.actions()) {
        const auto r = to_rational_rows(a - IntMatrix::identity(b.rank()));
        rows.insert(rows.end(), r.begin(), r.end());
    }
    for (auto p : normalized_subset(b, s)) rows.push_back(to_rational(b.coroots[b.simple[p]]));
    return rational_kernel(rows, b.rank());
}

void check_covector(const BasedRootDatum& b, const std::vector<std::size_t>& s, const RatVec& nu) {
    if (nu.size() != b.rank()) throw std::invalid_argument("covector has the wrong length");
    for (const auto& a : b.lattice.actions())
        if (a.apply(nu) != nu) throw std::invalid_argument("covector is not Galois-invariant");
    for (auto p : normalized_subset(b, s))
        if (dot(b.coroots[b.simple[p]], nu) != 0)
            throw std::invalid_argument("covector does not annihilate the coroot of simple position " + std::to_string(p));
}

bool relative_positive(const BasedRootDatum& b, const std::vector<std::size_t>& s, const RatVec& nu) {
    return relative_positive(b, relative_root_datum(b), s, nu);
}

bool relative_positive(const BasedRootDatum& b, const RelativeData& rel, const std::vector<std::size_t>& s, const RatVec& nu) {
    const auto subset = normalized_subset(b, s);
    require_stable(b, subset);
    check_covector(b, subset, nu);

    std::vector<RatVec> cols;
    for (auto k : rel.simple) cols.push_back(rel.roots[k]);
    std::vector<RatVec> rows(b.rank(), RatVec(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < b.rank(); ++i) rows[i][j] = cols[j][i];

    std::set<std::size_t> levi;
    for (auto p : subset) {
        const RatVec a = galois_average(b, b.roots[b.simple[p]]);
        for (std::size_t j = 0; j < rel.simple.size(); ++j)
            if (rel.roots[rel.simple[j]] == a) levi.insert(j);
    }
    for (std::size_t k = 0; k < rel.roots.size(); ++k) {
        const auto c = solve_rational(rows, rel.roots[k]);
        if (!c) throw std::logic_error("relative root outside the span of the relative simple roots");
        if (!std::all_of(c->begin(), c->end(), [](const Rat& x) { return x >= 0; })) continue;
        bool outside = false;
        for (std::size_t j = 0; j < c->size(); ++j)
            if ((*c)[j] != 0 && !levi.count(j)) outside = true;
        if (outside && dot(rel.coroots[k], nu) <= 0) return false;
    }
    return true;
}

bool absolute_positive(const BasedRootDatum& b, const std::vector<std::size_t>& s, const RatVec& nu) {
    const auto subset = normalized_subset(b, s);
    require_stable(b, subset);
    check_covector(b, subset, nu);
    const std::set<std::size_t> sset(subset.begin(), subset.end());
    const auto coords = simple_coordinates(b);
    for (auto i : positive_roots(b))
        if (outside_span(coords[i], sset) && dot(b.coroots[i], nu) <= 0) return false;
    return true;
}

RatVec random_covector(const BasedRootDatum& b, const std::vector<std::size_t>& s, std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    RatVec nu = zero_rat_vector(b.rank());
    for (const auto& v : covector_space(b, s)) {
        const Int d = common_denominator(v);
        nu = nu + scale(Rat(Int(dist(rng)) * d), v);
    }
    return nu;
}

}  // namespace lgk
