#include "lgk/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace lgk {

namespace {

std::map<IntVec, std::size_t> root_index_map(const BasedRootDatum& b) {
    std::map<IntVec, std::size_t> idx;
    for (std::size_t i = 0; i < b.roots.size(); ++i) idx.emplace(b.roots[i], i);
    return idx;
}

std::string root_label(const BasedRootDatum& b, std::size_t i) {
    return "root #" + std::to_string(i) + " " + to_string(b.roots[i]);
}

}  // namespace

// --- validation ---------------------------------------------------------------

ValidationReport validate(const BasedRootDatum& b) {
    ValidationReport r;
    const std::size_t n = b.rank();
    if (b.roots.size() != b.coroots.size()) {
        r.add("root count " + std::to_string(b.roots.size()) + " != coroot count " + std::to_string(b.coroots.size()));
        return r;
    }
    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        if (b.roots[i].size() != n) r.add(root_label(b, i) + " has length " + std::to_string(b.roots[i].size()) + " != rank " + std::to_string(n));
        if (b.coroots[i].size() != n) r.add("coroot #" + std::to_string(i) + " has the wrong length");
    }
    for (auto s : b.simple)
        if (s >= b.roots.size()) r.add("simple index " + std::to_string(s) + " out of range");
    if (std::set<std::size_t>(b.simple.begin(), b.simple.end()).size() != b.simple.size())
        r.add("simple indices are not distinct");
    if (!r.ok()) return r;

    const auto idx = root_index_map(b);
    if (idx.size() != b.roots.size()) r.add("roots are not distinct");
    for (std::size_t i = 0; i < b.roots.size(); ++i)
        if (is_zero(b.roots[i])) r.add(root_label(b, i) + " is zero");
    if (!r.ok()) return r;

    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        const Int p = dot(b.roots[i], b.coroots[i]);
        if (p != 2) r.add("<alpha,alpha^v> = " + p.get_str() + " != 2 for " + root_label(b, i));
        if (idx.count(scale(2, b.roots[i]))) r.add("not reduced: 2 * " + root_label(b, i) + " is a root");
    }
    if (!r.ok()) return r;

    // Reflections permute R, dual reflections permute R^v compatibly.
    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        const IntVec& a = b.roots[i];
        const IntVec& av = b.coroots[i];
        for (std::size_t j = 0; j < b.roots.size(); ++j) {
            const IntVec img = b.roots[j] - scale(dot(b.roots[j], av), a);
            auto it = idx.find(img);
            if (it == idx.end()) {
                r.add("s_alpha(beta) = " + to_string(img) + " is not a root (alpha = " + root_label(b, i) + ", beta = " + root_label(b, j) + ")");
                continue;
            }
            const IntVec cimg = b.coroots[j] - scale(dot(a, b.coroots[j]), av);
            if (cimg != b.coroots[it->second])
                r.add("dual reflection of coroot #" + std::to_string(j) + " by " + root_label(b, i) + " is " + to_string(cimg) +
                      ", expected the coroot of root #" + std::to_string(it->second));
        }
    }
    if (!r.ok()) return r;

    // Simple roots form a base.
    if (!b.roots.empty() || !b.simple.empty()) {
        std::vector<IntVec> cols;
        for (auto s : b.simple) cols.push_back(b.roots[s]);
        const IntMatrix delta = IntMatrix::from_columns(cols, n);
        if (rank(delta) != b.simple.size()) r.add("simple roots are linearly dependent");
        else {
            const auto rows = to_rational_rows(delta);
            for (std::size_t i = 0; i < b.roots.size(); ++i) {
                const auto c = solve_rational(rows, to_rational(b.roots[i]));
                if (!c) {
                    r.add(root_label(b, i) + " is not in the span of the simple roots");
                    continue;
                }
                if (!is_integral(*c)) {
                    r.add(root_label(b, i) + " is not an integral combination of simple roots");
                    continue;
                }
                const bool nonneg = std::all_of(c->begin(), c->end(), [](const Rat& x) { return x >= 0; });
                const bool nonpos = std::all_of(c->begin(), c->end(), [](const Rat& x) { return x <= 0; });
                if (!nonneg && !nonpos) r.add(root_label(b, i) + " has mixed signs in simple coordinates " + to_string(*c));
            }
        }
    }
    if (!r.ok()) return r;

    // Galois action.
    const std::set<std::size_t> simple_set(b.simple.begin(), b.simple.end());
    for (std::size_t g = 0; g < b.galois().order(); ++g) {
        const IntMatrix& a = b.lattice.action(g);
        const IntMatrix ad = unimodular_inverse(a).transpose();
        for (std::size_t i = 0; i < b.roots.size(); ++i) {
            auto it = idx.find(a.apply(b.roots[i]));
            if (it == idx.end()) {
                r.add("Galois element " + std::to_string(g) + " maps " + root_label(b, i) + " outside R");
                continue;
            }
            if (ad.apply(b.coroots[i]) != b.coroots[it->second])
                r.add("Galois element " + std::to_string(g) + " does not map the coroot of " + root_label(b, i) + " to the coroot of its image");
            if (simple_set.count(i) && !simple_set.count(it->second))
                r.add("Galois element " + std::to_string(g) + " moves simple " + root_label(b, i) + " out of Delta");
        }
    }
    return r;
}

void require_valid(const BasedRootDatum& b) {
    const auto r = validate(b);
    if (r.ok()) return;
    std::string msg = "invalid based root datum:";
    for (const auto& v : r.violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
}

BasedRootDatum dual(const BasedRootDatum& b) {
    return BasedRootDatum{b.lattice.dual(), b.coroots, b.roots, b.simple};
}

// --- bookkeeping --------------------------------------------------------------

std::vector<IntVec> simple_coordinates(const BasedRootDatum& b) {
    std::vector<IntVec> cols;
    for (auto s : b.simple) cols.push_back(b.roots.at(s));
    const auto rows = to_rational_rows(IntMatrix::from_columns(cols, b.rank()));
    std::vector<IntVec> out;
    for (const auto& root : b.roots) {
        const auto c = solve_rational(rows, to_rational(root));
        if (!c || !is_integral(*c)) throw std::invalid_argument("simple_coordinates: root " + to_string(root) + " is not an integral combination of simple roots");
        out.push_back(to_integral(*c));
    }
    return out;
}

std::vector<std::size_t> positive_roots(const BasedRootDatum& b) {
    const auto coords = simple_coordinates(b);
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (std::all_of(coords[i].begin(), coords[i].end(), [](const Int& x) { return x >= 0; })) pos.push_back(i);
    return pos;
}

std::optional<std::size_t> find_root(const BasedRootDatum& b, const IntVec& v) {
    for (std::size_t i = 0; i < b.roots.size(); ++i)
        if (b.roots[i] == v) return i;
    return std::nullopt;
}

IntMatrix reflection_matrix(const BasedRootDatum& b, std::size_t i) {
    const std::size_t n = b.rank();
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) -= b.roots[i][r] * b.coroots[i][c];
    return m;
}

std::vector<std::size_t> root_permutation(const BasedRootDatum& b, const IntMatrix& m) {
    const auto idx = root_index_map(b);
    std::vector<std::size_t> perm(b.roots.size());
    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        auto it = idx.find(m.apply(b.roots[i]));
        if (it == idx.end()) throw std::invalid_argument("root_permutation: map does not preserve R");
        perm[i] = it->second;
    }
    return perm;
}

std::vector<std::size_t> galois_simple_permutation(const BasedRootDatum& b, std::size_t g) {
    const auto perm = root_permutation(b, b.lattice.action(g));
    std::vector<std::size_t> out(b.simple.size());
    for (std::size_t p = 0; p < b.simple.size(); ++p) {
        auto it = std::find(b.simple.begin(), b.simple.end(), perm[b.simple[p]]);
        if (it == b.simple.end()) throw std::invalid_argument("Galois action does not preserve the simple roots");
        out[p] = static_cast<std::size_t>(it - b.simple.begin());
    }
    return out;
}

std::vector<std::vector<std::size_t>> galois_orbits_on_simple(const BasedRootDatum& b) {
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t g = 0; g < b.galois().order(); ++g) perms.push_back(galois_simple_permutation(b, g));
    std::vector<bool> seen(b.simple.size(), false);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t p = 0; p < b.simple.size(); ++p) {
        if (seen[p]) continue;
        std::set<std::size_t> orbit;
        for (const auto& perm : perms) orbit.insert(perm[p]);
        for (auto q : orbit) seen[q] = true;
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

bool is_galois_stable(const BasedRootDatum& b, const std::vector<std::size_t>& subset) {
    const std::set<std::size_t> s(subset.begin(), subset.end());
    for (std::size_t g = 0; g < b.galois().order(); ++g) {
        const auto perm = galois_simple_permutation(b, g);
        for (auto p : subset)
            if (!s.count(perm.at(p))) return false;
    }
    return true;
}

// --- constructions ------------------------------------------------------------

BasedRootDatum from_simple_system(GammaModule lattice, const std::vector<IntVec>& simple_roots,
                                  const std::vector<IntVec>& simple_coroots) {
    const std::size_t l = simple_roots.size();
    if (simple_coroots.size() != l) throw std::invalid_argument("from_simple_system: root/coroot count mismatch");
    struct Entry {
        IntVec root, coroot, coords;
    };
    std::vector<Entry> all;
    std::map<IntVec, std::size_t> seen;
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < l; ++i) {
        all.push_back({simple_roots[i], simple_coroots[i], unit_vector(l, i)});
        seen.emplace(simple_roots[i], i);
        queue.push_back(i);
    }
    while (!queue.empty()) {
        const Entry e = all[queue.front()];
        queue.pop_front();
        for (std::size_t i = 0; i < l; ++i) {
            const Int k = dot(e.root, simple_coroots[i]);
            IntVec root = e.root - scale(k, simple_roots[i]);
            if (seen.count(root)) continue;
            IntVec coroot = e.coroot - scale(dot(simple_roots[i], e.coroot), simple_coroots[i]);
            IntVec coords = e.coords;
            coords[i] -= k;
            seen.emplace(root, all.size());
            queue.push_back(all.size());
            all.push_back({std::move(root), std::move(coroot), std::move(coords)});
        }
    }
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (std::all_of(all[i].coords.begin(), all[i].coords.end(), [](const Int& x) { return x >= 0; })) pos.push_back(i);
    auto height = [&](std::size_t i) {
        Int h = 0;
        for (const auto& c : all[i].coords) h += c;
        return h;
    };
    std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
        const Int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return all[a].coords > all[b].coords;
    });
    BasedRootDatum d{std::move(lattice), {}, {}, {}};
    for (auto i : pos) {
        d.roots.push_back(all[i].root);
        d.coroots.push_back(all[i].coroot);
    }
    for (auto i : pos) {
        d.roots.push_back(-all[i].root);
        d.coroots.push_back(-all[i].coroot);
    }
    for (std::size_t i = 0; i < l; ++i) d.simple.push_back(i);
    if (d.roots.size() != all.size()) throw std::logic_error("from_simple_system: root system is not symmetric");
    return d;
}

SublatticeSpec root_sublattice(const BasedRootDatum& b) {
    IntMatrix rows = IntMatrix::from_rows(b.roots, b.rank());
    IntMatrix h = hermite_rows(rows);
    if (h.rows() != b.rank()) throw std::invalid_argument("root_sublattice: ZR has infinite index in X (datum is not semisimple)");
    return {h};
}

void check_sublattice(const BasedRootDatum& b, const SublatticeSpec& y) {
    const std::size_t n = b.rank();
    if (y.basis.cols() != n) throw std::invalid_argument("sublattice: basis vectors have the wrong length");
    const IntMatrix h = hermite_rows(y.basis);
    if (h.rows() != n) throw std::invalid_argument("sublattice: Y has infinite index in X");
    const IntMatrix cols = h.transpose();
    for (const auto& root : b.roots)
        if (!solve_integral(cols, root)) throw std::invalid_argument("sublattice: Y does not contain the root " + to_string(root));
    for (const auto& a : b.lattice.actions())
        for (std::size_t i = 0; i < h.rows(); ++i)
            if (!solve_integral(cols, a.apply(h.row(i)))) throw std::invalid_argument("sublattice: Y is not Gamma-stable");
}

LeviResult levi_subdatum(const BasedRootDatum& b, const std::vector<std::size_t>& subset) {
    std::set<std::size_t> s;
    for (auto p : subset) {
        if (p >= b.simple.size()) throw std::invalid_argument("levi_subdatum: subset position " + std::to_string(p) + " out of range");
        s.insert(p);
    }
    const auto coords = simple_coordinates(b);
    LeviResult out{BasedRootDatum{b.lattice, {}, {}, {}}, false};
    std::map<std::size_t, std::size_t> new_index;
    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        bool inside = true;
        for (std::size_t p = 0; p < coords[i].size() && inside; ++p)
            if (coords[i][p] != 0 && !s.count(p)) inside = false;
        if (!inside) continue;
        new_index[i] = out.datum.roots.size();
        out.datum.roots.push_back(b.roots[i]);
        out.datum.coroots.push_back(b.coroots[i]);
    }
    for (auto p : s) out.datum.simple.push_back(new_index.at(b.simple[p]));
    if (!is_galois_stable(b, std::vector<std::size_t>(s.begin(), s.end()))) {
        out.datum.lattice = GammaModule::trivial(b.rank());
        out.action_dropped = true;
    }
    return out;
}

QuotientModule center_module(const BasedRootDatum& b) {
    return QuotientModule{b.lattice, IntMatrix::from_columns(b.roots, b.rank())};
}

BasedRootDatum quotient_datum(const BasedRootDatum& b, const SublatticeSpec& y) {
    check_sublattice(b, y);
    const std::size_t n = b.rank();
    const IntMatrix basis = hermite_rows(y.basis);
    const IntMatrix cols = basis.transpose();
    auto coords = [&](const IntVec& v) { return *solve_integral(cols, v); };

    std::vector<IntMatrix> action;
    for (const auto& a : b.lattice.actions()) {
        std::vector<IntVec> images;
        for (std::size_t i = 0; i < n; ++i) images.push_back(coords(a.apply(basis.row(i))));
        action.push_back(IntMatrix::from_columns(images, n));
    }
    BasedRootDatum q{GammaModule(n, b.galois(), std::move(action)), {}, {}, b.simple};
    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        q.roots.push_back(coords(b.roots[i]));
        q.coroots.push_back(basis.apply(b.coroots[i]));
    }
    return q;
}

BasedRootDatum product(const BasedRootDatum& a, const BasedRootDatum& b) {
    GammaModule la = a.lattice, lb = b.lattice;
    if (a.galois() != b.galois()) {
        const FiniteGroup g = FiniteGroup::direct_product(a.galois(), b.galois());
        const std::size_t nb = b.galois().order();
        std::vector<std::size_t> pa(g.order()), pb(g.order());
        for (std::size_t x = 0; x < g.order(); ++x) {
            pa[x] = x / nb;
            pb[x] = x % nb;
        }
        la = la.inflate(g, pa);
        lb = lb.inflate(g, pb);
    }
    BasedRootDatum p{la.direct_sum(lb), {}, {}, a.simple};
    auto pad = [](const IntVec& v, std::size_t before, std::size_t after) {
        IntVec out(before, Int(0));
        out.insert(out.end(), v.begin(), v.end());
        out.resize(before + v.size() + after, Int(0));
        return out;
    };
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        p.roots.push_back(pad(a.roots[i], 0, b.rank()));
        p.coroots.push_back(pad(a.coroots[i], 0, b.rank()));
    }
    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        p.roots.push_back(pad(b.roots[i], a.rank(), 0));
        p.coroots.push_back(pad(b.coroots[i], a.rank(), 0));
    }
    for (auto s : b.simple) p.simple.push_back(a.roots.size() + s);
    return p;
}

BasedRootDatum weil_restriction(const BasedRootDatum& b, const FiniteGroup& g, const std::vector<std::size_t>& embedding) {
    GammaModule induced = induce_module(b.lattice, g, embedding);
    const std::size_t blocks = g.order() / b.galois().order();
    const std::size_t n = b.rank();
    BasedRootDatum r{std::move(induced), {}, {}, {}};
    for (std::size_t k = 0; k < blocks; ++k) {
        for (std::size_t i = 0; i < b.roots.size(); ++i) {
            IntVec root(blocks * n, Int(0)), coroot(blocks * n, Int(0));
            for (std::size_t c = 0; c < n; ++c) {
                root[k * n + c] = b.roots[i][c];
                coroot[k * n + c] = b.coroots[i][c];
            }
            r.roots.push_back(std::move(root));
            r.coroots.push_back(std::move(coroot));
        }
        for (auto s : b.simple) r.simple.push_back(k * b.roots.size() + s);
    }
    return r;
}

BasedRootDatum weil_restriction(const BasedRootDatum& b, std::size_t index) {
    if (index == 0) throw std::invalid_argument("weil_restriction: index must be positive");
    const FiniteGroup g = FiniteGroup::direct_product(b.galois(), FiniteGroup::cyclic(index));
    std::vector<std::size_t> emb;
    for (std::size_t h = 0; h < b.galois().order(); ++h) emb.push_back(h * index);
    return weil_restriction(b, g, emb);
}

}  // namespace lgk
