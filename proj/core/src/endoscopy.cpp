#include "lgk/param.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace lgk {

Twist Twist::trivial(const BasedRootDatum& b) {
    Twist t{b.galois(), {}};
    for (std::size_t q = 0; q < b.galois().order(); ++q) t.images.push_back({IntMatrix::identity(b.rank()), q});
    return t;
}

Twist Twist::longest_weyl(const BasedRootDatum& b) {
    if (!b.galois().is_trivial()) throw std::invalid_argument("longest-Weyl twist needs a split datum");
    return Twist{FiniteGroup::cyclic(2), {{IntMatrix::identity(b.rank()), 0}, {longest_element(b), 0}}};
}

IntMatrix Twist::matrix(const BasedRootDatum& b, std::size_t g) const { return images.at(g).weyl * b.lattice.action(images.at(g).galois); }

namespace {

void check_twist(const BasedRootDatum& b, const Twist& twist) {
    if (twist.images.size() != twist.group.order()) throw std::invalid_argument("twist: need one image per group element");
    std::vector<std::size_t> q;
    for (const auto& im : twist.images) {
        if (im.galois >= b.galois().order()) throw std::invalid_argument("twist: Galois index out of range");
        if (im.weyl.rows() != b.rank() || im.weyl.cols() != b.rank()) throw std::invalid_argument("twist: Weyl matrix has the wrong shape");
        reduced_word(b, im.weyl);
        q.push_back(im.galois);
    }
    if (!is_homomorphism(twist.group, b.galois(), q)) throw std::invalid_argument("twist: Galois parts are not a homomorphism");
    for (std::size_t g = 0; g < twist.group.order(); ++g)
        for (std::size_t h = 0; h < twist.group.order(); ++h)
            if (twist.matrix(b, g) * twist.matrix(b, h) != twist.matrix(b, twist.group.mul(g, h)))
                throw std::invalid_argument("twist: images do not multiply like the group");
}

std::vector<IntVec> candidate_covectors(const BasedRootDatum& b) {
    std::vector<IntVec> out;
    IntVec rho2 = zero_vector(b.rank());
    for (auto i : positive_roots(b)) rho2 = rho2 + b.coroots[i];
    out.push_back(rho2);
    for (long m = 2; m <= 64; ++m) {
        IntVec v(b.rank());
        Int x = 1;
        for (auto& e : v) {
            e = x;
            x *= m;
        }
        out.push_back(v);
    }
    return out;
}

bool regular(const std::vector<IntVec>& roots, const IntVec& xi) {
    return std::all_of(roots.begin(), roots.end(), [&](const IntVec& r) { return dot(r, xi) != 0; });
}

}  // namespace

EndoscopicDatum endoscopic_datum(const BasedRootDatum& b, const TorusElement& s, const Twist& twist) {
    require_valid(b);
    if (s.rank() != b.rank()) throw std::invalid_argument("endoscopic_datum: s has the wrong rank");
    check_twist(b, twist);
    const std::size_t n = b.rank();

    EndoscopicDatum out;
    out.s = s;
    out.kernel_roots = centralizer_roots(dual(b), s);
    std::vector<IntVec> roots, coroots;
    std::map<IntVec, std::size_t> index;
    for (auto i : out.kernel_roots) {
        index.emplace(b.roots[i], roots.size());
        roots.push_back(b.roots[i]);
        coroots.push_back(b.coroots[i]);
    }

    std::vector<IntMatrix> mats;
    for (std::size_t g = 0; g < twist.group.order(); ++g) {
        IntMatrix m = twist.matrix(b, g);
        if (TorusElement(m.apply(s.circle), m.apply(s.radial)) != s)
            throw std::invalid_argument("endoscopic_datum: twist element " + std::to_string(g) + " does not fix s");
        for (const auto& r : roots)
            if (!index.count(m.apply(r)))
                throw std::invalid_argument("endoscopic_datum: twist element " + std::to_string(g) + " does not preserve the roots of H");
        mats.push_back(std::move(m));
    }

    // Positive system from a twist-invariant regular covector when one exists.
    const auto candidates = candidate_covectors(b);
    std::optional<IntVec> xi;
    for (const auto& c : candidates) {
        IntVec avg = zero_vector(n);
        for (const auto& m : mats) avg = avg + m.transpose().apply(c);
        if (regular(roots, avg)) {
            xi = avg;
            break;
        }
    }
    bool corrected = false;
    if (!xi) {
        for (const auto& c : candidates)
            if (regular(roots, c)) {
                xi = c;
                break;
            }
        corrected = true;
    }
    if (!xi) throw std::runtime_error("endoscopic_datum: no invariant order found");

    std::set<IntVec> positive;
    for (const auto& r : roots)
        if (dot(r, *xi) > 0) positive.insert(r);
    std::vector<std::size_t> simple_h;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!positive.count(roots[i])) continue;
        bool decomposable = false;
        for (const auto& p : positive)
            if (p != roots[i] && positive.count(roots[i] - p)) {
                decomposable = true;
                break;
            }
        if (!decomposable) simple_h.push_back(i);
    }
    std::map<std::size_t, std::size_t> rank_in_g;
    for (std::size_t k = 0; k < b.simple.size(); ++k) rank_in_g[b.simple[k]] = k;
    auto key = [&](std::size_t i) {
        auto it = rank_in_g.find(out.kernel_roots[i]);
        return it == rank_in_g.end() ? std::make_pair(1, out.kernel_roots[i]) : std::make_pair(0, it->second);
    };
    std::sort(simple_h.begin(), simple_h.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });

    if (corrected) {
        for (auto& m : mats) {
            IntMatrix u = m;
            for (bool moved = true; moved;) {
                moved = false;
                std::set<IntVec> image;
                for (const auto& p : positive) image.insert(u.apply(p));
                for (auto j : simple_h)
                    if (!image.count(roots[j])) {
                        IntMatrix refl = IntMatrix::identity(n);
                        for (std::size_t r = 0; r < n; ++r)
                            for (std::size_t c = 0; c < n; ++c) refl(r, c) -= roots[j][r] * coroots[j][c];
                        u = refl * u;
                        moved = true;
                        break;
                    }
            }
            m = std::move(u);
        }
        for (std::size_t g = 0; g < mats.size(); ++g)
            for (std::size_t h = 0; h < mats.size(); ++h)
                if (mats[g] * mats[h] != mats[twist.group.mul(g, h)])
                    throw std::runtime_error("endoscopic_datum: no invariant order found");
    }

    out.h = BasedRootDatum{GammaModule(n, twist.group, std::move(mats)), std::move(roots), std::move(coroots), std::move(simple_h)};
    require_valid(out.h);
    return out;
}

}  // namespace lgk
