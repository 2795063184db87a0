#include "lgk/rootdata.hpp"

#include <deque>
#include <map>
#include <set>
#include <string>

namespace lgk {

std::vector<WeylElement> weyl_group(const BasedRootDatum& b, std::size_t cap) {
    const std::size_t l = b.simple.size();
    std::vector<IntMatrix> refl;
    std::vector<std::vector<std::size_t>> refl_perm;
    for (auto s : b.simple) {
        refl.push_back(reflection_matrix(b, s));
        refl_perm.push_back(root_permutation(b, refl.back()));
    }
    std::vector<std::size_t> id_perm(b.roots.size());
    for (std::size_t i = 0; i < id_perm.size(); ++i) id_perm[i] = i;

    std::vector<WeylElement> out;
    std::map<std::vector<std::size_t>, std::size_t> seen;
    if (cap == 0) throw CapExceeded("Weyl group enumeration exceeded cap 0");
    out.push_back({IntMatrix::identity(b.rank()), {}, id_perm});
    seen.emplace(id_perm, 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t j = 0; j < l; ++j) {
            const auto& wp = out[k].permutation;
            std::vector<std::size_t> perm(wp.size());
            for (std::size_t i = 0; i < wp.size(); ++i) perm[i] = wp[refl_perm[j][i]];
            if (seen.count(perm)) continue;
            if (out.size() >= cap) throw CapExceeded("Weyl group enumeration exceeded cap " + std::to_string(cap));
            std::vector<std::size_t> word = out[k].word;
            word.push_back(j);
            seen.emplace(perm, out.size());
            out.push_back({out[k].matrix * refl[j], std::move(word), std::move(perm)});
        }
    }
    return out;
}

IntMatrix weyl_matrix(const BasedRootDatum& b, const std::vector<std::size_t>& word) {
    IntMatrix w = IntMatrix::identity(b.rank());
    for (auto j : word) {
        if (j >= b.simple.size()) throw std::invalid_argument("weyl_matrix: simple position " + std::to_string(j) + " out of range");
        w = w * reflection_matrix(b, b.simple[j]);
    }
    return w;
}

namespace {

// Index of the first simple position j with w(alpha_j) negative (ascend ==
// false) or positive (ascend == true), or l if there is none.
std::size_t find_simple(const BasedRootDatum& b, const IntMatrix& w, const std::map<IntVec, bool>& sign, bool ascend) {
    for (std::size_t j = 0; j < b.simple.size(); ++j) {
        auto it = sign.find(w.apply(b.roots[b.simple[j]]));
        if (it == sign.end()) throw std::invalid_argument("matrix does not permute the roots");
        if (it->second == ascend) return j;
    }
    return b.simple.size();
}

std::map<IntVec, bool> root_signs(const BasedRootDatum& b) {
    const auto pos = positive_roots(b);
    const std::set<std::size_t> p(pos.begin(), pos.end());
    std::map<IntVec, bool> sign;
    for (std::size_t i = 0; i < b.roots.size(); ++i) sign.emplace(b.roots[i], p.count(i) > 0);
    return sign;
}

}  // namespace

std::vector<std::size_t> reduced_word(const BasedRootDatum& b, const IntMatrix& w) {
    const auto sign = root_signs(b);
    const IntMatrix id = IntMatrix::identity(b.rank());
    std::vector<std::size_t> rev;
    IntMatrix u = w;
    while (true) {
        const std::size_t j = find_simple(b, u, sign, false);
        if (j == b.simple.size()) break;
        if (rev.size() > b.roots.size()) throw std::invalid_argument("reduced_word: not a Weyl group element");
        u = u * reflection_matrix(b, b.simple[j]);
        rev.push_back(j);
    }
    if (u != id) throw std::invalid_argument("reduced_word: matrix is not in the Weyl group");
    return {rev.rbegin(), rev.rend()};
}

IntMatrix longest_element(const BasedRootDatum& b) {
    const auto sign = root_signs(b);
    IntMatrix w = IntMatrix::identity(b.rank());
    while (true) {
        const std::size_t j = find_simple(b, w, sign, true);
        if (j == b.simple.size()) return w;
        w = w * reflection_matrix(b, b.simple[j]);
    }
}

}  // namespace lgk
