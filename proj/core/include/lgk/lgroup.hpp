#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "lgk/rootdata.hpp"

namespace lgk {

/// A Galois-stable subset of Delta, as sorted positions in `simple`.
struct ParabolicClass {
    std::vector<std::size_t> subset;

    friend bool operator==(const ParabolicClass& a, const ParabolicClass& b) { return a.subset == b.subset; }
};

/// All Galois-stable subsets of Delta, ordered by size and then
/// lexicographically.
std::vector<ParabolicClass> parabolic_classes(const BasedRootDatum& b);

/// Classes treated as relevant Levis. Without an override this is every
/// class (the quasi-split form); an override must list valid classes and is
/// returned in canonical order.
std::vector<ParabolicClass> relevant_levis(const BasedRootDatum& b,
                                           const std::optional<std::vector<std::vector<std::size_t>>>& override_set = std::nullopt);

/// First Weyl element (in enumeration order) that commutes with the Galois
/// action and maps the simple roots in S1 onto those in S2.
/// Throws CapExceeded if W is larger than `cap`.
std::optional<WeylElement> levi_conjugator(const BasedRootDatum& b, const std::vector<std::size_t>& s1,
                                           const std::vector<std::size_t>& s2, std::size_t cap = kDefaultWeylCap);

/// Restricted roots of the quasi-split form on the maximal split torus.
///
/// Characters of the split torus are modelled by Galois-invariant vectors of
/// X (x) Q; a root restricts to its Galois average. The coroot of a relative
/// root a is 2c / <a, c>, where c is the sum of the coroots of the absolute
/// roots restricting to a.
struct RelativeData {
    std::vector<RatVec> a_star_basis;
    std::vector<RatVec> roots;
    std::vector<RatVec> coroots;
    /// Absolute root indices restricting to each relative root.
    std::vector<std::vector<std::size_t>> fibers;
    /// Relative simple roots (indices into `roots`).
    std::vector<std::size_t> simple;
    /// Pairs (i, j) with roots[j] == 2 * roots[i].
    std::vector<std::pair<std::size_t, std::size_t>> multipliable;

    bool reduced() const noexcept { return multipliable.empty(); }
};

RelativeData relative_root_datum(const BasedRootDatum& b);

/// Relative coroots recomputed from an inner product averaged over W and the
/// Galois group: a^v = 2 G a / (a^T G a). Returned in the order of `rel.roots`.
std::vector<RatVec> relative_coroots_from_inner_product(const BasedRootDatum& b, const RelativeData& rel,
                                                        std::size_t cap = kDefaultWeylCap);

/// Basis of the Galois-invariant vectors of X (x) Q that pair to zero with
/// every coroot of S.
std::vector<RatVec> covector_space(const BasedRootDatum& b, const std::vector<std::size_t>& s);

/// Throws std::invalid_argument if nu is not Galois-invariant or does not
/// annihilate the coroots of S.
void check_covector(const BasedRootDatum& b, const std::vector<std::size_t>& s, const RatVec& nu);

/// <nu, a^v> > 0 for every positive relative root a outside the Levi of S.
bool relative_positive(const BasedRootDatum& b, const std::vector<std::size_t>& s, const RatVec& nu);
bool relative_positive(const BasedRootDatum& b, const RelativeData& rel, const std::vector<std::size_t>& s, const RatVec& nu);

/// <nu, beta^v> > 0 for every positive root beta outside the span of S.
bool absolute_positive(const BasedRootDatum& b, const std::vector<std::size_t>& s, const RatVec& nu);

/// Integral combination of a scaled basis of covector_space with
/// coefficients drawn uniformly from [-bound, bound].
RatVec random_covector(const BasedRootDatum& b, const std::vector<std::size_t>& s, std::mt19937_64& rng, long bound = 20);

}  // namespace lgk
