#pragma once

#include <vector>

#include "lgk/finite_group.hpp"
#include "lgk/int_matrix.hpp"
#include "lgk/zlat.hpp"

namespace lgk {

/// A free Z-module of finite rank with an action of a finite group, one
/// invertible integer matrix per group element (acting on column vectors).
///
/// Construction checks that the action is a homomorphism and that every
/// matrix has determinant +-1. Rank 0 is allowed.
class GammaModule {
public:
    GammaModule() = default;
    GammaModule(std::size_t rank, FiniteGroup group, std::vector<IntMatrix> action);

    /// Trivial action of `group` on Z^rank.
    static GammaModule trivial(std::size_t rank, FiniteGroup group = FiniteGroup::trivial());
    /// Z with the order-2 group acting by -1.
    static GammaModule sign();
    /// Z^n with `group` acting through a homomorphism to S_n given as
    /// permutations (perm[g][i] is the image of basis vector i).
    static GammaModule permutation(FiniteGroup group, const std::vector<std::vector<std::size_t>>& perms);

    std::size_t rank() const noexcept { return rank_; }
    const FiniteGroup& group() const noexcept { return group_; }
    const IntMatrix& action(std::size_t g) const { return action_[g]; }
    const std::vector<IntMatrix>& actions() const noexcept { return action_; }
    bool acts_trivially() const;

    /// Contragredient module on Hom(X, Z): g acts by the inverse transpose.
    GammaModule dual() const;
    /// Direct sum over the same group.
    GammaModule direct_sum(const GammaModule& other) const;
    /// Restriction along an embedding H -> group().
    GammaModule restrict_to(const FiniteGroup& subgroup, const std::vector<std::size_t>& embedding) const;
    /// Pull back along a homomorphism `map` from `larger` to group().
    GammaModule inflate(const FiniteGroup& larger, const std::vector<std::size_t>& map) const;

    /// Sum over g of action(g).
    IntMatrix norm_matrix() const;
    /// [action(g) - 1 for every g], a rank x (rank * order) matrix whose
    /// column span is the augmentation submodule I X.
    IntMatrix augmentation_matrix() const;

    friend bool operator==(const GammaModule& a, const GammaModule& b) {
        return a.rank_ == b.rank_ && a.group_ == b.group_ && a.action_ == b.action_;
    }
    friend bool operator!=(const GammaModule& a, const GammaModule& b) { return !(a == b); }

private:
    std::size_t rank_ = 0;
    FiniteGroup group_;
    std::vector<IntMatrix> action_{IntMatrix::identity(0)};
};

/// A Gamma-module presented as a lattice modulo a Gamma-stable sublattice
/// spanned by the columns of `relations`.
struct QuotientModule {
    GammaModule lattice;
    IntMatrix relations;

    /// The underlying abelian group lattice / relations.
    FinAbGroup group() const;
    /// Coinvariants lattice / (relations + I * lattice) with coordinates.
    Quotient coinvariants() const;
    /// Throws std::invalid_argument if the relation span is not Gamma-stable.
    void check_stable() const;
};

struct Coinvariants {
    FinAbGroup group;
    /// Maps lattice vectors onto generator coordinates of `group`
    /// (see `Quotient::projection`).
    IntMatrix projection;
    IntMatrix lift;
};

/// X_Gamma = X / sum_g (g - 1) X.
Coinvariants coinvariants(const GammaModule& m);

/// Basis (rows, Hermite form) of the fixed sublattice X^Gamma.
IntMatrix invariants(const GammaModule& m);

/// Tate cohomology H^-1 = ker(N) / I X. Computed from the kernel of the norm
/// and checked against the torsion of the coinvariants; a disagreement throws
/// std::logic_error.
FinAbGroup tate_h_minus1(const GammaModule& m);

/// Induced module Z[G] (x)_{Z[H]} M for an embedding H -> G.
///
/// Left cosets gH are ordered by their smallest element index and the
/// smallest element is the coset representative r_i. The result has rank
/// [G:H] * rank(M); block i holds r_i (x) M, and g maps block i to block j
/// through M(h) where g r_i = r_j h.
GammaModule induce_module(const GammaModule& m, const FiniteGroup& g, const std::vector<std::size_t>& embedding);

/// Left coset representatives of the image of `embedding` in `g`, in the
/// order used by induce_module.
std::vector<std::size_t> coset_representatives(const FiniteGroup& g, const std::vector<std::size_t>& embedding);

}  // namespace lgk
