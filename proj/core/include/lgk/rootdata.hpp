#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgk/gamma_module.hpp"

namespace lgk {

/// A based reduced root datum (X, R, R^v, Delta) with an action of a finite
/// Galois quotient on X.
///
/// Roots live in X, coroots in the dual lattice Hom(X, Z) written in the dual
/// basis, so the pairing is the coordinate dot product. `coroots[i]` is the
/// coroot of `roots[i]`: the root/coroot bijection is positional. `simple`
/// holds indices into `roots`. The group acts on X through `lattice` and on
/// the coroot side by the contragredient.
///
/// The struct itself does not enforce the axioms; see `validate`.
struct BasedRootDatum {
    GammaModule lattice;
    std::vector<IntVec> roots;
    std::vector<IntVec> coroots;
    std::vector<std::size_t> simple;

    std::size_t rank() const noexcept { return lattice.rank(); }
    const FiniteGroup& galois() const noexcept { return lattice.group(); }
    std::size_t semisimple_rank() const noexcept { return simple.size(); }
    bool is_torus() const noexcept { return roots.empty(); }

    friend bool operator==(const BasedRootDatum& a, const BasedRootDatum& b) {
        return a.lattice == b.lattice && a.roots == b.roots && a.coroots == b.coroots && a.simple == b.simple;
    }
    friend bool operator!=(const BasedRootDatum& a, const BasedRootDatum& b) { return !(a == b); }
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
    void add(std::string v) { violations.push_back(std::move(v)); }
};

/// Checks every axiom and reports each violation with a witness.
ValidationReport validate(const BasedRootDatum& b);

/// Throws std::invalid_argument listing the violations if `b` is not valid.
void require_valid(const BasedRootDatum& b);

/// Exchanges (X, R) with (X^v, R^v); the group acts on X^v contragrediently.
BasedRootDatum dual(const BasedRootDatum& b);

// --- root bookkeeping --------------------------------------------------------

/// Coordinates of every root in the basis `simple` (integral, one sign).
/// Throws std::invalid_argument if some root is not such a combination.
std::vector<IntVec> simple_coordinates(const BasedRootDatum& b);

/// Indices of the positive roots, in the order of `roots`.
std::vector<std::size_t> positive_roots(const BasedRootDatum& b);

std::optional<std::size_t> find_root(const BasedRootDatum& b, const IntVec& v);

/// Reflection s_alpha on X for root index i: x -> x - <x, alpha^v> alpha.
IntMatrix reflection_matrix(const BasedRootDatum& b, std::size_t i);

/// Permutation of root indices induced by an automorphism of X.
/// Throws std::invalid_argument if `m` does not permute R.
std::vector<std::size_t> root_permutation(const BasedRootDatum& b, const IntMatrix& m);

/// Permutation of positions in `simple` induced by the Galois element g.
std::vector<std::size_t> galois_simple_permutation(const BasedRootDatum& b, std::size_t g);

/// Orbits of the Galois group on positions of `simple`, each sorted, ordered
/// by smallest member.
std::vector<std::vector<std::size_t>> galois_orbits_on_simple(const BasedRootDatum& b);

bool is_galois_stable(const BasedRootDatum& b, const std::vector<std::size_t>& subset);

// --- constructions -----------------------------------------------------------

/// Closes a simple system under simple reflections. Positive roots come first
/// (by height, then by simple coordinates in decreasing lexicographic order),
/// followed by the negatives in the same order; `simple` is 0..l-1.
BasedRootDatum from_simple_system(GammaModule lattice, const std::vector<IntVec>& simple_roots,
                                  const std::vector<IntVec>& simple_coroots);

/// A finite-index Gamma-stable sublattice Y with ZR in Y in X, spanned by the
/// rows of `basis`.
struct SublatticeSpec {
    IntMatrix basis;
};

/// The sublattice ZR (full center quotient). Throws if ZR has infinite index.
SublatticeSpec root_sublattice(const BasedRootDatum& b);

/// Checks the SublatticeSpec invariants; throws std::invalid_argument.
void check_sublattice(const BasedRootDatum& b, const SublatticeSpec& y);

struct LeviResult {
    BasedRootDatum datum;
    /// True when `subset` was not Galois-stable and the action was replaced by
    /// the trivial group.
    bool action_dropped = false;
};

/// Sub-datum with roots R meet span(S) and simple roots S (positions in
/// `simple`). Same lattice.
LeviResult levi_subdatum(const BasedRootDatum& b, const std::vector<std::size_t>& subset);

/// X / ZR with the induced Galois action. For Z(G^) pass dual(b).
QuotientModule center_module(const BasedRootDatum& b);

/// The datum of G/Z where X^*(G/Z) = Y: X is replaced by Y (in the basis
/// given by its rows) and coroots are rewritten in Hom(Y, Z).
BasedRootDatum quotient_datum(const BasedRootDatum& b, const SublatticeSpec& y);

/// Direct product. If the Galois groups differ the product group acts.
BasedRootDatum product(const BasedRootDatum& a, const BasedRootDatum& b);

/// Weil restriction along an embedding of b's Galois group into `g`: X is
/// induced and roots are transported block by block.
BasedRootDatum weil_restriction(const BasedRootDatum& b, const FiniteGroup& g, const std::vector<std::size_t>& embedding);

/// Weil restriction along a cyclic extension of degree `index`, modelled by
/// the embedding Q -> Q x Z/index.
BasedRootDatum weil_restriction(const BasedRootDatum& b, std::size_t index);

// --- presets -------------------------------------------------------------------

namespace presets {

BasedRootDatum torus(GammaModule lattice);
BasedRootDatum split_torus(std::size_t rank);
/// Rank-1 torus split by a quadratic extension with sigma = -1 on X.
BasedRootDatum norm_one_torus();
BasedRootDatum gl(std::size_t n);
BasedRootDatum sl(std::size_t n);
BasedRootDatum pgl(std::size_t n);
/// Sp(m), m = 2n, in the standard basis e_1..e_n.
BasedRootDatum sp(std::size_t m);
/// SO(m): type B for odd m, type D for even m.
BasedRootDatum so(std::size_t m);
/// Quasi-split SU(n): simply connected A_{n-1} with Z/2 acting by the
/// diagram involution.
BasedRootDatum quasi_split_su(std::size_t n);

/// Dispatch by name: "Torus", "GL", "SL", "PGL", "Sp", "SO", "SU",
/// "NormOne", "ResGm". Throws std::invalid_argument for unknown names or
/// invalid parameters.
BasedRootDatum by_name(const std::string& name, const std::vector<long>& params);

}  // namespace presets

/// Thrown when an enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WeylElement {
    IntMatrix matrix;                       // action on X
    std::vector<std::size_t> word;          // reduced word in positions of `simple`
    std::vector<std::size_t> permutation;   // induced permutation of root indices

    std::size_t length() const noexcept { return word.size(); }
};

constexpr std::size_t kDefaultWeylCap = 1'000'000;

/// Breadth-first enumeration over right multiplication by simple
/// reflections. Elements appear by length; each keeps the first word found.
std::vector<WeylElement> weyl_group(const BasedRootDatum& b, std::size_t cap = kDefaultWeylCap);

/// Matrix of s_{i1} ... s_{ik} for a word of simple positions.
IntMatrix weyl_matrix(const BasedRootDatum& b, const std::vector<std::size_t>& word);

/// Reduced word of a Weyl group matrix, obtained by peeling right descents
/// (smallest position first). Throws if `w` is not in W.
std::vector<std::size_t> reduced_word(const BasedRootDatum& b, const IntMatrix& w);

/// The longest element w_0.
IntMatrix longest_element(const BasedRootDatum& b);

}  // namespace lgk
