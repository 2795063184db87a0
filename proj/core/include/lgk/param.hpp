#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgk/lgroup.hpp"
#include "lgk/rootdata.hpp"

namespace lgk {

/// An element of a complex torus X_* (x) C^x written as (circle, radial):
/// circle in X_* (x) Q/Z, stored with entries in [0, 1), and radial in
/// X_* (x) Q. A character lambda takes the value
/// exp(2 pi i <lambda, circle>) * exp(<lambda, radial>).
struct TorusElement {
    RatVec circle;
    RatVec radial;

    TorusElement() = default;
    /// Reduces the circle part into [0, 1). Lengths must agree.
    TorusElement(RatVec circle, RatVec radial);

    static TorusElement identity(std::size_t rank);
    static TorusElement from_circle(RatVec circle);

    std::size_t rank() const noexcept { return circle.size(); }
    bool is_identity() const;
    bool is_bounded() const { return is_zero(radial); }
    /// Least N with N * circle = 0.
    Int exponent() const;

    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    friend bool operator==(const TorusElement& a, const TorusElement& b) {
        return a.circle == b.circle && a.radial == b.radial;
    }
    friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }
};

/// Reduces each entry into [0, 1).
RatVec reduce_mod_one(const RatVec& v);

/// The (unitary, positive) parts: (circle, 0) and (0, radial).
std::pair<TorusElement, TorusElement> polar_decompose(const TorusElement& t);

/// <lambda, circle> in Q/Z reduced to [0, 1).
Rat circle_pairing(const IntVec& lambda, const TorusElement& t);

/// Thrown by decomposition operations when the radial part is not dominant.
class NotStandardPosition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Image of a source element in N(T^) x| Q, modulo radial parts:
/// t * n(w) * q with n the Tits section of the pinned dual group.
struct LElement {
    RatVec circle;  // in [0, 1)
    IntMatrix weyl; // on the character lattice of T^
    std::size_t galois = 0;

    friend bool operator==(const LElement& a, const LElement& b) {
        return a.circle == b.circle && a.weyl == b.weyl && a.galois == b.galois;
    }
    friend bool operator!=(const LElement& a, const LElement& b) { return !(a == b); }
};

/// Multiplication in N(T^) x| Q for the dual datum `bd`, using the Tits
/// section n(s_j) with n(s_j)^2 = alpha_j^v(-1).
class TitsGroup {
public:
    explicit TitsGroup(BasedRootDatum bd);

    const BasedRootDatum& datum() const noexcept { return bd_; }
    LElement identity() const;
    LElement make(const TorusElement& t, const std::vector<std::size_t>& word, std::size_t galois) const;
    LElement mul(const LElement& a, const LElement& b) const;
    /// Smallest k >= 1 with a^k = 1, or nullopt if none up to `limit`.
    std::optional<std::size_t> order(const LElement& a, std::size_t limit = 10'000) const;
    /// Action of (w, q) on cocharacter coordinates: (W A_q)^{-T}.
    IntMatrix cocharacter_action(const LElement& a) const;

private:
    BasedRootDatum bd_;
    std::vector<IntMatrix> reflections_;
    std::vector<IntMatrix> galois_dual_;
    std::map<IntVec, bool> positive_;
};

struct ParamGenerator {
    std::size_t element = 0;
    bool frobenius = false;
    TorusElement t;
    std::vector<std::size_t> weyl_word;
    std::size_t galois = 0;
};

/// Finite-level Langlands parameter in normalizer-of-torus form.
///
/// `source` is a finite group P; each generator assigns to an element of P a
/// triple (t, w, q). Frobenius-like generators share one radial part nu,
/// all other radial parts vanish. `sl2` is the rational cocharacter h
/// (image of diag(1/2, -1/2)) in coordinates of X_*(T^).
struct ParamDatum {
    FiniteGroup source;
    std::vector<ParamGenerator> generators;
    RatVec sl2;

    bool is_bounded() const;
    /// Common radial part of the Frobenius-like generators (zero if none).
    RatVec radial_part(std::size_t rank) const;
};

/// Checks that the generators extend to a homomorphism P -> N(T^) x| Q
/// (circle, Weyl and Galois parts), that the Galois parts give a surjection
/// onto Q, the radial and SL2 constraints, and shapes.
ValidationReport validate_param(const ParamDatum& p, const BasedRootDatum& bd);

/// Images of every element of P (index = element), or nullopt if the
/// generators do not extend to a homomorphism.
std::optional<std::vector<LElement>> param_images(const ParamDatum& p, const TitsGroup& g);

struct LanglandsDecomposition {
    std::vector<std::size_t> levi;
    ParamDatum phi0;
    RatVec nu;
};

/// phi = phi0 * chi with chi given by the radial part nu. Requires nu
/// Galois-invariant and dominant; throws NotStandardPosition otherwise.
LanglandsDecomposition langlands_decompose(const ParamDatum& p, const BasedRootDatum& bd);

/// Smallest Galois-stable S whose Weyl group contains every Weyl part and
/// whose coroot span contains the SL2 cocharacter.
std::vector<std::size_t> minimal_levi(const ParamDatum& p, const BasedRootDatum& bd);

struct DiscretenessCertificate {
    bool discrete = false;
    std::vector<std::size_t> minimal_levi;
    std::size_t fixed_dimension = 0;
    std::size_t central_dimension = 0;
};

DiscretenessCertificate is_essentially_discrete(const ParamDatum& p, const BasedRootDatum& bd);

/// Roots of b_dual on which s is trivial.
std::vector<std::size_t> centralizer_roots(const BasedRootDatum& b_dual, const TorusElement& s);

// --- endoscopy -------------------------------------------------------------

struct TwistImage {
    IntMatrix weyl;  // Weyl group element acting on X
    std::size_t galois = 0;
};

/// A homomorphism from a finite group into W x| Q, acting on X by W A_q.
struct Twist {
    FiniteGroup group;
    std::vector<TwistImage> images;

    /// (1, q) for every q in the Galois group of b.
    static Twist trivial(const BasedRootDatum& b);
    /// Z/2 with the generator acting by the longest Weyl element (and the
    /// trivial Galois element); requires b split.
    static Twist longest_weyl(const BasedRootDatum& b);

    IntMatrix matrix(const BasedRootDatum& b, std::size_t g) const;
};

struct EndoscopicDatum {
    BasedRootDatum h;
    TorusElement s;
    /// Indices (into the roots of G) of the coroots killing s.
    std::vector<std::size_t> kernel_roots;
};

/// Builds the based root datum of H with the outer action of the twist.
/// s is in X (x) (Q/Z + Q) with X the character lattice of G.
EndoscopicDatum endoscopic_datum(const BasedRootDatum& b, const TorusElement& s, const Twist& twist);

}  // namespace lgk
