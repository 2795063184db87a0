#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgk/rootdata.hpp"

namespace lgk {

enum class TargetKind { alpha, iso, rigid };
enum class Place { nonarchimedean, archimedean };

std::string to_string(TargetKind k);

/// Caveat attached to every target computed for an Archimedean place.
inline constexpr const char* kArchimedeanCaveat = "target only; map not bijective";

/// The group a Kottwitz-type map lands in, with the lattice presentation it
/// was computed from.
///
/// `presentation` is the quotient of the relevant lattice (X^v for alpha and
/// iso, Hom(Y, Z) for rigid) by all relations. For alpha and rigid only the
/// torsion is kept: `group` is then `presentation.group.torsion()` and its
/// generators are the first coordinates of `presentation`.
struct CohomologyTarget {
    TargetKind kind = TargetKind::alpha;
    Place place = Place::nonarchimedean;
    FinAbGroup group;
    Quotient presentation;
    std::vector<std::string> caveats;

    /// Number of classes when the map is known to be bijective, i.e. for
    /// finite targets at a non-Archimedean place.
    std::optional<Int> class_count() const;
};

/// H^1(F, T) for the torus with cocharacter module `cochar`, computed as the
/// Tate group H^-1.
FinAbGroup h1_torus(const GammaModule& cochar);

/// Torsion of the coinvariants of X^*(Z(G^)) = X^v / Z R^v.
CohomologyTarget alpha_target(const BasedRootDatum& b, Place place = Place::nonarchimedean);

/// The full coinvariants of X^*(Z(G^)), free part included.
CohomologyTarget iso_target(const BasedRootDatum& b, Place place = Place::nonarchimedean);

/// Hom(Y, Z) modulo the coroots and the augmentation of X^v / Z R^v, torsion
/// part. Y = X recovers alpha_target.
CohomologyTarget rigid_target(const BasedRootDatum& b, const SublatticeSpec& y, Place place = Place::nonarchimedean);

/// Map of alpha targets induced by a central isogeny G_s -> G_t whose
/// character map X^*(G_t) -> X^*(G_s) is `char_map` (rank_s x rank_t).
/// The cocharacter map char_map^T must carry coroots to coroots positionally.
AbelianHom isogeny_map(const BasedRootDatum& source, const BasedRootDatum& target, const IntMatrix& char_map);

/// B(T) = X_*(T)_Gamma with the Newton map.
struct TorusIsocrystals {
    GammaModule cochar;
    Quotient classes;

    const FinAbGroup& group() const noexcept { return classes.group; }
    IntVec class_of(const IntVec& lambda) const { return classes.coordinates(lambda); }
    /// Galois average of lambda.
    RatVec newton(const IntVec& lambda) const;
};

TorusIsocrystals b_torus(const GammaModule& cochar);

enum class GerbeKind { iso, rig };

/// Finite-level character module of the band of a Galois gerbe.
///
/// iso: Z with trivial action, standing for (1/n)Z inside Q.
/// rig: functions Q -> (1/n)Z/Z, i.e. Z^|Q| / n Z^|Q| with Q permuting
/// coordinates by left translation. At an Archimedean place with |Q| = 2
/// the lattice is cut down to {x : sum x = 0 mod n}.
struct GerbeBand {
    GerbeKind kind = GerbeKind::iso;
    Int level = 1;
    QuotientModule module;
};

GerbeBand gerbe_band(GerbeKind kind, const Int& n, const FiniteGroup& q, Place place = Place::nonarchimedean);

}  // namespace lgk
