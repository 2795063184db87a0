#include <gtest/gtest.h>

#include <map>
#include <set>

#include "lgk/galcoh.hpp"
#include "lgk/isocrystal.hpp"
#include "lgk/param.hpp"
#include "oracles.hpp"

using namespace lgk;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

/// SL(n) / mu_d for d | n: Y = ZR + d * omega_1.
SublatticeSpec intermediate_lattice(const BasedRootDatum& sl_n, std::size_t d) {
    const std::size_t r = sl_n.rank();
    IntMatrix rows(0, r);
    for (auto i : sl_n.simple) rows = IntMatrix::vconcat(rows, IntMatrix::from_rows({sl_n.roots[i]}, r));
    rows = IntMatrix::vconcat(rows, IntMatrix::from_rows({scale(Int(static_cast<unsigned long>(d)), unit_vector(r, 0))}, r));
    return {hermite_rows(rows)};
}

/// Character map from the root lattice of `source` (the adjoint quotient,
/// simple roots as unit vectors) into X(source).
IntMatrix adjoint_char_map(const BasedRootDatum& source) {
    std::vector<IntVec> cols;
    for (auto i : source.simple) cols.push_back(source.roots[i]);
    return IntMatrix::from_columns(cols, source.rank());
}

/// Checks the induced map of alpha targets against character values on the
/// enumerated center of the dual of the target.
void expect_square_commutes(const BasedRootDatum& source, const BasedRootDatum& target, const IntMatrix& char_map) {
    const AbelianHom h = isogeny_map(source, target, char_map);
    const CohomologyTarget s = alpha_target(source), t = alpha_target(target);
    EXPECT_EQ(h.source, s.group);
    EXPECT_EQ(h.target, t.group);
    const Int zt_order = center_module(dual(target)).group().order(), zs_order = center_module(dual(source)).group().order();
    Int lcm;
    mpz_lcm(lcm.get_mpz_t(), zt_order.get_mpz_t(), zs_order.get_mpz_t());
    const long n = lcm.get_si();
    const auto zt = oracle::dual_center_points(target, n);
    const auto zs = oracle::dual_center_points(source, n);
    ASSERT_EQ(Int(static_cast<unsigned long>(zt.size())), center_module(dual(target)).group().order());
    const std::set<RatVec> zs_set(zs.begin(), zs.end());
    for (const auto& z : zt) {
        // The dual isogeny restricts to the centers.
        const RatVec image = reduce_mod_one(char_map.apply(z));
        EXPECT_TRUE(zs_set.count(image)) << to_string(z);
    }
    for (std::size_t k = 0; k < s.group.generator_count(); ++k) {
        const IntVec lambda = s.presentation.lift.column(k);
        const IntVec y = h.apply(unit_vector(s.group.generator_count(), k));
        IntVec yy = zero_vector(t.presentation.lift.cols());
        for (std::size_t i = 0; i < y.size(); ++i) yy[i] = y[i];
        const IntVec mu = t.presentation.lift.apply(yy);
        for (const auto& z : zt)
            EXPECT_EQ(oracle::character_value(lambda, char_map.apply(z)), oracle::character_value(mu, z)) << to_string(z);
    }
}

}  // namespace

TEST(H1Torus, Examples) {
    EXPECT_EQ(h1_torus(GammaModule::trivial(3)), FinAbGroup::trivial());
    EXPECT_EQ(h1_torus(GammaModule::sign()), FinAbGroup::cyclic(2));
    EXPECT_EQ(h1_torus(weil_restriction(presets::split_torus(1), 2).lattice.dual()), FinAbGroup::trivial());
    EXPECT_EQ(h1_torus(weil_restriction(presets::split_torus(1), 5).lattice.dual()), FinAbGroup::trivial());
}

TEST(H1Torus, NormOneTorusOfCyclicExtension) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const GammaModule m = oracle::augmentation_kernel(oracle::coset_module(FiniteGroup::cyclic(n), {0}));
        EXPECT_EQ(h1_torus(m), FinAbGroup::cyclic(n));
    }
}

TEST(H1Torus, KleinFourNormOne) {
    // Norm-one torus of a biquadratic extension: H^-1 of the augmentation ideal is V4.
    const FiniteGroup v4 = oracle::small_groups()[6];
    const GammaModule m = oracle::augmentation_kernel(oracle::coset_module(v4, {0}));
    const FinAbGroup h = h1_torus(m);
    EXPECT_EQ(h, FinAbGroup::from_cyclic_orders({Int(2), Int(2)}));
    EXPECT_EQ(h, coinvariants(m).group);
    EXPECT_EQ(oracle::finite_cokernel_order_by_enumeration(m.augmentation_matrix(), 4), h.order());
}

TEST(Alpha, SimplyConnectedIsTrivial) {
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(alpha_target(presets::sl(n)).group.is_trivial()) << n;
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(alpha_target(presets::sp(2 * n)).group.is_trivial()) << n;
    EXPECT_TRUE(alpha_target(presets::quasi_split_su(4)).group.is_trivial());
}

TEST(Alpha, AdjointTypeA) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const CohomologyTarget t = alpha_target(presets::pgl(n));
        EXPECT_EQ(t.group, FinAbGroup::cyclic(n));
        EXPECT_EQ(t.class_count(), Int(static_cast<unsigned long>(n)));
        EXPECT_EQ(t.kind, TargetKind::alpha);
    }
}

TEST(Alpha, UnitaryAdjoint) {
    // Quasi-split PU(n): coinvariants of Z/n under x -> -x.
    for (std::size_t n = 2; n <= 6; ++n) {
        const BasedRootDatum su = presets::quasi_split_su(n);
        const BasedRootDatum pu = quotient_datum(su, root_sublattice(su));
        EXPECT_EQ(alpha_target(pu).group, FinAbGroup::cyclic(n % 2 == 0 ? 2 : 1)) << n;
    }
}

TEST(Alpha, OtherExamples) {
    EXPECT_EQ(alpha_target(presets::so(7)).group, FinAbGroup::cyclic(2));
    EXPECT_EQ(alpha_target(presets::so(5)).group, FinAbGroup::cyclic(2));
    EXPECT_EQ(alpha_target(presets::gl(3)).group, FinAbGroup::trivial());
    EXPECT_EQ(alpha_target(presets::norm_one_torus()).group, FinAbGroup::cyclic(2));
}

TEST(Alpha, ArchimedeanCarriesCaveat) {
    const CohomologyTarget t = alpha_target(presets::pgl(3), Place::archimedean);
    EXPECT_EQ(t.group, FinAbGroup::cyclic(3));
    ASSERT_EQ(t.caveats.size(), 1u);
    EXPECT_EQ(t.caveats[0], kArchimedeanCaveat);
    EXPECT_FALSE(t.class_count());
}

TEST(Iso, Examples) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const CohomologyTarget t = iso_target(presets::gl(n));
        EXPECT_EQ(t.group, FinAbGroup::free(1));
        EXPECT_FALSE(t.class_count());
        EXPECT_TRUE(iso_target(presets::sl(n)).group.is_trivial());
    }
    EXPECT_EQ(iso_target(presets::norm_one_torus()).group, FinAbGroup::cyclic(2));
    EXPECT_EQ(iso_target(weil_restriction(presets::split_torus(1), 2)).group, FinAbGroup::free(1));
}

TEST(Iso, TorsionIsAlpha) {
    for (const auto& [name, b] : oracle::preset_zoo(6)) EXPECT_EQ(iso_target(b).group.torsion(), alpha_target(b).group) << name;
}

TEST(Rigid, SL2FullCenter) {
    const BasedRootDatum b = presets::sl(2);
    const CohomologyTarget t = rigid_target(b, root_sublattice(b));
    EXPECT_EQ(t.group, FinAbGroup::cyclic(2));
    EXPECT_EQ(t.class_count(), 2);
    EXPECT_EQ(t.kind, TargetKind::rigid);
}

TEST(Rigid, Sp4Center) {
    const BasedRootDatum b = presets::sp(4);
    EXPECT_EQ(rigid_target(b, root_sublattice(b)).group, FinAbGroup::cyclic(2));
}

TEST(Rigid, SLnFullCenter) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const BasedRootDatum b = presets::sl(n);
        EXPECT_EQ(rigid_target(b, root_sublattice(b)).group, FinAbGroup::cyclic(n));
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) EXPECT_EQ(rigid_target(b, intermediate_lattice(b, d)).group, FinAbGroup::cyclic(d));
    }
}

TEST(Rigid, TrivialCenterIsAlpha) {
    for (const auto& [name, b] : oracle::preset_zoo(6)) {
        const SublatticeSpec y{IntMatrix::identity(b.rank())};
        EXPECT_EQ(rigid_target(b, y).group, alpha_target(b).group) << name;
    }
}

TEST(Rigid, RejectsBadSublattice) {
    EXPECT_THROW(rigid_target(presets::sl(3), {IntMatrix::from_rows({{3, 0}, {0, 3}})}), std::invalid_argument);
}

TEST(Isogeny, SL2ToPGL2IsZero) {
    const AbelianHom h = isogeny_map(presets::sl(2), presets::pgl(2), IntMatrix::from_rows({{2}}));
    EXPECT_TRUE(h.source.is_trivial());
    EXPECT_EQ(h.target, FinAbGroup::cyclic(2));
    EXPECT_TRUE(h.is_zero());
    expect_square_commutes(presets::sl(2), presets::pgl(2), IntMatrix::from_rows({{2}}));
}

TEST(Isogeny, SL4ModMu2ToPGL4) {
    const BasedRootDatum sl4 = presets::sl(4);
    const BasedRootDatum source = quotient_datum(sl4, intermediate_lattice(sl4, 2));
    const IntMatrix f = adjoint_char_map(source);
    const AbelianHom h = isogeny_map(source, presets::pgl(4), f);
    EXPECT_EQ(h.source, FinAbGroup::cyclic(2));
    EXPECT_EQ(h.target, FinAbGroup::cyclic(4));
    EXPECT_EQ(h.apply(iv({1})), iv({2}));
    expect_square_commutes(source, presets::pgl(4), f);
}

TEST(Isogeny, IntermediateQuotientsOfSL6) {
    const BasedRootDatum sl6 = presets::sl(6);
    for (std::size_t d : {1, 2, 3, 6}) {
        const BasedRootDatum source = quotient_datum(sl6, intermediate_lattice(sl6, d));
        expect_square_commutes(source, presets::pgl(6), adjoint_char_map(source));
    }
}

TEST(Isogeny, RejectsNonIsogenies) {
    EXPECT_THROW(isogeny_map(presets::sl(2), presets::pgl(2), IntMatrix::from_rows({{1}})), std::invalid_argument);
    EXPECT_THROW(isogeny_map(presets::sl(2), presets::pgl(3), IntMatrix::from_rows({{1, 0}})), std::invalid_argument);
}

TEST(ProductRule, AlphaOfProductIsDirectSum) {
    const std::vector<std::pair<BasedRootDatum, BasedRootDatum>> pairs = {
        {presets::pgl(2), presets::pgl(3)},
        {presets::so(7), presets::norm_one_torus()},
        {presets::pgl(4), presets::sp(4)},
        {presets::so(8), presets::pgl(2)},
    };
    for (const auto& [a, b] : pairs) {
        const BasedRootDatum p = product(a, b);
        EXPECT_EQ(alpha_target(p).group, alpha_target(a).group.direct_sum(alpha_target(b).group));
        EXPECT_EQ(iso_target(p).group, iso_target(a).group.direct_sum(iso_target(b).group));
    }
}

TEST(BTorus, Examples) {
    const TorusIsocrystals split = b_torus(GammaModule::trivial(1));
    EXPECT_EQ(split.group(), FinAbGroup::free(1));
    EXPECT_EQ(split.newton(iv({5})), (RatVec{Rat(5)}));

    const TorusIsocrystals norm_one = b_torus(GammaModule::sign());
    EXPECT_EQ(norm_one.group(), FinAbGroup::cyclic(2));
    for (long k = -3; k <= 3; ++k) EXPECT_TRUE(is_zero(norm_one.newton(iv({k}))));
    EXPECT_EQ(norm_one.class_of(iv({1})), iv({1}));
    EXPECT_EQ(norm_one.class_of(iv({2})), iv({0}));

    const TorusIsocrystals res = b_torus(weil_restriction(presets::split_torus(1), 2).lattice.dual());
    EXPECT_EQ(res.group(), FinAbGroup::free(1));
    EXPECT_EQ(res.newton(iv({1, 0})), (RatVec{Rat(1, 2), Rat(1, 2)}));
    EXPECT_EQ(res.class_of(iv({1, 0})), res.class_of(iv({0, 1})));
}

TEST(BTorus, NewtonIsConstantOnClasses) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const GammaModule m = oracle::random_module(rng);
        const TorusIsocrystals bt = b_torus(m);
        const IntMatrix aug = m.augmentation_matrix();
        for (int k = 0; k < 5; ++k) {
            IntVec lambda(m.rank());
            for (auto& x : lambda) x = static_cast<long>(rng() % 11) - 5;
            IntVec moved = lambda;
            for (std::size_t j = 0; j < aug.cols(); ++j) moved = moved + scale(static_cast<long>(rng() % 5) - 2, aug.column(j));
            EXPECT_EQ(bt.class_of(moved), bt.class_of(lambda));
            EXPECT_EQ(bt.newton(moved), bt.newton(lambda));
            // Torsion classes have zero Newton point.
            const IntVec c = bt.class_of(lambda);
            const std::size_t nt = bt.group().invariant_factors().size();
            const bool torsion = std::all_of(c.begin() + static_cast<long>(nt), c.end(), [](const Int& x) { return x == 0; });
            if (torsion) EXPECT_TRUE(is_zero(bt.newton(lambda)));
        }
    }
}

TEST(BTorus, AnisotropicNewtonVanishes) {
    for (std::size_t n = 2; n <= 5; ++n) {
        const GammaModule m = oracle::augmentation_kernel(oracle::coset_module(FiniteGroup::cyclic(n), {0}));
        EXPECT_TRUE(m.norm_matrix().is_zero());
        const TorusIsocrystals bt = b_torus(m);
        EXPECT_TRUE(bt.group().is_finite());
        for (std::size_t i = 0; i < m.rank(); ++i) EXPECT_TRUE(is_zero(bt.newton(unit_vector(m.rank(), i))));
    }
}

TEST(Gerbe, Iso) {
    const GerbeBand g = gerbe_band(GerbeKind::iso, 1, FiniteGroup::cyclic(2));
    EXPECT_EQ(g.module.lattice.rank(), 1u);
    EXPECT_TRUE(g.module.lattice.acts_trivially());
    EXPECT_EQ(g.module.group(), FinAbGroup::free(1));
    EXPECT_EQ(gerbe_band(GerbeKind::iso, 6, FiniteGroup::cyclic(3)).level, 6);
    EXPECT_THROW(gerbe_band(GerbeKind::iso, 0, FiniteGroup::cyclic(2)), std::invalid_argument);
}

TEST(Gerbe, RigidTwoPoints) {
    const GerbeBand g = gerbe_band(GerbeKind::rig, 2, FiniteGroup::cyclic(2));
    EXPECT_EQ(g.module.group(), FinAbGroup::from_cyclic_orders({Int(2), Int(2)}));
    EXPECT_EQ(g.module.lattice.action(1), IntMatrix::from_rows({{0, 1}, {1, 0}}));
    EXPECT_NO_THROW(g.module.check_stable());
}

TEST(Gerbe, RigidArchimedeanSumZero) {
    const GerbeBand g = gerbe_band(GerbeKind::rig, 2, FiniteGroup::cyclic(2), Place::archimedean);
    EXPECT_EQ(g.module.group(), FinAbGroup::cyclic(2));
    EXPECT_NO_THROW(g.module.check_stable());
    for (Int n = 1; n <= 6; ++n) {
        const GerbeBand h = gerbe_band(GerbeKind::rig, n, FiniteGroup::cyclic(2), Place::archimedean);
        EXPECT_EQ(h.module.group().order(), n);
    }
    EXPECT_THROW(gerbe_band(GerbeKind::rig, 2, FiniteGroup::cyclic(3), Place::archimedean), std::invalid_argument);
    EXPECT_THROW(gerbe_band(GerbeKind::rig, 0, FiniteGroup::cyclic(2)), std::invalid_argument);
}

TEST(Gerbe, RigidOrders) {
    for (const auto& q : oracle::small_groups())
        for (Int n = 1; n <= 4; ++n) {
            const GerbeBand g = gerbe_band(GerbeKind::rig, n, q);
            Int expected = 1;
            for (std::size_t i = 0; i < q.order(); ++i) expected *= n;
            EXPECT_EQ(g.module.group().order(), expected);
        }
}

TEST(Isocrystal, Examples) {
    const IsocrystalMatrix unit = simple_isocrystal(0, 1);
    ASSERT_EQ(unit.entries.size(), 1u);
    EXPECT_EQ(unit.entries[0][0], Laurent(1));
    EXPECT_EQ(unit.slope(), 0);

    const IsocrystalMatrix half = simple_isocrystal(1, 2);
    EXPECT_EQ(half.entries[0][0], Laurent());
    EXPECT_EQ(half.entries[0][1], Laurent(1));
    EXPECT_EQ(half.entries[1][0], Laurent::monomial(1));
    EXPECT_EQ(half.slope(), Rat(1, 2));

    const IsocrystalMatrix third = simple_isocrystal(-1, 3);
    EXPECT_EQ(third.entries[2][0].to_string(), "w^-1");
    EXPECT_EQ(third.slope(), Rat(-1, 3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(third.power()[i][j], i == j ? Laurent::monomial(-1) : Laurent());

    EXPECT_THROW(simple_isocrystal(2, 4), std::invalid_argument);
    EXPECT_THROW(simple_isocrystal(1, 0), std::invalid_argument);
    EXPECT_THROW(simple_isocrystal(0, 2), std::invalid_argument);
}

TEST(Isocrystal, SlopeIdentity) {
    for (long r = -5; r <= 5; ++r)
        for (std::size_t s = 1; s <= 12; ++s) {
            if (std::gcd(std::abs(r), static_cast<long>(s)) != 1) continue;
            const IsocrystalMatrix c = simple_isocrystal(r, s);
            // Apply C to each basis vector s times.
            for (std::size_t j = 0; j < s; ++j) {
                std::vector<Laurent> v(s);
                v[j] = Laurent(1);
                for (std::size_t k = 0; k < s; ++k) {
                    std::vector<Laurent> w(s);
                    for (std::size_t a = 0; a < s; ++a)
                        for (std::size_t b = 0; b < s; ++b) w[a] = w[a] + c.entries[a][b] * v[b];
                    v = w;
                }
                for (std::size_t i = 0; i < s; ++i) EXPECT_EQ(v[i], i == j ? Laurent::monomial(r) : Laurent());
            }
            const LaurentMatrix p = c.power();
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j) EXPECT_EQ(p[i][j], i == j ? Laurent::monomial(r) : Laurent());
        }
}

TEST(Laurent, Arithmetic) {
    const Laurent a = Laurent(2, 3) + Laurent(1);
    EXPECT_EQ(a.to_string(), "2*w^3 + 1");
    EXPECT_EQ((a * Laurent::monomial(-3)).to_string(), "2 + w^-3");
    EXPECT_TRUE((Laurent(1) + Laurent(-1)).is_zero());
    EXPECT_EQ(Laurent().to_string(), "0");
}
