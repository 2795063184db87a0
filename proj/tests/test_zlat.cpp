#include <gtest/gtest.h>

#include <random>

#include "lgk/gamma_module.hpp"
#include "lgk/zlat.hpp"
#include "oracles.hpp"

using namespace lgk;

namespace {

bool is_unimodular(const IntMatrix& m) {
    const Int d = m.determinant();
    return m.rows() == m.cols() && (d == 1 || d == -1);
}

void expect_valid_snf(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    EXPECT_TRUE(is_unimodular(s.U));
    EXPECT_TRUE(is_unimodular(s.V));
    EXPECT_EQ(s.U * m * s.V, s.D);
    const IntVec diag = s.diagonal();
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j) EXPECT_EQ(s.D(i, j), 0);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        EXPECT_GE(diag[i], 0);
        if (i < s.rank) {
            EXPECT_NE(diag[i], 0);
        } else {
            EXPECT_EQ(diag[i], 0);
        }
        if (i + 1 < s.rank) EXPECT_EQ(diag[i + 1] % diag[i], 0);
    }
    IntVec nonzero(diag.begin(), diag.begin() + s.rank);
    EXPECT_EQ(nonzero, oracle::determinantal_invariants(m));
}

}  // namespace

TEST(SmithForm, DiagonalTwoThree) {
    const IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.D, IntMatrix::from_rows({{1, 0}, {0, 6}}));
    expect_valid_snf(m);
}

TEST(SmithForm, ZeroOneByOne) {
    const SmithForm s = smith_normal_form(IntMatrix::from_rows({{0}}));
    EXPECT_EQ(s.D, IntMatrix::from_rows({{0}}));
    EXPECT_EQ(s.rank, 0u);
}

TEST(SmithForm, Identity) {
    const SmithForm s = smith_normal_form(IntMatrix::identity(3));
    EXPECT_EQ(s.D, IntMatrix::identity(3));
}

TEST(SmithForm, EmptyShapes) {
    expect_valid_snf(IntMatrix(2, 0));
    expect_valid_snf(IntMatrix(0, 3));
    EXPECT_EQ(cokernel(IntMatrix(0, 0)), FinAbGroup::trivial());
}

TEST(SmithForm, Deterministic) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        const IntMatrix m = oracle::random_matrix(4, 5, 9, rng);
        const SmithForm a = smith_normal_form(m), b = smith_normal_form(m);
        EXPECT_EQ(a.U, b.U);
        EXPECT_EQ(a.D, b.D);
        EXPECT_EQ(a.V, b.V);
    }
}

TEST(SmithForm, RandomAgainstMinors) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        expect_valid_snf(oracle::random_matrix(r, c, 10, rng));
    }
}

TEST(SmithForm, LargeEntriesStayExact) {
    IntMatrix m(3, 3);
    Int big("123456789012345678901234567890");
    m(0, 0) = big;
    m(0, 1) = big + 1;
    m(1, 0) = big * 3;
    m(1, 1) = big * 3 + 2;
    m(2, 2) = big * big;
    expect_valid_snf(m);
}

TEST(Cokernel, Examples) {
    EXPECT_EQ(cokernel(IntMatrix::from_rows({{2}})), FinAbGroup::cyclic(2));
    EXPECT_EQ(cokernel(IntMatrix(2, 0)), FinAbGroup::free(2));
    EXPECT_EQ(cokernel(IntMatrix::from_rows({{1, 0}, {0, 6}})), FinAbGroup::cyclic(6));
}

TEST(Cokernel, UnimodularInvariance) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 120; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const IntMatrix m = oracle::random_matrix(r, c, 10, rng);
        const IntMatrix u = oracle::random_unimodular(r, rng), v = oracle::random_unimodular(c, rng);
        const FinAbGroup g = cokernel(m);
        EXPECT_EQ(cokernel(u * m * v), g);
        EXPECT_EQ(g, oracle::cokernel_by_minors(m));
    }
}

TEST(FinAbGroup, NormalizesOrders) {
    const FinAbGroup g = FinAbGroup::from_cyclic_orders({Int(4), Int(6), Int(1), Int(0)});
    EXPECT_EQ(g.free_rank(), 1u);
    EXPECT_EQ(g.invariant_factors(), (IntVec{Int(2), Int(12)}));
    EXPECT_EQ(g.to_string(), "Z/2 + Z/12 + Z^1");
    EXPECT_EQ(FinAbGroup::trivial().to_string(), "0");
    EXPECT_THROW(FinAbGroup(0, {Int(4), Int(6)}), std::invalid_argument);
    EXPECT_THROW(FinAbGroup(0, {Int(1)}), std::invalid_argument);
    EXPECT_THROW(FinAbGroup::free(1).order(), std::domain_error);
}

TEST(Quotient, ProjectionAndLift) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const std::size_t r = 1 + rng() % 4, c = rng() % 5;
        const IntMatrix m = oracle::random_matrix(r, c, 6, rng);
        const Quotient q = quotient_by_columns(m);
        EXPECT_EQ(q.group, cokernel(m));
        EXPECT_EQ(q.projection.rows(), q.group.generator_count());
        // Relations map to zero.
        for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_TRUE(is_zero(q.coordinates(m.column(j))));
        // Lifts of generators project back to unit coordinates.
        for (std::size_t k = 0; k < q.group.generator_count(); ++k)
            EXPECT_EQ(q.coordinates(q.lift.column(k)), unit_vector(q.group.generator_count(), k));
    }
}

TEST(Lattice, KernelAndSolve) {
    const IntMatrix m = IntMatrix::from_rows({{1, 1, 0}, {0, 2, 2}});
    const IntMatrix k = kernel_basis(m);
    ASSERT_EQ(k.rows(), 1u);
    EXPECT_TRUE(is_zero(m.apply(k.row(0))));
    EXPECT_EQ(k.row(0), (IntVec{Int(1), Int(-1), Int(1)}));
    const auto c = solve_integral(IntMatrix::from_rows({{2, 0}, {0, 3}}), IntVec{Int(4), Int(9)});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (IntVec{Int(2), Int(3)}));
    EXPECT_FALSE(solve_integral(IntMatrix::from_rows({{2, 0}, {0, 3}}), IntVec{Int(1), Int(0)}));
    EXPECT_EQ(hermite_rows(IntMatrix::from_rows({{2, 4}, {1, 1}})), IntMatrix::from_rows({{1, 1}, {0, 2}}));
}

TEST(Lattice, UnimodularInverse) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const IntMatrix u = oracle::random_unimodular(4, rng);
        EXPECT_EQ(u * unimodular_inverse(u), IntMatrix::identity(4));
    }
    EXPECT_THROW(unimodular_inverse(IntMatrix::from_rows({{2}})), std::invalid_argument);
}

TEST(FiniteGroup, RejectsBadTables) {
    EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(FiniteGroup({{0, 1}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(FiniteGroup(std::vector<std::vector<std::size_t>>{}), std::invalid_argument);
    const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.element_order(4), 6u);
}

TEST(GammaModule, RejectsNonHomomorphism) {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    EXPECT_THROW(GammaModule(1, z2, {IntMatrix::identity(1), IntMatrix::from_rows({{2}})}), std::invalid_argument);
    const FiniteGroup z3 = FiniteGroup::cyclic(3);
    const IntMatrix s = IntMatrix::from_rows({{0, 1}, {1, 0}});
    EXPECT_THROW(GammaModule(2, z3, {IntMatrix::identity(2), s, s}), std::invalid_argument);
}

TEST(Coinvariants, Examples) {
    EXPECT_EQ(coinvariants(GammaModule::trivial(2)).group, FinAbGroup::free(2));
    EXPECT_EQ(coinvariants(GammaModule::sign()).group, FinAbGroup::cyclic(2));
    const GammaModule swap = GammaModule::permutation(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}});
    EXPECT_EQ(coinvariants(swap).group, FinAbGroup::free(1));
    EXPECT_EQ(coinvariants(GammaModule::trivial(0)).group, FinAbGroup::trivial());
}

TEST(Invariants, Examples) {
    EXPECT_EQ(invariants(GammaModule::trivial(3)), IntMatrix::identity(3));
    EXPECT_EQ(invariants(GammaModule::sign()).rows(), 0u);
    const GammaModule swap = GammaModule::permutation(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}});
    EXPECT_EQ(invariants(swap), IntMatrix::from_rows({{1, 1}}));
}

TEST(Tate, Examples) {
    EXPECT_EQ(tate_h_minus1(GammaModule::trivial(3)), FinAbGroup::trivial());
    EXPECT_EQ(tate_h_minus1(GammaModule::sign()), FinAbGroup::cyclic(2));
    const GammaModule swap = GammaModule::permutation(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}});
    EXPECT_EQ(tate_h_minus1(swap), FinAbGroup::trivial());
    EXPECT_EQ(tate_h_minus1(GammaModule::trivial(0)), FinAbGroup::trivial());
}

TEST(Tate, AugmentationKernelOfCyclicGroup) {
    // For the cyclic group of order n acting on {sum = 0} in Z[Z/n], H^-1 is Z/n.
    for (std::size_t n = 2; n <= 6; ++n) {
        const FiniteGroup g = FiniteGroup::cyclic(n);
        const GammaModule m = oracle::augmentation_kernel(oracle::coset_module(g, {0}));
        EXPECT_EQ(tate_h_minus1(m), FinAbGroup::cyclic(n)) << n;
    }
}

TEST(Tate, RandomModulesAgreeWithCoinvariantTorsion) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        const GammaModule m = oracle::random_module(rng);
        EXPECT_EQ(tate_h_minus1(m), coinvariants(m).group.torsion());
    }
}

TEST(Tate, CoinvariantTorsionByEnumeration) {
    // The norm-one torus of a cyclic cubic extension, disguised by a basis change.
    std::mt19937_64 rng(4);
    const FiniteGroup g = FiniteGroup::cyclic(3);
    const GammaModule m = oracle::conjugate(oracle::augmentation_kernel(oracle::coset_module(g, {0})), oracle::random_unimodular(2, rng));
    EXPECT_EQ(oracle::finite_cokernel_order_by_enumeration(m.augmentation_matrix(), 3), 3);
    EXPECT_EQ(coinvariants(m).group.order(), 3);
}

TEST(Induce, RegularRepresentation) {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GammaModule m = induce_module(GammaModule::trivial(1), z2, {0});
    EXPECT_EQ(m.rank(), 2u);
    EXPECT_EQ(m.action(1), IntMatrix::from_rows({{0, 1}, {1, 0}}));
}

TEST(Induce, FromWholeGroupIsIdentity) {
    std::mt19937_64 rng(8);
    const GammaModule m = oracle::random_module(rng);
    std::vector<std::size_t> id(m.group().order());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    EXPECT_EQ(induce_module(m, m.group(), id), m);
}

TEST(Induce, RankMultiplies) {
    const FiniteGroup z3 = FiniteGroup::cyclic(3);
    const GammaModule m = induce_module(GammaModule::trivial(2), z3, {0});
    EXPECT_EQ(m.rank(), 6u);
}

TEST(Induce, RejectsNonInjective) {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    EXPECT_THROW(induce_module(GammaModule::sign(), FiniteGroup::cyclic(4), {0, 0}), std::invalid_argument);
    EXPECT_THROW(induce_module(GammaModule::sign(), z2, {1, 0}), std::invalid_argument);
}

TEST(Induce, ShapiroOnCoinvariantsAndTate) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
        // H cyclic of order k, embedded as the first factor of Z/k x Z/m.
        const std::size_t k = 1 + rng() % 3, m = 2 + rng() % 2;
        const FiniteGroup h = FiniteGroup::cyclic(k);
        const FiniteGroup g = FiniteGroup::direct_product(h, FiniteGroup::cyclic(m));
        std::vector<std::size_t> emb;
        for (std::size_t x = 0; x < k; ++x) emb.push_back(x * m);
        const GammaModule base = oracle::random_module_over(h, rng, 3);
        const GammaModule ind = induce_module(base, g, emb);
        EXPECT_EQ(ind.rank(), base.rank() * m);
        EXPECT_EQ(coinvariants(ind).group, coinvariants(base).group);
        EXPECT_EQ(tate_h_minus1(ind), tate_h_minus1(base));
        EXPECT_EQ(ind.restrict_to(h, emb).rank(), ind.rank());
    }
}
