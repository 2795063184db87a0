#include "lgk/galcoh.hpp"

#include <stdexcept>

namespace lgk {

std::string to_string(TargetKind k) {
    switch (k) {
        case TargetKind::alpha: return "alpha";
        case TargetKind::iso: return "iso";
        case TargetKind::rigid: return "rigid";
    }
    return "?";
}

std::optional<Int> CohomologyTarget::class_count() const {
    if (place == Place::archimedean || !group.is_finite()) return std::nullopt;
    return group.order();
}

namespace {

CohomologyTarget make_target(TargetKind kind, Place place, Quotient q, bool torsion_only) {
    CohomologyTarget t;
    t.kind = kind;
    t.place = place;
    t.group = torsion_only ? q.group.torsion() : q.group;
    t.presentation = std::move(q);
    if (place == Place::archimedean) t.caveats.push_back(kArchimedeanCaveat);
    return t;
}

}  // namespace

FinAbGroup h1_torus(const GammaModule& cochar) { return tate_h_minus1(cochar); }

CohomologyTarget alpha_target(const BasedRootDatum& b, Place place) {
    return make_target(TargetKind::alpha, place, center_module(dual(b)).coinvariants(), true);
}

CohomologyTarget iso_target(const BasedRootDatum& b, Place place) {
    return make_target(TargetKind::iso, place, center_module(dual(b)).coinvariants(), false);
}

CohomologyTarget rigid_target(const BasedRootDatum& b, const SublatticeSpec& y, Place place) {
    check_sublattice(b, y);
    const IntMatrix basis = hermite_rows(y.basis);
    const GammaModule dual_lattice = b.lattice.dual();
    IntMatrix relations = basis * IntMatrix::from_columns(b.coroots, b.rank());
    relations = IntMatrix::hconcat(relations, basis * dual_lattice.augmentation_matrix());
    return make_target(TargetKind::rigid, place, quotient_by_columns(relations), true);
}

AbelianHom isogeny_map(const BasedRootDatum& source, const BasedRootDatum& target, const IntMatrix& char_map) {
    if (char_map.rows() != source.rank() || char_map.cols() != target.rank())
        throw std::invalid_argument("isogeny_map: character map has the wrong shape");
    if (source.roots.size() != target.roots.size()) throw std::invalid_argument("isogeny_map: root counts differ");
    if (source.galois() != target.galois()) throw std::invalid_argument("isogeny_map: Galois groups differ");
    const IntMatrix f = char_map.transpose();
    for (std::size_t i = 0; i < source.roots.size(); ++i) {
        if (char_map.apply(target.roots[i]) != source.roots[i])
            throw std::invalid_argument("isogeny_map: character map does not match root #" + std::to_string(i));
        if (f.apply(source.coroots[i]) != target.coroots[i])
            throw std::invalid_argument("isogeny_map: cocharacter map does not match coroot #" + std::to_string(i));
    }
    for (std::size_t g = 0; g < source.galois().order(); ++g)
        if (char_map * target.lattice.action(g) != source.lattice.action(g) * char_map)
            throw std::invalid_argument("isogeny_map: character map is not Galois-equivariant");

    const auto s = alpha_target(source);
    const auto t = alpha_target(target);
    const AbelianHom full = induced_hom(s.presentation, t.presentation, f);
    const std::size_t ns = s.group.generator_count(), nt = t.group.generator_count();
    IntMatrix block(nt, ns);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < ns; ++j) block(i, j) = full.matrix(i, j);
    for (std::size_t i = nt; i < full.matrix.rows(); ++i)
        for (std::size_t j = 0; j < ns; ++j)
            if (full.matrix(i, j) != 0) throw std::logic_error("isogeny_map: torsion maps to a free summand");
    return AbelianHom{s.group, t.group, block};
}

RatVec TorusIsocrystals::newton(const IntVec& lambda) const {
    RatVec sum = zero_rat_vector(cochar.rank());
    for (const auto& a : cochar.actions()) sum = sum + to_rational(a.apply(lambda));
    return scale(Rat(1, cochar.group().order()), sum);
}

TorusIsocrystals b_torus(const GammaModule& cochar) {
    return TorusIsocrystals{cochar, quotient_by_columns(cochar.augmentation_matrix())};
}

GerbeBand gerbe_band(GerbeKind kind, const Int& n, const FiniteGroup& q, Place place) {
    if (n < 1) throw std::invalid_argument("gerbe_band: level must be at least 1");
    if (kind == GerbeKind::iso) {
        if (place == Place::archimedean && 2 % n != 0)
            throw std::invalid_argument("gerbe_band: at an Archimedean place the iso band has level dividing 2");
        return GerbeBand{kind, n, QuotientModule{GammaModule::trivial(1, q), IntMatrix(1, 0)}};
    }
    const std::size_t m = q.order();
    std::vector<std::vector<std::size_t>> perms(m, std::vector<std::size_t>(m));
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t x = 0; x < m; ++x) perms[g][x] = q.mul(g, x);
    GammaModule functions = GammaModule::permutation(q, perms);
    const IntMatrix relations = n * IntMatrix::identity(m);
    if (place == Place::nonarchimedean) return GerbeBand{kind, n, QuotientModule{std::move(functions), relations}};

    if (m > 2) throw std::invalid_argument("gerbe_band: an Archimedean Galois quotient has order at most 2");
    IntMatrix gens(m, m);
    gens(0, 0) = n;
    for (std::size_t i = 1; i < m; ++i) {
        gens(i, 0) = -1;
        gens(i, i) = 1;
    }
    const IntMatrix basis = hermite_rows(gens);
    const IntMatrix cols = basis.transpose();
    auto coords = [&](const IntVec& v) { return *solve_integral(cols, v); };
    std::vector<IntMatrix> action;
    for (const auto& a : functions.actions()) {
        std::vector<IntVec> images;
        for (std::size_t i = 0; i < m; ++i) images.push_back(coords(a.apply(basis.row(i))));
        action.push_back(IntMatrix::from_columns(images, m));
    }
    std::vector<IntVec> rel;
    for (std::size_t i = 0; i < m; ++i) rel.push_back(coords(relations.column(i)));
    return GerbeBand{kind, n, QuotientModule{GammaModule(m, q, std::move(action)), IntMatrix::from_columns(rel, m)}};
}

}  // namespace lgk
