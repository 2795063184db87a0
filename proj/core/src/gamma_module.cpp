#include "lgk/gamma_module.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lgk {

GammaModule::GammaModule(std::size_t rank, FiniteGroup group, std::vector<IntMatrix> action)
    : rank_(rank), group_(std::move(group)), action_(std::move(action)) {
    if (action_.size() != group_.order())
        throw std::invalid_argument("GammaModule: need one action matrix per group element");
    for (const auto& a : action_) {
        if (a.rows() != rank_ || a.cols() != rank_)
            throw std::invalid_argument("GammaModule: action matrix has the wrong shape");
        const Int d = a.determinant();
        if (d != 1 && d != -1) throw std::invalid_argument("GammaModule: action matrix is not invertible over Z");
    }
    if (action_[group_.identity()] != IntMatrix::identity(rank_))
        throw std::invalid_argument("GammaModule: identity element does not act trivially");
    for (std::size_t g = 0; g < group_.order(); ++g)
        for (std::size_t h = 0; h < group_.order(); ++h)
            if (action_[g] * action_[h] != action_[group_.mul(g, h)])
                throw std::invalid_argument("GammaModule: action is not a homomorphism (elements " +
                                            std::to_string(g) + ", " + std::to_string(h) + ")");
}

GammaModule GammaModule::trivial(std::size_t rank, FiniteGroup group) {
    std::vector<IntMatrix> action(group.order(), IntMatrix::identity(rank));
    return GammaModule(rank, std::move(group), std::move(action));
}

GammaModule GammaModule::sign() {
    return GammaModule(1, FiniteGroup::cyclic(2), {IntMatrix::identity(1), IntMatrix::from_rows({{-1}})});
}

GammaModule GammaModule::permutation(FiniteGroup group, const std::vector<std::vector<std::size_t>>& perms) {
    if (perms.size() != group.order()) throw std::invalid_argument("GammaModule::permutation: need one permutation per element");
    const std::size_t n = perms.empty() ? 0 : perms.front().size();
    std::vector<IntMatrix> action;
    for (const auto& p : perms) {
        if (p.size() != n) throw std::invalid_argument("GammaModule::permutation: ragged permutations");
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(p[i], i) = 1;
        action.push_back(std::move(m));
    }
    return GammaModule(n, std::move(group), std::move(action));
}

bool GammaModule::acts_trivially() const {
    const IntMatrix id = IntMatrix::identity(rank_);
    return std::all_of(action_.begin(), action_.end(), [&](const IntMatrix& a) { return a == id; });
}

GammaModule GammaModule::dual() const {
    std::vector<IntMatrix> action;
    for (const auto& a : action_) action.push_back(unimodular_inverse(a).transpose());
    return GammaModule(rank_, group_, std::move(action));
}

GammaModule GammaModule::direct_sum(const GammaModule& other) const {
    if (group_ != other.group_) throw std::invalid_argument("GammaModule::direct_sum: groups differ");
    const std::size_t n = rank_ + other.rank_;
    std::vector<IntMatrix> action;
    for (std::size_t g = 0; g < group_.order(); ++g) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) m(i, j) = action_[g](i, j);
        for (std::size_t i = 0; i < other.rank_; ++i)
            for (std::size_t j = 0; j < other.rank_; ++j) m(rank_ + i, rank_ + j) = other.action_[g](i, j);
        action.push_back(std::move(m));
    }
    return GammaModule(n, group_, std::move(action));
}

GammaModule GammaModule::restrict_to(const FiniteGroup& subgroup, const std::vector<std::size_t>& embedding) const {
    if (!is_embedding(subgroup, group_, embedding)) throw std::invalid_argument("GammaModule::restrict_to: not an embedding");
    std::vector<IntMatrix> action;
    for (auto g : embedding) action.push_back(action_[g]);
    return GammaModule(rank_, subgroup, std::move(action));
}

GammaModule GammaModule::inflate(const FiniteGroup& larger, const std::vector<std::size_t>& map) const {
    if (!is_homomorphism(larger, group_, map)) throw std::invalid_argument("GammaModule::inflate: not a homomorphism");
    std::vector<IntMatrix> action;
    for (auto g : map) action.push_back(action_[g]);
    return GammaModule(rank_, larger, std::move(action));
}

IntMatrix GammaModule::norm_matrix() const {
    IntMatrix n(rank_, rank_);
    for (const auto& a : action_) n = n + a;
    return n;
}

IntMatrix GammaModule::augmentation_matrix() const {
    IntMatrix m(rank_, 0);
    const IntMatrix id = IntMatrix::identity(rank_);
    for (const auto& a : action_) m = IntMatrix::hconcat(m, a - id);
    return m;
}

// --- QuotientModule --------------------------------------------------------

FinAbGroup QuotientModule::group() const { return cokernel(relations); }

Quotient QuotientModule::coinvariants() const {
    return quotient_by_columns(IntMatrix::hconcat(relations, lattice.augmentation_matrix()));
}

void QuotientModule::check_stable() const {
    if (relations.rows() != lattice.rank()) throw std::invalid_argument("QuotientModule: relation vectors have the wrong length");
    for (const auto& a : lattice.actions())
        for (std::size_t j = 0; j < relations.cols(); ++j)
            if (!solve_integral(relations, a.apply(relations.column(j))))
                throw std::invalid_argument("QuotientModule: relation sublattice is not Gamma-stable");
}

// --- operations ------------------------------------------------------------

Coinvariants coinvariants(const GammaModule& m) {
    Quotient q = quotient_by_columns(m.augmentation_matrix());
    return {std::move(q.group), std::move(q.projection), std::move(q.lift)};
}

IntMatrix invariants(const GammaModule& m) {
    const std::size_t n = m.rank();
    IntMatrix stacked(0, n);
    const IntMatrix id = IntMatrix::identity(n);
    for (const auto& a : m.actions()) stacked = IntMatrix::vconcat(stacked, a - id);
    return kernel_basis(stacked);
}

FinAbGroup tate_h_minus1(const GammaModule& m) {
    const IntMatrix ker_norm = kernel_basis(m.norm_matrix());  // rows
    const IntMatrix aug = m.augmentation_matrix();
    const IntMatrix basis = ker_norm.transpose();
    IntMatrix coeffs(ker_norm.rows(), aug.cols());
    for (std::size_t j = 0; j < aug.cols(); ++j) {
        const auto c = solve_integral(basis, aug.column(j));
        if (!c) throw std::logic_error("tate_h_minus1: augmentation submodule escapes the norm kernel");
        for (std::size_t i = 0; i < c->size(); ++i) coeffs(i, j) = (*c)[i];
    }
    FinAbGroup h = cokernel(coeffs);
    if (h != coinvariants(m).group.torsion())
        throw std::logic_error("tate_h_minus1: norm-kernel quotient " + h.to_string() +
                               " disagrees with torsion of coinvariants");
    return h;
}

std::vector<std::size_t> coset_representatives(const FiniteGroup& g, const std::vector<std::size_t>& embedding) {
    std::vector<bool> seen(g.order(), false);
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (auto h : embedding) seen[g.mul(x, h)] = true;
    }
    return reps;
}

GammaModule induce_module(const GammaModule& m, const FiniteGroup& g, const std::vector<std::size_t>& embedding) {
    const FiniteGroup& h = m.group();
    if (!is_embedding(h, g, embedding)) throw std::invalid_argument("induce_module: subgroup map is not an injective homomorphism");

    const auto reps = coset_representatives(g, embedding);
    std::vector<std::size_t> coset_of(g.order());
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (auto y : embedding) coset_of[g.mul(reps[i], y)] = i;
    std::vector<std::size_t> h_index(g.order(), h.order());
    for (std::size_t y = 0; y < embedding.size(); ++y) h_index[embedding[y]] = y;

    const std::size_t r = m.rank();
    const std::size_t n = reps.size() * r;
    std::vector<IntMatrix> action;
    for (std::size_t x = 0; x < g.order(); ++x) {
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const std::size_t xr = g.mul(x, reps[i]);
            const std::size_t j = coset_of[xr];
            const std::size_t hh = h_index[g.mul(g.inverse(reps[j]), xr)];
            const IntMatrix& block = m.action(hh);
            for (std::size_t p = 0; p < r; ++p)
                for (std::size_t q = 0; q < r; ++q) a(j * r + p, i * r + q) = block(p, q);
        }
        action.push_back(std::move(a));
    }
    return GammaModule(n, g, std::move(action));
}

}  // namespace lgk
