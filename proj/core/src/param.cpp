#include "lgk/param.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace lgk {

namespace {

Rat frac(const Rat& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rat(fl);
}

std::string describe(const RatVec& v) { return to_string(v); }

}  // namespace

// --- TorusElement --------------------------------------------------------------

RatVec reduce_mod_one(const RatVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(frac(x));
    return out;
}

TorusElement::TorusElement(RatVec c, RatVec r) : circle(reduce_mod_one(c)), radial(std::move(r)) {
    if (circle.size() != radial.size()) throw std::invalid_argument("TorusElement: circle and radial parts differ in length");
}

TorusElement TorusElement::identity(std::size_t rank) { return TorusElement(zero_rat_vector(rank), zero_rat_vector(rank)); }

TorusElement TorusElement::from_circle(RatVec c) {
    const std::size_t n = c.size();
    return TorusElement(std::move(c), zero_rat_vector(n));
}

bool TorusElement::is_identity() const { return is_zero(circle) && is_zero(radial); }

Int TorusElement::exponent() const { return common_denominator(circle); }

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("TorusElement: rank mismatch");
    return TorusElement(a.circle + b.circle, a.radial + b.radial);
}

std::pair<TorusElement, TorusElement> polar_decompose(const TorusElement& t) {
    return {TorusElement(t.circle, zero_rat_vector(t.rank())), TorusElement(zero_rat_vector(t.rank()), t.radial)};
}

Rat circle_pairing(const IntVec& lambda, const TorusElement& t) { return frac(dot(lambda, t.circle)); }

// --- TitsGroup -------------------------------------------------------------------

TitsGroup::TitsGroup(BasedRootDatum bd) : bd_(std::move(bd)) {
    for (auto s : bd_.simple) reflections_.push_back(reflection_matrix(bd_, s));
    for (const auto& a : bd_.lattice.actions()) galois_dual_.push_back(unimodular_inverse(a).transpose());
    const auto pos = positive_roots(bd_);
    const std::set<std::size_t> p(pos.begin(), pos.end());
    for (std::size_t i = 0; i < bd_.roots.size(); ++i) positive_.emplace(bd_.roots[i], p.count(i) > 0);
}

LElement TitsGroup::identity() const { return {zero_rat_vector(bd_.rank()), IntMatrix::identity(bd_.rank()), bd_.galois().identity()}; }

LElement TitsGroup::make(const TorusElement& t, const std::vector<std::size_t>& word, std::size_t galois) const {
    if (t.rank() != bd_.rank()) throw std::invalid_argument("torus element has the wrong rank");
    if (galois >= bd_.galois().order()) throw std::invalid_argument("Galois index out of range");
    return {t.circle, weyl_matrix(bd_, word), galois};
}

IntMatrix TitsGroup::cocharacter_action(const LElement& a) const {
    return unimodular_inverse(a.weyl * bd_.lattice.action(a.galois)).transpose();
}

LElement TitsGroup::mul(const LElement& a, const LElement& b) const {
    const IntMatrix& aq = bd_.lattice.action(a.galois);
    const IntMatrix w2 = aq * b.weyl * unimodular_inverse(aq);
    RatVec circle = a.circle + cocharacter_action(a).apply(b.circle);

    // Reduced word of w2 by peeling right descents.
    std::vector<std::size_t> rev;
    IntMatrix v = w2;
    for (bool more = true; more;) {
        more = false;
        for (std::size_t j = 0; j < bd_.simple.size(); ++j) {
            if (!positive_.at(v.apply(bd_.roots[bd_.simple[j]]))) {
                v = v * reflections_[j];
                rev.push_back(j);
                more = true;
                break;
            }
        }
    }
    IntMatrix u = a.weyl;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        const std::size_t j = *it;
        const bool ascent = positive_.at(u.apply(bd_.roots[bd_.simple[j]]));
        u = u * reflections_[j];
        if (!ascent) {
            const RatVec half = scale(Rat(1, 2), to_rational(bd_.coroots[bd_.simple[j]]));
            circle = circle + unimodular_inverse(u).transpose().apply(half);
        }
    }
    return {reduce_mod_one(circle), std::move(u), bd_.galois().mul(a.galois, b.galois)};
}

std::optional<std::size_t> TitsGroup::order(const LElement& a, std::size_t limit) const {
    const LElement id = identity();
    LElement x = a;
    for (std::size_t k = 1; k <= limit; ++k) {
        if (x == id) return k;
        x = mul(x, a);
    }
    return std::nullopt;
}

// --- ParamDatum -------------------------------------------------------------------

bool ParamDatum::is_bounded() const {
    return std::all_of(generators.begin(), generators.end(), [](const ParamGenerator& g) { return g.t.is_bounded(); });
}

RatVec ParamDatum::radial_part(std::size_t rank) const {
    for (const auto& g : generators)
        if (g.frobenius) return g.t.radial;
    return zero_rat_vector(rank);
}

namespace {

std::optional<std::vector<LElement>> extend(const ParamDatum& p, const TitsGroup& g, ValidationReport* report) {
    const FiniteGroup& src = p.source;
    std::vector<LElement> gen_img;
    for (const auto& gen : p.generators) gen_img.push_back(g.make(gen.t, gen.weyl_word, gen.galois));

    std::vector<std::optional<LElement>> img(src.order());
    img[src.identity()] = g.identity();
    std::deque<std::size_t> queue{src.identity()};
    bool ok = true;
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < gen_img.size(); ++k) {
            const std::size_t y = src.mul(x, p.generators[k].element);
            LElement v = g.mul(*img[x], gen_img[k]);
            if (!img[y]) {
                img[y] = std::move(v);
                queue.push_back(y);
            } else if (*img[y] != v) {
                ok = false;
                if (report)
                    report->add("relation broken: element " + std::to_string(x) + " times generator element " +
                                std::to_string(p.generators[k].element) + " = element " + std::to_string(y) +
                                " has two different images");
                else
                    return std::nullopt;
            }
        }
    }
    for (std::size_t x = 0; x < src.order(); ++x)
        if (!img[x]) {
            if (report) report->add("generators do not generate the source group (element " + std::to_string(x) + " unreached)");
            return std::nullopt;
        }
    if (!ok) return std::nullopt;
    std::vector<LElement> out;
    for (auto& v : img) out.push_back(std::move(*v));
    for (std::size_t a = 0; a < src.order(); ++a)
        for (std::size_t b = 0; b < src.order(); ++b)
            if (g.mul(out[a], out[b]) != out[src.mul(a, b)]) {
                if (report)
                    report->add("multiplication table violated at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
                return std::nullopt;
            }
    return out;
}

}  // namespace

std::optional<std::vector<LElement>> param_images(const ParamDatum& p, const TitsGroup& g) { return extend(p, g, nullptr); }

ValidationReport validate_param(const ParamDatum& p, const BasedRootDatum& bd) {
    ValidationReport r = validate(bd);
    if (!r.ok()) return r;
    const std::size_t n = bd.rank();
    std::set<std::size_t> elements;
    for (std::size_t k = 0; k < p.generators.size(); ++k) {
        const auto& gen = p.generators[k];
        const std::string who = "generator #" + std::to_string(k);
        if (gen.element >= p.source.order()) r.add(who + ": element index out of range");
        if (!elements.insert(gen.element).second) r.add(who + ": element assigned twice");
        if (gen.t.circle.size() != n || gen.t.radial.size() != n) r.add(who + ": torus element has the wrong rank");
        if (gen.galois >= bd.galois().order()) r.add(who + ": Galois index out of range");
        for (auto j : gen.weyl_word)
            if (j >= bd.simple.size()) r.add(who + ": Weyl word letter " + std::to_string(j) + " out of range");
    }
    if (p.sl2.size() != n) r.add("sl2 cocharacter has the wrong rank");
    if (!r.ok()) return r;

    const RatVec nu = p.radial_part(n);
    for (std::size_t k = 0; k < p.generators.size(); ++k) {
        const auto& gen = p.generators[k];
        if (gen.frobenius && gen.t.radial != nu)
            r.add("generator #" + std::to_string(k) + ": Frobenius-like radial part " + describe(gen.t.radial) + " differs from " + describe(nu));
        if (!gen.frobenius && !is_zero(gen.t.radial))
            r.add("generator #" + std::to_string(k) + ": radial part must vanish on non-Frobenius generators");
    }

    const TitsGroup g(bd);
    const auto images = extend(p, g, &r);
    if (images) {
        std::set<std::size_t> hit;
        for (const auto& x : *images) hit.insert(x.galois);
        if (hit.size() != bd.galois().order()) r.add("Galois parts do not map onto the Galois quotient");
    }

    for (std::size_t k = 0; k < p.generators.size(); ++k) {
        const auto& gen = p.generators[k];
        const IntMatrix act = g.cocharacter_action(g.make(gen.t, gen.weyl_word, gen.galois));
        if (act.apply(nu) != nu) r.add("generator #" + std::to_string(k) + " does not fix the radial part " + describe(nu));
        if (act.apply(p.sl2) != p.sl2) r.add("generator #" + std::to_string(k) + " does not fix the sl2 cocharacter");
    }
    if (!is_integral(scale(Rat(2), p.sl2))) r.add("2 * sl2 cocharacter " + describe(p.sl2) + " is not integral");
    std::vector<IntVec> cols;
    for (auto s : bd.simple) cols.push_back(bd.coroots[s]);
    if (!solve_rational(to_rational_rows(IntMatrix::from_columns(cols, n)), p.sl2))
        r.add("sl2 cocharacter is not in the span of the simple coroots");
    return r;
}

LanglandsDecomposition langlands_decompose(const ParamDatum& p, const BasedRootDatum& bd) {
    const auto report = validate_param(p, bd);
    if (!report.ok()) throw std::invalid_argument("invalid parameter: " + report.violations.front());
    const std::size_t n = bd.rank();
    LanglandsDecomposition out;
    out.nu = p.radial_part(n);
    for (const auto& a : bd.lattice.actions())
        if (unimodular_inverse(a).transpose().apply(out.nu) != out.nu)
            throw std::invalid_argument("radial part " + describe(out.nu) + " is not Galois-invariant");
    for (std::size_t j = 0; j < bd.simple.size(); ++j) {
        const Rat v = dot(bd.roots[bd.simple[j]], out.nu);
        if (v < 0)
            throw NotStandardPosition("not standard position: radial part pairs to " + v.get_str() + " with simple root " + std::to_string(j));
        if (v == 0) out.levi.push_back(j);
    }
    out.phi0 = p;
    for (auto& g : out.phi0.generators) g.t.radial = zero_rat_vector(n);

    const BasedRootDatum cochar = dual(bd);
    const bool abs_ok = absolute_positive(cochar, out.levi, out.nu);
    const bool rel_ok = relative_positive(cochar, out.levi, out.nu);
    if (!abs_ok || !rel_ok) throw std::logic_error("langlands_decompose: positivity check failed for a dominant radial part");
    return out;
}

std::vector<std::size_t> minimal_levi(const ParamDatum& p, const BasedRootDatum& bd) {
    const auto report = validate_param(p, bd);
    if (!report.ok()) throw std::invalid_argument("invalid parameter: " + report.violations.front());
    std::set<std::size_t> support;
    for (const auto& gen : p.generators)
        for (auto j : reduced_word(bd, weyl_matrix(bd, gen.weyl_word))) support.insert(j);
    std::vector<IntVec> cols;
    for (auto s : bd.simple) cols.push_back(bd.coroots[s]);
    const auto c = solve_rational(to_rational_rows(IntMatrix::from_columns(cols, bd.rank())), p.sl2);
    for (std::size_t j = 0; j < c->size(); ++j)
        if ((*c)[j] != 0) support.insert(j);
    std::set<std::size_t> closed;
    for (const auto& orbit : galois_orbits_on_simple(bd))
        for (auto j : orbit)
            if (support.count(j)) {
                closed.insert(orbit.begin(), orbit.end());
                break;
            }
    return {closed.begin(), closed.end()};
}

DiscretenessCertificate is_essentially_discrete(const ParamDatum& p, const BasedRootDatum& bd) {
    DiscretenessCertificate cert;
    cert.minimal_levi = minimal_levi(p, bd);
    const std::size_t n = bd.rank();
    const TitsGroup g(bd);
    std::vector<RatVec> rows;
    for (const auto& gen : p.generators) {
        const auto r = to_rational_rows(g.cocharacter_action(g.make(gen.t, gen.weyl_word, gen.galois)) - IntMatrix::identity(n));
        rows.insert(rows.end(), r.begin(), r.end());
    }
    cert.fixed_dimension = rational_kernel(rows, n).size();

    std::vector<RatVec> central;
    for (const auto& a : bd.lattice.actions()) {
        const auto r = to_rational_rows(unimodular_inverse(a).transpose() - IntMatrix::identity(n));
        central.insert(central.end(), r.begin(), r.end());
    }
    for (const auto& root : bd.roots) central.push_back(to_rational(root));
    cert.central_dimension = rational_kernel(central, n).size();
    cert.discrete = cert.minimal_levi.size() == bd.simple.size() && cert.fixed_dimension == cert.central_dimension;
    return cert;
}

std::vector<std::size_t> centralizer_roots(const BasedRootDatum& b_dual, const TorusElement& s) {
    if (s.rank() != b_dual.rank()) throw std::invalid_argument("centralizer_roots: torus element has the wrong rank");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < b_dual.roots.size(); ++i)
        if (circle_pairing(b_dual.roots[i], s) == 0 && dot(b_dual.roots[i], s.radial) == 0) out.push_back(i);
    return out;
}

}  // namespace lgk
