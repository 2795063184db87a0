#include "lgk/rootdata.hpp"

#include <string>

namespace lgk::presets {

namespace {

IntMatrix cartan_a(std::size_t l) {
    IntMatrix c(l, l);
    for (std::size_t i = 0; i < l; ++i) {
        c(i, i) = 2;
        if (i + 1 < l) {
            c(i, i + 1) = -1;
            c(i + 1, i) = -1;
        }
    }
    return c;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Simple roots e_i - e_{i+1} for i < l in Z^n, with equal coroots.
void type_a_chain(std::size_t n, std::size_t l, std::vector<IntVec>& roots, std::vector<IntVec>& coroots) {
    for (std::size_t i = 0; i < l; ++i) {
        IntVec v(n, Int(0));
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
        coroots.push_back(v);
    }
}

}  // namespace

BasedRootDatum torus(GammaModule lattice) { return BasedRootDatum{std::move(lattice), {}, {}, {}}; }

BasedRootDatum split_torus(std::size_t rank) { return torus(GammaModule::trivial(rank)); }

BasedRootDatum norm_one_torus() { return torus(GammaModule::sign()); }

BasedRootDatum gl(std::size_t n) {
    require(n >= 1, "GL(n) needs n >= 1");
    std::vector<IntVec> r, c;
    type_a_chain(n, n - 1, r, c);
    return from_simple_system(GammaModule::trivial(n), r, c);
}

BasedRootDatum sl(std::size_t n) {
    require(n >= 1, "SL(n) needs n >= 1");
    const std::size_t l = n - 1;
    const IntMatrix cartan = cartan_a(l);
    std::vector<IntVec> r, c;
    for (std::size_t i = 0; i < l; ++i) {
        r.push_back(cartan.row(i));
        c.push_back(unit_vector(l, i));
    }
    return from_simple_system(GammaModule::trivial(l), r, c);
}

BasedRootDatum pgl(std::size_t n) {
    require(n >= 1, "PGL(n) needs n >= 1");
    const std::size_t l = n - 1;
    const IntMatrix cartan = cartan_a(l);
    std::vector<IntVec> r, c;
    for (std::size_t i = 0; i < l; ++i) {
        r.push_back(unit_vector(l, i));
        c.push_back(cartan.column(i));
    }
    return from_simple_system(GammaModule::trivial(l), r, c);
}

BasedRootDatum sp(std::size_t m) {
    require(m >= 2 && m % 2 == 0, "Sp(m) needs an even m >= 2");
    const std::size_t n = m / 2;
    std::vector<IntVec> r, c;
    type_a_chain(n, n - 1, r, c);
    IntVec v = unit_vector(n, n - 1);
    r.push_back(scale(2, v));
    c.push_back(v);
    return from_simple_system(GammaModule::trivial(n), r, c);
}

BasedRootDatum so(std::size_t m) {
    require(m >= 2, "SO(m) needs m >= 2");
    const std::size_t n = m / 2;
    std::vector<IntVec> r, c;
    if (m % 2 == 1) {
        type_a_chain(n, n - 1, r, c);
        IntVec v = unit_vector(n, n - 1);
        r.push_back(v);
        c.push_back(scale(2, v));
    } else if (n >= 2) {
        type_a_chain(n, n - 1, r, c);
        IntVec v(n, Int(0));
        v[n - 2] = 1;
        v[n - 1] = 1;
        r.push_back(v);
        c.push_back(v);
    }
    return from_simple_system(GammaModule::trivial(n), r, c);
}

BasedRootDatum quasi_split_su(std::size_t n) {
    require(n >= 2, "SU(n) needs n >= 2");
    const std::size_t l = n - 1;
    IntMatrix swap(l, l);
    for (std::size_t i = 0; i < l; ++i) swap(l - 1 - i, i) = 1;
    BasedRootDatum b = sl(n);
    b.lattice = GammaModule(l, FiniteGroup::cyclic(2), {IntMatrix::identity(l), swap});
    return b;
}

BasedRootDatum by_name(const std::string& name, const std::vector<long>& params) {
    auto param = [&](std::size_t i, const char* what) -> std::size_t {
        require(params.size() > i, name + ": missing parameter " + what);
        require(params[i] >= 0, name + ": parameter " + what + " must be non-negative");
        return static_cast<std::size_t>(params[i]);
    };
    auto arity = [&](std::size_t k) {
        require(params.size() == k, name + ": expected " + std::to_string(k) + " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "Torus") {
        arity(1);
        return split_torus(param(0, "rank"));
    }
    if (name == "NormOne") {
        arity(0);
        return norm_one_torus();
    }
    if (name == "ResGm") {
        if (params.empty()) return weil_restriction(split_torus(1), 2);
        arity(1);
        const std::size_t k = param(0, "degree");
        require(k >= 1, "ResGm: degree must be positive");
        return weil_restriction(split_torus(1), k);
    }
    if (name == "GL") {
        arity(1);
        return gl(param(0, "n"));
    }
    if (name == "SL") {
        arity(1);
        return sl(param(0, "n"));
    }
    if (name == "PGL") {
        arity(1);
        return pgl(param(0, "n"));
    }
    if (name == "Sp") {
        arity(1);
        return sp(param(0, "m"));
    }
    if (name == "SO") {
        arity(1);
        return so(param(0, "m"));
    }
    if (name == "SU") {
        arity(1);
        return quasi_split_su(param(0, "n"));
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace lgk::presets
