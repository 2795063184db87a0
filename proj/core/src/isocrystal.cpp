#include "lgk/isocrystal.hpp"

#include <numeric>
#include <stdexcept>

namespace lgk {

Laurent::Laurent(const Int& c, long exponent) {
    if (c != 0) terms_.emplace(exponent, c);
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent out = a;
    for (const auto& [e, c] : b.terms_) {
        Int& slot = out.terms_[e];
        slot += c;
        if (slot == 0) out.terms_.erase(e);
    }
    return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out = out + Laurent(ca * cb, ea + eb);
    return out;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Int mag = abs(c);
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += e == 1 ? std::string("w") : "w^" + std::to_string(e);
    }
    return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b.front().size(), k = b.size();
    LaurentMatrix out(n, std::vector<Laurent>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < k; ++t) out[i][j] = out[i][j] + a[i][t] * b[t][j];
    return out;
}

Rat IsocrystalMatrix::slope() const {
    Rat q(Int(r), Int(static_cast<unsigned long>(s)));
    q.canonicalize();
    return q;
}

LaurentMatrix IsocrystalMatrix::power() const {
    LaurentMatrix p = entries;
    for (std::size_t k = 1; k < s; ++k) p = p * entries;
    return p;
}

IsocrystalMatrix simple_isocrystal(long r, std::size_t s) {
    if (s == 0) throw std::invalid_argument("simple_isocrystal: s must be positive");
    if (std::gcd(static_cast<unsigned long>(r < 0 ? -r : r), s) != 1)
        throw std::invalid_argument("simple_isocrystal: r and s must be coprime");
    IsocrystalMatrix m{r, s, LaurentMatrix(s, std::vector<Laurent>(s))};
    for (std::size_t i = 0; i + 1 < s; ++i) m.entries[i][i + 1] = Laurent(1);
    m.entries[s - 1][0] = m.entries[s - 1][0] + Laurent::monomial(r);
    const LaurentMatrix p = m.power();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (p[i][j] != (i == j ? Laurent::monomial(r) : Laurent()))
                throw std::logic_error("simple_isocrystal: C^s differs from w^r * I");
    return m;
}

}  // namespace lgk
