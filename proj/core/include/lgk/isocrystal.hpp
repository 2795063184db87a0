#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgk/int_matrix.hpp"

namespace lgk {

/// Laurent polynomial in the formal symbol w (the uniformizer) with integer
/// coefficients. Zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Int& c, long exponent = 0);

    static Laurent monomial(long exponent) { return Laurent(1, exponent); }

    const std::map<long, Int>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    /// E.g. "0", "1", "w^-1", "2*w^3 + 1".
    std::string to_string() const;

private:
    std::map<long, Int> terms_;
};

using LaurentMatrix = std::vector<std::vector<Laurent>>;

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

/// The companion-type matrix of the simple isocrystal of slope r/s: ones on
/// the superdiagonal and w^r in the lower-left corner.
struct IsocrystalMatrix {
    long r = 0;
    std::size_t s = 1;
    LaurentMatrix entries;

    Rat slope() const;
    /// entries^s, computed by repeated multiplication.
    LaurentMatrix power() const;
};

/// Builds the matrix and checks C^s = w^r * I; rejects gcd(r, s) != 1 and
/// s == 0 with std::invalid_argument.
IsocrystalMatrix simple_isocrystal(long r, std::size_t s);

}  // namespace lgk
