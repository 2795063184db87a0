#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgk/int_matrix.hpp"

namespace lgk {

/// Result of a Smith normal form computation: `U * m * V == D`.
///
/// `U` and `V` are unimodular, `D` is diagonal with non-negative entries
/// d_0 | d_1 | ... | d_{rank-1} followed by zeros.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::size_t rank = 0;

    /// The diagonal of D (length min(rows, cols)).
    IntVec diagonal() const;
};

/// Smith normal form with a fixed pivot rule: at every step the pivot is the
/// entry of smallest absolute value in the active block, leftmost column
/// first, then topmost row. The output is a pure function of the input.
SmithForm smith_normal_form(const IntMatrix& m);

/// A finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... | d_k and every d_i >= 2.
class FinAbGroup {
public:
    FinAbGroup() = default;
    /// Throws std::invalid_argument unless the factors already form a
    /// divisibility chain of integers >= 2.
    FinAbGroup(std::size_t free_rank, IntVec invariant_factors);

    /// Normalizes an arbitrary list of cyclic orders (0 means Z, 1 is dropped).
    static FinAbGroup from_cyclic_orders(const IntVec& orders);
    static FinAbGroup trivial() { return {}; }
    static FinAbGroup cyclic(const Int& n);
    static FinAbGroup free(std::size_t rank) { return FinAbGroup(rank, {}); }

    std::size_t free_rank() const noexcept { return free_rank_; }
    const IntVec& invariant_factors() const noexcept { return factors_; }

    bool is_finite() const noexcept { return free_rank_ == 0; }
    bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
    /// Product of the invariant factors. Throws std::domain_error if infinite.
    Int order() const;
    FinAbGroup torsion() const { return FinAbGroup(0, factors_); }
    /// Number of cyclic summands (torsion first, then free).
    std::size_t generator_count() const noexcept { return factors_.size() + free_rank_; }

    FinAbGroup direct_sum(const FinAbGroup& other) const;

    /// E.g. "Z/2 + Z/6 + Z^1", "0" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }

private:
    std::size_t free_rank_ = 0;
    IntVec factors_;
};

/// Z^rows / (column span of m).
FinAbGroup cokernel(const IntMatrix& m);

/// Quotient Z^n / image(m) together with the coordinate map onto it.
///
/// `projection` has one row per cyclic summand of `group`, torsion summands
/// first in the order of the invariant factors, then the free summands. A
/// lattice vector x maps to `projection * x`, torsion coordinates read modulo
/// the matching invariant factor. `lift` has one column per summand and maps
/// generators back to lattice representatives, so projection * lift == I.
struct Quotient {
    FinAbGroup group;
    IntMatrix projection;
    IntMatrix lift;

    /// Reduces projection * x into canonical coordinates (torsion entries in [0, d)).
    IntVec coordinates(const IntVec& x) const;
};

Quotient quotient_by_columns(const IntMatrix& relations);

/// A homomorphism between finitely generated abelian groups in the
/// generator coordinates of `Quotient`.
struct AbelianHom {
    FinAbGroup source;
    FinAbGroup target;
    IntMatrix matrix;  // target.generator_count() x source.generator_count()

    /// Canonical image of the source coordinate vector.
    IntVec apply(const IntVec& source_coordinates) const;
    bool is_zero() const;
};

/// Map induced on quotients by a lattice map f: Z^n -> Z^m that sends the
/// relations of `source` into those of `target`.
AbelianHom induced_hom(const Quotient& source, const Quotient& target, const IntMatrix& f);

// --- lattice helpers -------------------------------------------------------

/// Row-style Hermite normal form of the row span of m: echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_rows(const IntMatrix& m);

/// Basis (as rows, in Hermite form) of {x in Z^cols : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Integer solution c of basis_columns * c == v, if one exists.
std::optional<IntVec> solve_integral(const IntMatrix& basis_columns, const IntVec& v);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// --- rational linear algebra -----------------------------------------------

/// Some solution x of A x = b over Q (A given by rows), or nullopt.
std::optional<RatVec> solve_rational(const std::vector<RatVec>& a_rows, const RatVec& b);

/// Basis of the rational null space {x : A x = 0} (A given by rows, n columns).
std::vector<RatVec> rational_kernel(const std::vector<RatVec>& a_rows, std::size_t n);

std::vector<RatVec> to_rational_rows(const IntMatrix& m);

}  // namespace lgk
