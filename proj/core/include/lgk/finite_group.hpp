#pragma once

#include <cstddef>
#include <vector>

namespace lgk {

/// A finite group given by its full multiplication table.
///
/// Elements are indices 0..order()-1; `mul(a, b)` is the product a*b. The
/// table is checked for closure, identity, inverses and associativity on
/// construction. Intended for the small Galois quotients used here (order up
/// to a few dozen).
class FiniteGroup {
public:
    /// The trivial group.
    FiniteGroup();
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

    static FiniteGroup trivial() { return FiniteGroup(); }
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t order() const noexcept { return table_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t element_order(std::size_t a) const;
    bool is_trivial() const noexcept { return table_.size() == 1; }

    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
    const std::vector<std::size_t>& inverse_table() const noexcept { return inverse_; }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }
    friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// True iff `map` (indexed by elements of `source`) is a homomorphism into `target`.
bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const std::vector<std::size_t>& map);

/// True iff `map` is an injective homomorphism.
bool is_embedding(const FiniteGroup& source, const FiniteGroup& target, const std::vector<std::size_t>& map);

}  // namespace lgk
