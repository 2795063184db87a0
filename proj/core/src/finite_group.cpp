#include "lgk/finite_group.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace lgk {

FiniteGroup::FiniteGroup() : table_{{0}}, identity_(0), inverse_{0} {}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw std::invalid_argument("FiniteGroup: empty multiplication table");
    for (const auto& row : table_) {
        if (row.size() != n) throw std::invalid_argument("FiniteGroup: table is not square");
        for (auto x : row)
            if (x >= n) throw std::invalid_argument("FiniteGroup: table entry out of range");
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("FiniteGroup: no identity element");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] == n)
            throw std::invalid_argument("FiniteGroup: element " + std::to_string(a) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("FiniteGroup: multiplication is not associative");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("FiniteGroup::cyclic: order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order();
    std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y)
            t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const std::vector<std::size_t>& map) {
    if (map.size() != source.order()) return false;
    for (auto x : map)
        if (x >= target.order()) return false;
    for (std::size_t a = 0; a < source.order(); ++a)
        for (std::size_t b = 0; b < source.order(); ++b)
            if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return false;
    return true;
}

bool is_embedding(const FiniteGroup& source, const FiniteGroup& target, const std::vector<std::size_t>& map) {
    if (!is_homomorphism(source, target, map)) return false;
    return std::set<std::size_t>(map.begin(), map.end()).size() == map.size();
}

}  // namespace lgk
