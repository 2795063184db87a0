#include <stdexcept>

#include "lgk/zlat.hpp"

namespace lgk {

IntMatrix hermite_rows(const IntMatrix& m) {
    IntMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        bool pivot = false;
        for (;;) {
            std::size_t best = a.rows();
            for (std::size_t i = r; i < a.rows(); ++i)
                if (a(i, c) != 0 && (best == a.rows() || abs(a(i, c)) < abs(a(best, c)))) best = i;
            if (best == a.rows()) break;
            pivot = true;
            a.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < a.rows(); ++i) {
                if (a(i, c) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                a.add_row_multiple(i, r, -q);
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (!pivot) continue;
        if (a(r, c) < 0) a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            a.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return a.row_range(0, r);
}

IntMatrix kernel_basis(const IntMatrix& m) {
    const SmithForm f = smith_normal_form(m);
    std::vector<IntVec> rows;
    for (std::size_t j = f.rank; j < m.cols(); ++j) rows.push_back(f.V.column(j));
    if (rows.empty()) return IntMatrix(0, m.cols());
    return hermite_rows(IntMatrix::from_rows(rows, m.cols()));
}

std::optional<IntVec> solve_integral(const IntMatrix& basis_columns, const IntVec& v) {
    if (v.size() != basis_columns.rows()) throw std::invalid_argument("solve_integral: dimension mismatch");
    const SmithForm f = smith_normal_form(basis_columns);
    const IntVec uv = f.U.apply(v);
    IntVec y(basis_columns.cols(), Int(0));
    for (std::size_t i = 0; i < uv.size(); ++i) {
        if (i < f.rank) {
            if (!mpz_divisible_p(uv[i].get_mpz_t(), f.D(i, i).get_mpz_t())) return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), uv[i].get_mpz_t(), f.D(i, i).get_mpz_t());
        } else if (uv[i] != 0) {
            return std::nullopt;
        }
    }
    return f.V.apply(y);
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("unimodular_inverse: matrix is not square");
    const SmithForm f = smith_normal_form(m);
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (f.D(i, i) != 1) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
    return f.V * f.U;
}

std::vector<RatVec> to_rational_rows(const IntMatrix& m) {
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_rational(m.row(i)));
    return rows;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        const Rat inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat k = a[i][c];
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= k * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<RatVec> solve_rational(const std::vector<RatVec>& a_rows, const RatVec& b) {
    if (a_rows.size() != b.size()) throw std::invalid_argument("solve_rational: dimension mismatch");
    const std::size_t n = a_rows.empty() ? 0 : a_rows.front().size();
    std::vector<RatVec> aug = a_rows;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    const auto pivots = rref(aug, n + 1);
    RatVec x(n, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == n) return std::nullopt;
        x[pivots[k]] = aug[k][n];
    }
    return x;
}

std::vector<RatVec> rational_kernel(const std::vector<RatVec>& a_rows, std::size_t n) {
    std::vector<RatVec> a = a_rows;
    const auto pivots = rref(a, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(n, Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace lgk
