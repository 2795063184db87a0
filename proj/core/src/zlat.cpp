#include "lgk/zlat.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lgk {

// --- IntMatrix -------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("IntMatrix::from_columns: ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVec> r;
    std::size_t cols = 0;
    for (const auto& row : rows) {
        IntVec v;
        for (long x : row) v.emplace_back(x);
        cols = v.size();
        r.push_back(std::move(v));
    }
    return from_rows(r, cols);
}

IntVec IntMatrix::row(std::size_t i) const {
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<IntVec> IntMatrix::row_list() const {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

std::vector<IntVec> IntMatrix::column_list() const {
    std::vector<IntVec> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

RatVec IntMatrix::apply(const RatVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    RatVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += Rat((*this)(i, j)) * v[j];
        out[i] = s;
    }
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix IntMatrix::hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row counts differ");
    IntMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vconcat: column counts differ");
    std::vector<Int> data = a.data_;
    data.insert(data.end(), b.data_.begin(), b.data_.end());
    return IntMatrix(a.rows_ + b.rows_, a.cols_, std::move(data));
}

IntMatrix IntMatrix::row_range(std::size_t r0, std::size_t r1) const {
    IntMatrix m(r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i - r0, j) = (*this)(i, j);
    return m;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = *this;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    IntMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

IntMatrix operator*(const Int& k, const IntMatrix& a) {
    IntMatrix m = a;
    for (auto& x : m.data_) x *= k;
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << lgk::to_string(m.row(i));
    }
    return os << ']';
}

// --- vectors ---------------------------------------------------------------

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

IntVec operator-(const IntVec& a) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

IntVec scale(const Int& k, const IntVec& a) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
    return c;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    RatVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

RatVec scale(const Rat& k, const RatVec& a) {
    RatVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
    return c;
}

RatVec to_rational(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

IntVec to_integral(const RatVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw std::invalid_argument("to_integral: non-integral entry");
        r[i] = v[i].get_num();
    }
    return r;
}

IntVec zero_vector(std::size_t n) { return IntVec(n, Int(0)); }
RatVec zero_rat_vector(std::size_t n) { return RatVec(n, Rat(0)); }

IntVec unit_vector(std::size_t n, std::size_t i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    return v;
}

std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

Int common_denominator(const RatVec& v) {
    Int d = 1;
    for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
}

// --- Smith normal form -----------------------------------------------------

IntVec SmithForm::diagonal() const {
    IntVec d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

namespace {

// Smallest |entry| in D[t.., t..]; ties broken by column, then row.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t j = t; j < d.cols(); ++j) {
        for (std::size_t i = t; i < d.rows(); ++i) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& d = f.D;
    const std::size_t steps = std::min(m.rows(), m.cols());
    std::size_t t = 0;
    for (; t < steps; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(d, t, pr, pc)) break;
        for (;;) {
            d.swap_rows(t, pr);
            f.U.swap_rows(t, pr);
            d.swap_cols(t, pc);
            f.V.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                d.add_row_multiple(i, t, -q);
                f.U.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                d.add_col_multiple(j, t, -q);
                f.V.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (clean) {
                // Enforce divisibility of the remaining block by the pivot.
                bool divisible = true;
                for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
                    for (std::size_t j = t + 1; j < d.cols(); ++j)
                        if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                            d.add_row_multiple(t, i, 1);
                            f.U.add_row_multiple(t, i, 1);
                            divisible = false;
                            break;
                        }
                if (divisible) break;
            }
            find_pivot(d, t, pr, pc);
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            f.U.negate_row(t);
        }
    }
    f.rank = t;
    return f;
}

// --- FinAbGroup ------------------------------------------------------------

FinAbGroup::FinAbGroup(std::size_t free_rank, IntVec invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw std::invalid_argument("FinAbGroup: invariant factor below 2");
        if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
            throw std::invalid_argument("FinAbGroup: invariant factors do not form a divisibility chain");
    }
}

FinAbGroup FinAbGroup::from_cyclic_orders(const IntVec& orders) {
    IntMatrix d(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = abs(orders[i]);
    return cokernel(d);
}

FinAbGroup FinAbGroup::cyclic(const Int& n) { return from_cyclic_orders({n}); }

Int FinAbGroup::order() const {
    if (free_rank_ != 0) throw std::domain_error("FinAbGroup::order: group is infinite");
    Int n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
    IntVec orders = factors_;
    orders.insert(orders.end(), other.factors_.begin(), other.factors_.end());
    for (std::size_t i = 0; i < free_rank_ + other.free_rank_; ++i) orders.emplace_back(0);
    return from_cyclic_orders(orders);
}

std::string FinAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    for (const auto& d : factors_) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.get_str();
    }
    if (free_rank_ > 0) {
        if (!s.empty()) s += " + ";
        s += "Z^" + std::to_string(free_rank_);
    }
    return s;
}

FinAbGroup cokernel(const IntMatrix& m) {
    const SmithForm f = smith_normal_form(m);
    IntVec factors;
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.D(i, i) > 1) factors.push_back(f.D(i, i));
    return FinAbGroup(m.rows() - f.rank, std::move(factors));
}

// --- Quotient --------------------------------------------------------------

Quotient quotient_by_columns(const IntMatrix& relations) {
    const std::size_t n = relations.rows();
    const SmithForm f = smith_normal_form(relations);
    const IntMatrix u_inv = unimodular_inverse(f.U);

    std::vector<std::size_t> torsion_rows, free_rows;
    IntVec factors;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < f.rank) {
            if (f.D(i, i) > 1) {
                torsion_rows.push_back(i);
                factors.push_back(f.D(i, i));
            }
        } else {
            free_rows.push_back(i);
        }
    }
    std::vector<std::size_t> order = torsion_rows;
    order.insert(order.end(), free_rows.begin(), free_rows.end());

    Quotient q{FinAbGroup(free_rows.size(), factors), IntMatrix(order.size(), n), IntMatrix(n, order.size())};
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            q.projection(k, j) = f.U(order[k], j);
            q.lift(j, k) = u_inv(j, order[k]);
        }
    }
    return q;
}

IntVec Quotient::coordinates(const IntVec& x) const {
    IntVec c = projection.apply(x);
    const auto& d = group.invariant_factors();
    for (std::size_t k = 0; k < d.size(); ++k) mpz_fdiv_r(c[k].get_mpz_t(), c[k].get_mpz_t(), d[k].get_mpz_t());
    return c;
}

IntVec AbelianHom::apply(const IntVec& source_coordinates) const {
    IntVec c = matrix.apply(source_coordinates);
    const auto& d = target.invariant_factors();
    for (std::size_t k = 0; k < d.size(); ++k) mpz_fdiv_r(c[k].get_mpz_t(), c[k].get_mpz_t(), d[k].get_mpz_t());
    return c;
}

bool AbelianHom::is_zero() const {
    for (std::size_t j = 0; j < source.generator_count(); ++j)
        if (!lgk::is_zero(apply(unit_vector(source.generator_count(), j)))) return false;
    return true;
}

AbelianHom induced_hom(const Quotient& source, const Quotient& target, const IntMatrix& f) {
    const std::size_t ns = source.group.generator_count();
    AbelianHom h{source.group, target.group, IntMatrix(target.group.generator_count(), ns)};
    for (std::size_t j = 0; j < ns; ++j) {
        const IntVec image = target.coordinates(f.apply(source.lift.column(j)));
        for (std::size_t i = 0; i < image.size(); ++i) h.matrix(i, j) = image[i];
    }
    return h;
}

}  // namespace lgk
