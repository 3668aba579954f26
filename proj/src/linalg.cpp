#include "unipotent/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace unipotent {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<mpq_class> QMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

std::size_t QMatrix::rank() const {
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t i = 0; i < rows_; ++i) rows.push_back(row(i));
    return rank_rational(rows);
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    QMatrix a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a.at(piv, col)) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.at(piv, j), a.at(col, j));
            std::swap(inv.at(piv, j), inv.at(col, j));
        }
        mpq_class p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(a.at(i, col)) == 0) continue;
            mpq_class f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

void EchelonBasis::eliminate(std::vector<mpq_class>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const mpq_class f = v[pivots_[r]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = pivots_[r]; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
}

bool EchelonBasis::add(std::vector<mpq_class> v) {
    eliminate(v);
    std::size_t piv = 0;
    while (piv < dim_ && sgn(v[piv]) == 0) ++piv;
    if (piv == dim_) return false;
    const mpq_class p = v[piv];
    for (auto& x : v) x /= p;
    // keep rows fully reduced so elimination order does not matter
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const mpq_class f = rows_[r][piv];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool EchelonBasis::contains(std::vector<mpq_class> v) const {
    eliminate(v);
    return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

std::string QMatrix::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ',';
            out += at(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpq_class& x = a.at(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b.at(k, j)) != 0) c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    QMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    QMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

std::size_t rank_fraction_free(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(const std::vector<std::vector<mpq_class>>& rows) {
    std::vector<std::vector<mpz_class>> ints;
    ints.reserve(rows.size());
    for (const auto& r : rows) {
        mpz_class l = 1;
        for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> row;
        row.reserve(r.size());
        for (const auto& x : r) row.emplace_back(x.get_num() * (l / x.get_den()));
        ints.push_back(std::move(row));
    }
    return rank_fraction_free(std::move(ints));
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
    return r;
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
    SparseIntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, 1});
    return m;
}

SparseIntMatrix SparseIntMatrix::blocks(const SparseIntMatrix& a, const SparseIntMatrix& b,
                                        const SparseIntMatrix& c, const SparseIntMatrix& d, std::size_t half) {
    SparseIntMatrix m(2 * half);
    auto place = [&](const SparseIntMatrix& blk, std::size_t r0, std::size_t c0) {
        if (blk.n_ == 0) return;
        if (blk.n_ != half) throw std::invalid_argument("block size mismatch");
        for (std::size_t i = 0; i < half; ++i)
            for (const auto& [j, v] : blk.rows_[i]) m.rows_[r0 + i].push_back({c0 + j, v});
    };
    place(a, 0, 0);
    place(b, 0, half);
    place(c, half, 0);
    place(d, half, half);
    return m;
}

void SparseIntMatrix::set(std::size_t i, std::size_t j, std::int64_t v) {
    auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != r.end() && it->first == j) {
        if (v == 0)
            r.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        r.insert(it, {j, v});
    }
}

std::int64_t SparseIntMatrix::get(std::size_t i, std::size_t j) const {
    const auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t col) { return e.first < col; });
    return it != r.end() && it->first == j ? it->second : 0;
}

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

bool SparseIntMatrix::is_zero() const { return nonzeros() == 0; }

std::int64_t SparseIntMatrix::max_abs() const {
    std::int64_t m = 0;
    for (const auto& r : rows_)
        for (const auto& [j, v] : r) m = std::max(m, v < 0 ? -v : v);
    return m;
}

IntVector SparseIntMatrix::apply(const IntVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector size mismatch");
    IntVector out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        std::int64_t acc = 0;
        for (const auto& [j, x] : rows_[i])
            if (v[j] != 0) acc = checked_add(acc, checked_mul(x, v[j]));
        out[i] = acc;
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::scaled(std::int64_t c) const {
    SparseIntMatrix m(n_);
    if (c == 0) return m;
    for (std::size_t i = 0; i < n_; ++i)
        for (const auto& [j, v] : rows_[i]) m.rows_[i].push_back({j, checked_mul(v, c)});
    return m;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    SparseIntMatrix c(a.n_);
    std::vector<std::int64_t> acc(a.n_, 0);
    std::vector<char> used(a.n_, 0);
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < a.n_; ++i) {
        cols.clear();
        for (const auto& [k, x] : a.rows_[i])
            for (const auto& [j, y] : b.rows_[k]) {
                if (!used[j]) {
                    used[j] = 1;
                    cols.push_back(j);
                }
                acc[j] = checked_add(acc[j], checked_mul(x, y));
            }
        std::sort(cols.begin(), cols.end());
        for (std::size_t j : cols) {
            if (acc[j] != 0) c.rows_[i].push_back({j, acc[j]});
            acc[j] = 0;
            used[j] = 0;
        }
    }
    return c;
}

namespace {

SparseIntMatrix combine(const SparseIntMatrix& a, const SparseIntMatrix& b, std::int64_t sign) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
    SparseIntMatrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::map<std::size_t, std::int64_t> row;
        for (const auto& [j, v] : a.row(i)) row[j] = v;
        for (const auto& [j, v] : b.row(i)) row[j] = checked_add(row[j], checked_mul(sign, v));
        for (const auto& [j, v] : row)
            if (v != 0) c.set(i, j, v);
    }
    return c;
}

}  // namespace

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) { return combine(a, b, 1); }
SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b) { return combine(a, b, -1); }

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

}  // namespace unipotent
