// Exact dense rational matrices, fraction-free rank, and overflow-checked sparse integer matrices.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace unipotent {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static QMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    mpq_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::vector<mpq_class> row(std::size_t i) const;

    bool is_zero() const;
    std::size_t rank() const;
    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    QMatrix inverse() const;
    /// Rows as comma-separated exact fractions.
    std::string to_csv() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> data_;
};

/// Keeps a row-echelon basis of the vectors added so far.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}
    /// Returns true when v was independent of the current span.
    bool add(std::vector<mpq_class> v);
    bool contains(std::vector<mpq_class> v) const;
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<std::vector<mpq_class>>& rows() const noexcept { return rows_; }

private:
    void eliminate(std::vector<mpq_class>& v) const;
    std::size_t dim_;
    std::vector<std::vector<mpq_class>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Bareiss elimination; no division leaves Z.
std::size_t rank_fraction_free(std::vector<std::vector<mpz_class>> rows);
/// Rank over Q: each row is scaled to integers, then eliminated fraction-free.
std::size_t rank_rational(const std::vector<std::vector<mpq_class>>& rows);

/// int64 arithmetic that throws std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

using IntVector = std::vector<std::int64_t>;

/// Row-compressed integer matrix; every operation is overflow-checked.
class SparseIntMatrix {
public:
    using Row = std::vector<std::pair<std::size_t, std::int64_t>>;

    SparseIntMatrix() = default;
    explicit SparseIntMatrix(std::size_t n) : n_(n), rows_(n) {}
    static SparseIntMatrix identity(std::size_t n);
    /// [[a, b], [c, d]] from four blocks of equal size; empty matrices stand for zero blocks.
    static SparseIntMatrix blocks(const SparseIntMatrix& a, const SparseIntMatrix& b, const SparseIntMatrix& c,
                                  const SparseIntMatrix& d, std::size_t half);

    std::size_t size() const noexcept { return n_; }
    const Row& row(std::size_t i) const { return rows_[i]; }
    void set(std::size_t i, std::size_t j, std::int64_t v);
    std::int64_t get(std::size_t i, std::size_t j) const;
    std::size_t nonzeros() const;
    bool is_zero() const;
    std::int64_t max_abs() const;

    IntVector apply(const IntVector& v) const;
    SparseIntMatrix scaled(std::int64_t c) const;

    friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
    friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
    friend SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b);
    friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b);

private:
    std::size_t n_ = 0;
    std::vector<Row> rows_;
};

}  // namespace unipotent
