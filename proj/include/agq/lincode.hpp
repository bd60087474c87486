// Linear codes over GF(q^2) held in canonical reduced row-echelon form.

#pragma once

#include <agq/field.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agq {

/// Dense row-major matrix of field elements.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(std::size_t cols, const std::vector<std::vector<Elem>>& rows)
    {
        Matrix out(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("row " + std::to_string(i) + " has length " +
                                            std::to_string(rows[i].size()) + ", expected " +
                                            std::to_string(cols));
            std::copy(rows[i].begin(), rows[i].end(), out.row(i).begin());
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Elem> values)
    {
        if (values.size() != cols_)
            throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    void truncate_rows(std::size_t rows)
    {
        rows_ = std::min(rows_, rows);
        data_.resize(rows_ * cols_);
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a != b)
            std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<Elem> data_;
};

namespace detail {

/// dst += factor * src
inline void axpy(const Field& f, std::span<Elem> dst, Elem factor, std::span<const Elem> src)
{
    if (factor.is_zero())
        return;
    const std::uint32_t lf = f.log_unchecked(factor);
    for (std::size_t c = 0; c < dst.size(); ++c)
        if (!src[c].is_zero())
            dst[c] += f.exp_unchecked(lf + f.log_unchecked(src[c]));
}

inline void scale(const Field& f, std::span<Elem> row, Elem factor)
{
    for (Elem& v : row)
        v = f.mul(v, factor);
}

} // namespace detail

/// Reduced row-echelon form in place; zero rows are dropped. Pivots are
/// searched in the order given by `column_order` (all columns ascending when
/// empty). Returns the pivot column of each remaining row.
inline std::vector<std::size_t> rref(const Field& f, Matrix& m,
                                     std::span<const std::size_t> column_order = {})
{
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    const std::size_t ncols = column_order.empty() ? m.cols() : column_order.size();
    for (std::size_t ci = 0; ci < ncols && rank < m.rows(); ++ci) {
        const std::size_t col = column_order.empty() ? ci : column_order[ci];
        std::size_t sel = rank;
        while (sel < m.rows() && m(sel, col).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        m.swap_rows(sel, rank);
        detail::scale(f, m.row(rank), f.inv(m(rank, col)));
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank)
                detail::axpy(f, m.row(r), m(r, col), m.row(rank));
        pivots.push_back(col);
        ++rank;
    }
    m.truncate_rows(rank);
    return pivots;
}

inline std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

class LinearCode
{
public:
    /// The zero code of length n.
    LinearCode(FieldPtr field, std::size_t n) : field_(std::move(field)), gen_(0, n)
    {
        if (!field_)
            throw std::invalid_argument("null field");
    }

    /// Row space of `rows`.
    static LinearCode from_rows(FieldPtr field, std::size_t n, Matrix rows)
    {
        if (rows.cols() != n)
            throw std::invalid_argument("rows have " + std::to_string(rows.cols()) +
                                        " columns, expected " + std::to_string(n));
        LinearCode code(std::move(field), n);
        code.pivots_ = rref(*code.field_, rows);
        code.gen_ = std::move(rows);
        return code;
    }

    static LinearCode from_rows(FieldPtr field, std::size_t n,
                                const std::vector<std::vector<Elem>>& rows)
    {
        return from_rows(std::move(field), n, Matrix::from_rows(n, rows));
    }

    static LinearCode full_space(FieldPtr field, std::size_t n)
    {
        Matrix id(n, n);
        for (std::size_t i = 0; i < n; ++i)
            id(i, i) = Elem(1);
        return from_rows(std::move(field), n, std::move(id));
    }

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dimension() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduce v against the generator; zero iff v is a codeword.
    std::vector<Elem> reduce(std::span<const Elem> v) const
    {
        std::vector<Elem> r(v.begin(), v.end());
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            detail::axpy(*field_, r, r[pivots_[i]], gen_.row(i));
        return r;
    }

    bool contains(std::span<const Elem> v) const
    {
        if (v.size() != length())
            throw std::invalid_argument("vector length mismatch");
        for (Elem x : reduce(v))
            if (!x.is_zero())
                return false;
        return true;
    }

    /// Canonical form identity; fields are compared by parameters.
    friend bool operator==(const LinearCode& a, const LinearCode& b)
    {
        return a.field_->e() == b.field_->e() && a.gen_ == b.gen_;
    }

private:
    FieldPtr field_;
    Matrix gen_;
    std::vector<std::size_t> pivots_;
};

namespace detail {

inline void require_compatible(const LinearCode& a, const LinearCode& b)
{
    if (a.field().e() != b.field().e())
        throw std::invalid_argument("codes over different fields");
    if (a.length() != b.length())
        throw std::invalid_argument("codes of different lengths " + std::to_string(a.length()) +
                                    " and " + std::to_string(b.length()));
}

inline Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b)
{
    Elem acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += f.mul(a[i], b[i]);
    return acc;
}

} // namespace detail

/// Euclidean dual: nullspace of the generator.
inline LinearCode dual(const LinearCode& code)
{
    const std::size_t n = code.length();
    const Matrix& g = code.generator();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : code.pivots())
        is_pivot[p] = true;

    Matrix h(0, n);
    std::vector<Elem> v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::fill(v.begin(), v.end(), Elem{});
        v[free] = Elem(1);
        // In characteristic 2, -g(i, free) = g(i, free).
        for (std::size_t i = 0; i < code.pivots().size(); ++i)
            v[code.pivots()[i]] = g(i, free);
        h.append_row(v);
    }
    return LinearCode::from_rows(code.field_ptr(), n, std::move(h));
}

/// Entry-wise q-th powers of all codewords.
inline LinearCode frobenius_code(const LinearCode& code)
{
    Matrix rows = code.generator();
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (Elem& v : rows.row(r))
            v = code.field().frobenius_q(v);
    return LinearCode::from_rows(code.field_ptr(), code.length(), std::move(rows));
}

/// { v : sum v_i c_i^q = 0 for all c in C }, as the nullspace of the conjugated generator.
inline LinearCode hermitian_dual(const LinearCode& code) { return dual(frobenius_code(code)); }

inline bool subset(const LinearCode& sub, const LinearCode& super)
{
    detail::require_compatible(sub, super);
    for (std::size_t r = 0; r < sub.dimension(); ++r)
        if (!super.contains(sub.generator().row(r)))
            return false;
    return true;
}

inline bool equal(const LinearCode& a, const LinearCode& b)
{
    detail::require_compatible(a, b);
    return a == b;
}

/// gen * gen^T == 0
inline bool is_euclidean_self_orthogonal(const LinearCode& code)
{
    const Matrix& g = code.generator();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.rows(); ++j)
            if (!detail::dot(code.field(), g.row(i), g.row(j)).is_zero())
                return false;
    return true;
}

/// gen * conj(gen)^T == 0, with conj the entry-wise q-th power.
inline bool is_hermitian_self_orthogonal(const LinearCode& code)
{
    const Field& f = code.field();
    const Matrix& g = code.generator();
    Matrix conj = g;
    for (std::size_t r = 0; r < conj.rows(); ++r)
        for (Elem& v : conj.row(r))
            v = f.frobenius_q(v);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.rows(); ++j)
            if (!detail::dot(f, g.row(i), conj.row(j)).is_zero())
                return false;
    return true;
}

} // namespace agq
