#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cauchysum/errors.hpp"
#include "cauchysum/ring.hpp"

namespace cauchysum {

/// Dense row-major matrix over a ring. All entries share the matrix context.
template <Ring S>
class Matrix {
public:
    using scalar_type = S;
    using context_type = typename S::context_type;

    Matrix(std::size_t rows, std::size_t cols, context_type ctx = {})
        : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, ctx.zero()) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries, context_type ctx = {})
        : rows_(rows), cols_(cols), ctx_(ctx), data_(std::move(entries)) {
        if (data_.size() != rows * cols)
            throw ShapeError("entry count " + std::to_string(data_.size()) + " does not match " +
                             std::to_string(rows) + "x" + std::to_string(cols));
        for (const auto& e : data_)
            if (!(e.context() == ctx_)) throw ContextMismatch("matrix entry from a different ring context");
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<S>> rows, context_type ctx = {}) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        std::vector<S> entries;
        entries.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) throw ShapeError("ragged rows");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return Matrix(r, c, std::move(entries), ctx);
    }

    static Matrix identity(std::size_t n, context_type ctx = {}) {
        Matrix m(n, n, ctx);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const context_type& context() const { return ctx_; }

    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const S& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw ShapeError("index out of range");
        return (*this)(i, j);
    }

    std::span<const S> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const S> entries() const { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, ctx_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Copy with row `skip_row` and column `skip_col` removed.
    Matrix minor(std::size_t skip_row, std::size_t skip_col) const {
        Matrix m(rows_ - 1, cols_ - 1, ctx_);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == skip_row) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == skip_col) continue;
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

    Matrix scaled(const S& k) const {
        Matrix m = *this;
        for (auto& e : m.data_) e = e * k;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ctx_ == b.ctx_ && a.data_ == b.data_;
    }

    /// Canonical text form "[[a,b],[c,d]]".
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ',';
                out += (*this)(i, j).str();
            }
            out += ']';
        }
        return out + "]";
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    context_type ctx_;
    std::vector<S> data_;
};

}  // namespace cauchysum
