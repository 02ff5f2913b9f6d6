#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistor {

/// Every failed precondition in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw Error("IntMatrix::from_rows: row " + std::to_string(i) + " has length " +
                            std::to_string(rows[i].size()) + ", expected " + std::to_string(cols));
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const {
        return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    IntVector operator*(const IntVector& v) const {
        if (v.size() != cols_)
            throw Error("IntMatrix: vector length " + std::to_string(v.size()) + " does not match " +
                        std::to_string(cols_) + " columns");
        IntVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_)
            throw Error("IntMatrix: inner dimensions differ");
        IntMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out(i, j) += (*this)(i, k) * o(k, j);
            }
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

inline bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

inline IntVector operator+(IntVector a, const IntVector& b) {
    if (a.size() != b.size())
        throw Error("IntVector: length mismatch in addition");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

inline IntVector operator-(IntVector a, const IntVector& b) {
    if (a.size() != b.size())
        throw Error("IntVector: length mismatch in subtraction");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

inline IntVector operator*(const Integer& s, IntVector v) {
    for (auto& x : v)
        x *= s;
    return v;
}

inline IntVector int_vector(std::initializer_list<long> values) {
    IntVector v;
    v.reserve(values.size());
    for (long x : values)
        v.emplace_back(x);
    return v;
}

/// Narrowing conversion; throws if the value does not fit.
inline long to_long(const Integer& x) {
    if (!x.fits_slong_p())
        throw Error("integer " + x.get_str() + " does not fit in a machine word");
    return x.get_si();
}

}  // namespace twistor
