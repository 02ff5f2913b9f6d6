#pragma once

// Integer linear algebra built on a single primitive: row Hermite normal
// form with a unimodular transform. Kernels come out saturated because the
// transform is invertible over the integers.

#include "twistor/integer.hpp"

#include <algorithm>
#include <utility>

namespace twistor {

struct HermiteForm {
    IntMatrix form;       // U * A, in row echelon form with positive reduced pivots
    IntMatrix transform;  // U, unimodular
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const { return pivot_columns.size(); }
};

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline void swap_rows(IntMatrix& m, std::size_t r1, std::size_t r2) {
    if (r1 == r2)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(r1, j), m(r2, j));
}

// row(dst) -= q * row(src)
inline void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) -= q * m(src, j);
}

inline void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
}

}  // namespace detail

inline HermiteForm hermite_normal_form(const IntMatrix& a) {
    HermiteForm out{a, IntMatrix::identity(a.rows()), {}};
    IntMatrix& h = out.form;
    IntMatrix& u = out.transform;
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        // Euclid on the column: move the smallest nonzero entry up and reduce the rest by it.
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t r = row; r < h.rows(); ++r)
                if (h(r, col) != 0 && (best == h.rows() || abs(h(r, col)) < abs(h(best, col))))
                    best = r;
            if (best == h.rows())
                break;
            detail::swap_rows(h, row, best);
            detail::swap_rows(u, row, best);
            bool done = true;
            for (std::size_t r = row + 1; r < h.rows(); ++r) {
                if (h(r, col) == 0)
                    continue;
                Integer q = detail::floor_div(h(r, col), h(row, col));
                detail::sub_row(h, r, row, q);
                detail::sub_row(u, r, row, q);
                if (h(r, col) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (h(row, col) == 0)
            continue;
        if (h(row, col) < 0) {
            detail::negate_row(h, row);
            detail::negate_row(u, row);
        }
        for (std::size_t r = 0; r < row; ++r) {
            Integer q = detail::floor_div(h(r, col), h(row, col));
            detail::sub_row(h, r, row, q);
            detail::sub_row(u, r, row, q);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    return out;
}

inline std::size_t rank(const IntMatrix& a) { return hermite_normal_form(a).rank(); }

/// Hermite-reduced basis of the lattice spanned by the given row vectors.
inline std::vector<IntVector> lattice_basis(const std::vector<IntVector>& generators, std::size_t dim) {
    if (generators.empty())
        return {};
    HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(generators, dim));
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < hf.rank(); ++i)
        basis.push_back(hf.form.row(i));
    return basis;
}

/// Basis of {v in Z^cols : a v = 0}. Saturated and Hermite-reduced.
inline std::vector<IntVector> kernel_lattice(const IntMatrix& a) {
    HermiteForm hf = hermite_normal_form(a.transposed());
    std::vector<IntVector> kernel;
    for (std::size_t r = hf.rank(); r < hf.form.rows(); ++r)
        kernel.push_back(hf.transform.row(r));
    return lattice_basis(kernel, a.cols());
}

/// True iff v is an integer combination of the basis vectors.
inline bool lattice_membership(const std::vector<IntVector>& basis, IntVector v) {
    for (const auto& b : basis)
        if (b.size() != v.size())
            throw Error("lattice_membership: basis vector of length " + std::to_string(b.size()) +
                        " against vector of length " + std::to_string(v.size()));
    if (basis.empty())
        return is_zero(v);
    HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(basis, v.size()));
    for (std::size_t i = 0; i < hf.rank(); ++i) {
        std::size_t c = hf.pivot_columns[i];
        const Integer& p = hf.form(i, c);
        if (v[c] % p != 0)
            return false;
        Integer q = v[c] / p;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] -= q * hf.form(i, j);
    }
    return is_zero(v);
}

}  // namespace twistor
