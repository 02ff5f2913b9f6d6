#include "oracles.hpp"
#include "twistor/graded_ring.hpp"
#include "twistor/lattice.hpp"
#include "twistor/quadric.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace twistor;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

std::vector<IntVector> rows_of(const IntMatrix& m) {
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(m.row(r));
    return out;
}

RingPtr truncated_polynomial_ring(int top) {
    std::vector<std::vector<std::string>> labels;
    std::vector<ProductEntry> products;
    for (int d = 0; d <= top; ++d)
        labels.push_back({d == 0 ? "1" : "h^" + std::to_string(d)});
    for (int a = 1; a <= top; ++a)
        for (int b = a; a + b <= top; ++b)
            products.push_back({a, 0, b, 0, int_vector({1})});
    return make_ring(top, labels, products, int_vector({1}));
}

}  // namespace

TEST(Hermite, FormIsUpperTriangularWithReducedEntries) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5, 6);
        HermiteForm h = hermite_normal_form(a);
        EXPECT_EQ(h.transform * a, h.form);
        for (std::size_t k = 0; k < h.rank(); ++k) {
            std::size_t p = h.pivot_columns[k];
            EXPECT_GT(h.form(k, p), 0);
            for (std::size_t r = k + 1; r < h.form.rows(); ++r)
                EXPECT_EQ(h.form(r, p), 0);
            for (std::size_t r = 0; r < k; ++r) {
                EXPECT_GE(h.form(r, p), 0);
                EXPECT_LT(h.form(r, p), h.form(k, p));
            }
        }
        for (std::size_t r = h.rank(); r < h.form.rows(); ++r)
            EXPECT_TRUE(is_zero(h.form.row(r)));
        EXPECT_EQ(h.rank(), oracle::rational_rank(rows_of(a)));
    }
}

TEST(Hermite, TransformIsUnimodular) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a = random_matrix(rng, 3, 3, 5);
        HermiteForm h = hermite_normal_form(a);
        // a unimodular matrix has an integral inverse, hence full rank and HNF = identity
        EXPECT_EQ(hermite_normal_form(h.transform).form, IntMatrix::identity(3));
    }
}

TEST(Kernel, SpecExamples) {
    auto k = kernel_lattice(IntMatrix::from_rows({int_vector({1, 1})}, 2));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE(k[0] == int_vector({1, -1}) || k[0] == int_vector({-1, 1}));
    EXPECT_TRUE(kernel_lattice(IntMatrix::identity(3)).empty());
    EXPECT_EQ(kernel_lattice(IntMatrix(0, 2)).size(), 2u);
}

TEST(Kernel, MatchesBoundedEnumeration) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t cols = 2 + rng() % 3;
        IntMatrix a = random_matrix(rng, 1 + rng() % 2, cols, 2);
        auto basis = kernel_lattice(a);
        for (const auto& v : basis)
            EXPECT_TRUE(is_zero(a * v));
        EXPECT_EQ(basis.size(), cols - oracle::rational_rank(rows_of(a)));
        auto found = oracle::bounded_kernel(rows_of(a), cols, 3);
        for (const auto& v : found)
            EXPECT_TRUE(lattice_membership(basis, v));
        bool small = true;
        for (const auto& v : basis)
            for (const auto& x : v)
                small = small && abs(x) <= 3;
        if (small) {
            EXPECT_EQ(basis.size(), oracle::rational_rank(found)) << "kernel rank differs from enumeration";
        }
    }
}

TEST(Kernel, IsSaturated) {
    // 2x + 4y = 0: the kernel is generated by (2,-1), not (4,-2)
    auto k = kernel_lattice(IntMatrix::from_rows({int_vector({2, 4})}, 2));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE(lattice_membership(k, int_vector({2, -1})));
}

TEST(Membership, SpecExamples) {
    std::vector<IntVector> basis = {int_vector({1, 2})};
    EXPECT_TRUE(lattice_membership(basis, int_vector({1, 2})));
    EXPECT_TRUE(lattice_membership(basis, int_vector({0, 0})));
    EXPECT_FALSE(lattice_membership(basis, int_vector({1, 0})));
    EXPECT_FALSE(lattice_membership({int_vector({2, 0})}, int_vector({1, 0})));
    EXPECT_THROW(lattice_membership(basis, int_vector({1, 2, 3})), Error);
}

TEST(Membership, CombinationsAreMembers) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix gens = random_matrix(rng, 2, 4, 4);
        auto basis = lattice_basis(rows_of(gens), 4);
        IntVector v(4);
        for (std::size_t r = 0; r < 2; ++r)
            v = v + Integer(static_cast<long>(rng() % 11) - 5) * gens.row(r);
        EXPECT_TRUE(lattice_membership(basis, v));
    }
}

TEST(GradedRing, RejectsInvalidTables) {
    EXPECT_THROW(make_ring(1, {{"1", "u"}, {"x"}}, {}), Error);
    EXPECT_THROW(make_ring(1, {{"1"}, {"x", "x"}}, {}), Error);
    EXPECT_THROW(make_ring(2, {{"1"}, {"x", "y"}, {"p"}},
                           {{1, 0, 1, 1, int_vector({1})}, {1, 1, 1, 0, int_vector({2})}}),
                 Error);
    EXPECT_THROW(make_ring(2, {{"1"}, {"x"}, {"p"}}, {{1, 0, 1, 0, int_vector({1, 0})}}), Error);
    EXPECT_THROW(make_ring(1, {{"1"}, {"x"}}, {}, int_vector({1, 2})), Error);
}

TEST(GradedRing, DetectsNonAssociativity) {
    // degree-1 generators x, y, degree-2 p, q, degree-3 t with x.(x.y) != (x.x).y
    std::vector<ProductEntry> products = {
        {1, 0, 1, 0, int_vector({1, 0})}, {1, 0, 1, 1, int_vector({0, 1})}, {1, 1, 1, 1, int_vector({0, 0})},
        {1, 0, 2, 0, int_vector({0})},    {1, 0, 2, 1, int_vector({1})},    {1, 1, 2, 0, int_vector({0})},
        {1, 1, 2, 1, int_vector({0})}};
    EXPECT_THROW(make_ring(3, {{"1"}, {"x", "y"}, {"p", "q"}, {"t"}}, products), Error);
}

TEST(RingElement, SpecExamples) {
    const RingPtr& q = quadric::ring();
    RingElement b = RingElement::basis(q, "b"), w = RingElement::basis(q, "w");
    RingElement xi = b + w;
    EXPECT_EQ(xi.coeffs(1), int_vector({1, 1}));
    EXPECT_EQ(b + RingElement(q), b);
    EXPECT_TRUE((b - b).is_zero());
    EXPECT_EQ(b * w, RingElement::basis(q, "pt"));
    EXPECT_EQ(RingElement::one(q) * xi, xi);
    RingElement z = b - w;
    EXPECT_EQ(z * z, -2 * (z * w));
    EXPECT_EQ(xi.degree(), 1);
    EXPECT_EQ((xi + RingElement::one(q)).degree(), std::nullopt);
    EXPECT_THROW(RingElement::basis(q, "nope"), Error);
}

TEST(RingElement, RingAxiomsOnRandomElements) {
    RingPtr r = truncated_polynomial_ring(4);
    std::mt19937_64 rng(15);
    auto random_element = [&] {
        std::vector<IntVector> c;
        for (int d = 0; d <= 4; ++d)
            c.push_back(int_vector({static_cast<long>(rng() % 9) - 4}));
        return RingElement(r, c);
    };
    for (int trial = 0; trial < 300; ++trial) {
        RingElement x = random_element(), y = random_element(), z = random_element();
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(RingElement::one(r) * x, x);
    }
}

TEST(RingElement, MixedRingsAreRejected) {
    RingPtr a = truncated_polynomial_ring(2), b = truncated_polynomial_ring(3);
    EXPECT_THROW(RingElement::one(a) + RingElement::one(b), Error);
    // structurally equal rings are interchangeable
    RingPtr a2 = truncated_polynomial_ring(2);
    EXPECT_NO_THROW(RingElement::one(a) * RingElement::one(a2));
}

TEST(GradedMap, SpecExamples) {
    const RingPtr& q = quadric::ring();
    RingElement b = RingElement::basis(q, "b"), w = RingElement::basis(q, "w");
    EXPECT_EQ(GradedMap::identity(q)(b), b);
    EXPECT_EQ(quadric::sigma_map()(w), b);
    EXPECT_TRUE(GradedMap::zero(q, q, 0)(b + w).is_zero());
}

TEST(GradedMap, HomomorphismCheck) {
    RingPtr r = truncated_polynomial_ring(3);
    // h -> 2h is multiplicative only with h^k -> 2^k h^k
    auto doubling = [&](int k) {
        return GradedMap::from_images(
            r, r, 0, [&](int d, std::size_t) { return Integer(d == 0 ? 1 : (d == 1 ? 2 : k)) * RingElement::basis(r, d, 0); },
            false);
    };
    EXPECT_FALSE(doubling(1).ring_hom_defects().empty());
    auto good = GradedMap::from_images(
        r, r, 0, [&](int d, std::size_t) { return Integer(1 << d) * RingElement::basis(r, d, 0); }, true);
    EXPECT_TRUE(good.ring_hom_defects().empty());
    EXPECT_THROW(GradedMap::from_images(
                     r, r, 0, [&](int d, std::size_t) { return Integer(d == 2 ? 3 : 1) * RingElement::basis(r, d, 0); },
                     true),
                 Error);
    EXPECT_EQ(compose(good, good)(RingElement::basis(r, 1, 0)), 4 * RingElement::basis(r, 1, 0));
}

TEST(GradedMap, KernelOfAugmentation) {
    RingPtr r = truncated_polynomial_ring(2);
    const RingPtr& q = quadric::ring();
    // degree-1 map Z -> Z^2, h -> b + w
    auto f = GradedMap::from_images(r, q, 0, [&](int d, std::size_t) {
        if (d == 1)
            return RingElement::basis(q, "b") + RingElement::basis(q, "w");
        return RingElement::basis(q, d, 0);
    }, false);
    EXPECT_TRUE(kernel_lattice(f, 1).empty());
}
