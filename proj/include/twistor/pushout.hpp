#pragma once

// Blow-up of a twistor space along a twistor line and the operational Chow
// ring of the two-component pushout, computed degreewise as an integer
// equalizer of the two restrictions to the exceptional quadric.

#include "twistor/graded_ring.hpp"
#include "twistor/quadric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace twistor {

/// Chow ring of a smooth twistor threefold with a chosen twistor line.
class TwistorChow {
public:
    TwistorChow(std::string name, RingPtr ring, RingElement line_class, IntVector twistor_degrees,
                RingElement point_class)
        : name_(std::move(name)), ring_(std::move(ring)), line_(std::move(line_class)),
          twistor_degrees_(std::move(twistor_degrees)), point_(std::move(point_class)) {
        if (ring_->top_degree() != 3)
            throw Error("TwistorChow '" + name_ + "': ring must have top degree 3");
        if (!ring_->degree_functional())
            throw Error("TwistorChow '" + name_ + "': ring needs a degree functional");
        if (!same_ring(line_.ring(), ring_) || !same_ring(point_.ring(), ring_))
            throw Error("TwistorChow '" + name_ + "': classes must live in the given ring");
        if (line_.is_zero() || line_.degree() != 2)
            throw Error("TwistorChow '" + name_ + "': line class must be a nonzero degree-2 class");
        if (point_.degree() != 3 || degree_of(point_) != 1)
            throw Error("TwistorChow '" + name_ + "': point class must be a degree-3 class of degree 1");
        if (twistor_degrees_.size() != ring_->rank(1))
            throw Error("TwistorChow '" + name_ + "': need one twistor degree per degree-1 basis element");
        for (std::size_t i = 0; i < ring_->rank(1); ++i) {
            Integer expected = degree_of(RingElement::basis(ring_, 1, i) * line_);
            if (twistor_degrees_[i] != expected)
                throw Error("TwistorChow '" + name_ + "': twistor degree of " + ring_->label(1, i) + " is " +
                            twistor_degrees_[i].get_str() + " but its product with the line has degree " +
                            expected.get_str());
        }
    }

    const std::string& name() const { return name_; }
    const RingPtr& ring() const { return ring_; }
    const RingElement& line_class() const { return line_; }
    const IntVector& twistor_degrees() const { return twistor_degrees_; }
    const RingElement& point_class() const { return point_; }

private:
    std::string name_;
    RingPtr ring_;
    RingElement line_;
    IntVector twistor_degrees_;
    RingElement point_;
};

/// CH(P^3) = Z[h]/h^4 with the line h^2.
inline TwistorChow projective_space() {
    RingPtr r = make_ring(3, {{"1"}, {"h"}, {"h^2"}, {"h^3"}},
                          {
                              {1, 0, 1, 0, int_vector({1})},
                              {1, 0, 2, 0, int_vector({1})},
                          },
                          int_vector({1}));
    return TwistorChow("P3", r, RingElement::basis(r, "h^2"), int_vector({1}), RingElement::basis(r, "h^3"));
}

/**
 * Flag threefold, CH = Z[x,y]/(x^2+xy+y^2, x^3) with basis
 * 1; x, y; x^2, xy; x^2y and deg(x^2y) = 1. In this basis y^2 = -x^2 - xy,
 * x^3 = y^3 = 0 and xy^2 = -x^2y. Both generators have twistor degree 1,
 * which forces the line class 2x^2 + xy.
 */
inline TwistorChow flag_threefold() {
    RingPtr r = make_ring(3, {{"1"}, {"x", "y"}, {"x^2", "xy"}, {"x^2y"}},
                          {
                              {1, 0, 1, 0, int_vector({1, 0})},
                              {1, 0, 1, 1, int_vector({0, 1})},
                              {1, 1, 1, 1, int_vector({-1, -1})},
                              {1, 0, 2, 0, int_vector({0})},
                              {1, 0, 2, 1, int_vector({1})},
                              {1, 1, 2, 0, int_vector({1})},
                              {1, 1, 2, 1, int_vector({-1})},
                          },
                          int_vector({1}));
    return TwistorChow("flag", r, RingElement::homogeneous(r, 2, int_vector({2, 1})), int_vector({1, 1}),
                       RingElement::basis(r, "x^2y"));
}

inline std::vector<std::string> builtin_bases() { return {"P3", "flag"}; }

inline TwistorChow builtin_base(const std::string& name) {
    if (name == "P3")
        return projective_space();
    if (name == "flag")
        return flag_threefold();
    throw Error("unknown built-in twistor space '" + name + "' (expected P3 or flag)");
}

/**
 * Chow ring of Bl_l(Z). Basis: f*CH(Z) plus [Q] in degree 1 and j_*b in
 * degree 2. With N_l = O(1)+O(1) the exceptional divisor restricts to
 * j*[Q] = b - w, which gives
 *
 *   [Q]*f*a = deg(a|_l) j_*b,   [Q]^2 = 2 j_*b - f*[l],
 *   [Q]*j_*b = -[pt],           [Q]*f*beta = f*a*j_*b = 0.
 */
class BlownUpChow {
public:
    explicit BlownUpChow(TwistorChow base) : base_(std::move(base)), ring_(build_ring(base_)) {
        const RingPtr& z = base_.ring();
        const RingPtr& q = quadric::ring();
        const std::size_t n1 = z->rank(1), n2 = z->rank(2);

        pullback_.emplace(GradedMap::from_images(
            z, ring_, 0, [&](int d, std::size_t i) { return embed(d, i); }, true));

        restriction_.emplace(GradedMap::from_images(
            ring_, q, 0,
            [&](int d, std::size_t i) -> RingElement {
                switch (d) {
                case 0:
                    return RingElement::one(q);
                case 1:
                    if (i == n1)
                        return quadric::QuadricClass::z().element();
                    return (base_.twistor_degrees()[i] * quadric::QuadricClass::b()).element();
                case 2:
                    if (i == n2)
                        return quadric::QuadricClass::point(-1).element();
                    return RingElement(q);
                default:
                    return RingElement(q);
                }
            },
            true));

        pushforward_.emplace(GradedMap::from_images(q, ring_, 1, [&](int d, std::size_t i) -> RingElement {
            switch (d) {
            case 0:
                return exceptional_divisor();
            case 1:
                return i == 0 ? exceptional_fibre() : line_pullback() - exceptional_fibre();
            default:
                return pullback(base_.point_class());
            }
        }));
    }

    const TwistorChow& base() const { return base_; }
    const RingPtr& ring() const { return ring_; }
    const GradedMap& pullback_map() const { return *pullback_; }
    /// j*: CH(Bl) -> CH(Q).
    const GradedMap& restriction_to_Q() const { return *restriction_; }
    /// j_*: CH(Q) -> CH(Bl), raising degree by one.
    const GradedMap& pushforward_from_Q() const { return *pushforward_; }

    RingElement pullback(const RingElement& x) const { return (*pullback_)(x); }
    quadric::QuadricClass restrict_to_quadric(const RingElement& x) const {
        return quadric::QuadricClass((*restriction_)(x));
    }
    RingElement pushforward(const quadric::QuadricClass& x) const { return (*pushforward_)(x.element()); }

    /// [Q]
    RingElement exceptional_divisor() const { return RingElement::basis(ring_, 1, base_.ring()->rank(1)); }
    /// j_*b, the class of a fibre of Q -> l.
    RingElement exceptional_fibre() const { return RingElement::basis(ring_, 2, base_.ring()->rank(2)); }
    /// f*[l]
    RingElement line_pullback() const { return pullback(base_.line_class()); }

    /// Violations of j_*(j*x . g) = x . j_*g over basis pairs.
    std::vector<std::string> projection_formula_defects() const {
        std::vector<std::string> defects;
        const RingPtr& q = quadric::ring();
        for (int d = 0; d <= ring_->top_degree(); ++d)
            for (std::size_t i = 0; i < ring_->rank(d); ++i)
                for (int e = 0; e <= q->top_degree(); ++e)
                    for (std::size_t k = 0; k < q->rank(e); ++k) {
                        RingElement x = RingElement::basis(ring_, d, i);
                        RingElement g = RingElement::basis(q, e, k);
                        if ((*pushforward_)((*restriction_)(x) * g) != x * (*pushforward_)(g))
                            defects.push_back("j_*(j*" + ring_->label(d, i) + "*" + q->label(e, k) + ") != " +
                                              ring_->label(d, i) + "*j_*" + q->label(e, k));
                    }
        return defects;
    }

private:
    static RingPtr build_ring(const TwistorChow& base) {
        const RingPtr& z = base.ring();
        const std::size_t n1 = z->rank(1), n2 = z->rank(2), n3 = z->rank(3);
        std::vector<std::vector<std::string>> labels(4);
        labels[0] = {"1"};
        for (int d = 1; d <= 3; ++d)
            for (const auto& l : z->labels(d))
                labels[d].push_back("f*" + l);
        labels[1].push_back("[Q]");
        labels[2].push_back("j_*b");

        // Coefficient vectors in the blown-up basis.
        auto lift = [&](int d, const IntVector& v) {
            IntVector out = v;
            if (d == 1 || d == 2)
                out.emplace_back(0);
            return out;
        };
        auto fibre = [&](const Integer& c) {
            IntVector out(n2 + 1);
            out[n2] = c;
            return out;
        };
        const IntVector point = base.point_class().coeffs(3);

        std::vector<ProductEntry> products;
        for (int d1 = 1; d1 <= 3; ++d1)
            for (int d2 = d1; d1 + d2 <= 3; ++d2)
                for (std::size_t i1 = 0; i1 < z->rank(d1); ++i1)
                    for (std::size_t i2 = (d1 == d2 ? i1 : 0); i2 < z->rank(d2); ++i2)
                        products.push_back({d1, i1, d2, i2, lift(d1 + d2, z->product(d1, i1, d2, i2))});
        for (std::size_t i = 0; i < n1; ++i) {
            products.push_back({1, n1, 1, i, fibre(base.twistor_degrees()[i])});
            products.push_back({1, i, 2, n2, IntVector(n3)});
        }
        products.push_back({1, n1, 1, n1, lift(2, Integer(-1) * base.line_class().coeffs(2)) + fibre(2)});
        for (std::size_t i = 0; i < n2; ++i)
            products.push_back({1, n1, 2, i, IntVector(n3)});
        products.push_back({1, n1, 2, n2, Integer(-1) * point});

        return make_ring(3, std::move(labels), products, z->degree_functional());
    }

    RingElement embed(int d, std::size_t i) const { return RingElement::basis(ring_, d, i); }

    TwistorChow base_;
    RingPtr ring_;
    std::optional<GradedMap> pullback_;
    std::optional<GradedMap> restriction_;
    std::optional<GradedMap> pushforward_;
};

inline BlownUpChow blow_up(TwistorChow z) { return BlownUpChow(std::move(z)); }

/// A pair of classes on the two branches.
struct ClassPair {
    RingElement first;
    RingElement second;
    friend bool operator==(const ClassPair&, const ClassPair&) = default;
};

/**
 * Operational Chow ring of Bl_1 \cup_Q Bl_2: per degree, the saturated
 * lattice of pairs (a1, a2) with j1*a1 = sigma* j2*a2. Elements are kept as
 * pairs; products are componentwise.
 */
class EqualizerRing {
public:
    EqualizerRing(BlownUpChow b1, BlownUpChow b2) : b1_(std::move(b1)), b2_(std::move(b2)) {
        if (!same_ring(b1_.restriction_to_Q().target(), b2_.restriction_to_Q().target()) ||
            !same_ring(b1_.restriction_to_Q().target(), quadric::ring()))
            throw Error("EqualizerRing: branches restrict to different quadric rings");
        for (int d = 0; d <= 3; ++d)
            lattices_.push_back(kernel_lattice(matching_matrix(d)));
    }

    const BlownUpChow& branch1() const { return b1_; }
    const BlownUpChow& branch2() const { return b2_; }

    /// Degree-d block of (a1, a2) -> j1*a1 - sigma*(j2*a2), columns ordered branch 1 then branch 2.
    IntMatrix matching_matrix(int d) const {
        if (d > quadric::ring()->top_degree())
            return IntMatrix(0, b1_.ring()->rank(d) + b2_.ring()->rank(d));
        const IntMatrix& j1 = b1_.restriction_to_Q().matrix(d);
        const IntMatrix j2 = quadric::sigma_map().matrix(d) * b2_.restriction_to_Q().matrix(d);
        IntMatrix m(j1.rows(), j1.cols() + j2.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < j1.cols(); ++c)
                m(r, c) = j1(r, c);
            for (std::size_t c = 0; c < j2.cols(); ++c)
                m(r, j1.cols() + c) = -j2(r, c);
        }
        return m;
    }

    std::size_t rank(int d) const { return lattices_.at(static_cast<std::size_t>(d)).size(); }
    std::vector<std::size_t> ranks() const {
        std::vector<std::size_t> out;
        for (int d = 0; d <= 3; ++d)
            out.push_back(rank(d));
        return out;
    }
    const std::vector<IntVector>& lattice(int d) const { return lattices_.at(static_cast<std::size_t>(d)); }

    ClassPair split(int d, const IntVector& v) const {
        const std::size_t n1 = b1_.ring()->rank(d);
        if (v.size() != n1 + b2_.ring()->rank(d))
            throw Error("EqualizerRing::split: vector has the wrong length for degree " + std::to_string(d));
        return {RingElement::homogeneous(b1_.ring(), d, IntVector(v.begin(), v.begin() + n1)),
                RingElement::homogeneous(b2_.ring(), d, IntVector(v.begin() + n1, v.end()))};
    }

    IntVector join(int d, const ClassPair& p) const {
        IntVector v = p.first.coeffs(d);
        const IntVector& w = p.second.coeffs(d);
        v.insert(v.end(), w.begin(), w.end());
        return v;
    }

    ClassPair basis_pair(int d, std::size_t k) const { return split(d, lattice(d).at(k)); }

    /// j1*a1 - sigma*(j2*a2)
    quadric::QuadricClass mismatch(const ClassPair& p) const {
        check_pair(p);
        return b1_.restrict_to_quadric(p.first) - quadric::sigma_pullback(b2_.restrict_to_quadric(p.second));
    }

    bool contains(const ClassPair& p) const { return mismatch(p).element().is_zero(); }

    static ClassPair multiply(const ClassPair& x, const ClassPair& y) {
        return {x.first * y.first, x.second * y.second};
    }

    /// ([Q1], -[Q2]): the exceptional divisor seen from both sides.
    ClassPair exceptional_class() const {
        return {b1_.exceptional_divisor(), -b2_.exceptional_divisor()};
    }

    std::vector<std::string> product_closure_defects() const {
        std::vector<std::string> defects;
        for (int d1 = 0; d1 <= 3; ++d1)
            for (int d2 = d1; d1 + d2 <= 3; ++d2)
                for (std::size_t k1 = 0; k1 < rank(d1); ++k1)
                    for (std::size_t k2 = (d1 == d2 ? k1 : 0); k2 < rank(d2); ++k2) {
                        ClassPair p = multiply(basis_pair(d1, k1), basis_pair(d2, k2));
                        if (!contains(p) || !lattice_membership(lattice(d1 + d2), join(d1 + d2, p)))
                            defects.push_back("A" + std::to_string(d1) + "[" + std::to_string(k1) + "] * A" +
                                              std::to_string(d2) + "[" + std::to_string(k2) + "]");
                    }
        return defects;
    }

private:
    void check_pair(const ClassPair& p) const {
        if (!same_ring(p.first.ring(), b1_.ring()) || !same_ring(p.second.ring(), b2_.ring()))
            throw Error("EqualizerRing: pair components must live in the two branch rings");
        auto d1 = p.first.degree(), d2 = p.second.degree();
        if (d1 && d2 && *d1 != *d2)
            throw Error("EqualizerRing: pair components have different degrees " + std::to_string(*d1) + " and " +
                        std::to_string(*d2));
    }

    BlownUpChow b1_;
    BlownUpChow b2_;
    std::vector<std::vector<IntVector>> lattices_;
};

inline EqualizerRing build_equalizer(BlownUpChow b1, BlownUpChow b2) {
    return EqualizerRing(std::move(b1), std::move(b2));
}

}  // namespace twistor
