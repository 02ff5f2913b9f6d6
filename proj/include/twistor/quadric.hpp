#pragma once

// Chow ring of the exceptional quadric Q = P^1 x P^1 and the line-bundle
// arithmetic on it. Degree-1 basis (b, w): b is the fibre class of the
// projection to the blown-up line, w the class of the opposite ruling.

#include "twistor/graded_ring.hpp"

#include <cstdint>
#include <ostream>

namespace twistor::quadric {

/// The ring Z[b,w]/(b^2, w^2) with deg(bw) = 1.
inline const RingPtr& ring() {
    static const RingPtr r = make_ring(2, {{"1"}, {"b", "w"}, {"pt"}},
                                       {
                                           {1, 0, 1, 0, int_vector({0})},
                                           {1, 0, 1, 1, int_vector({1})},
                                           {1, 1, 1, 1, int_vector({0})},
                                       },
                                       int_vector({1}));
    return r;
}

enum class BasisMode { bw, zw };

/// Divisor class m*b + n*w.
struct Bidegree {
    Integer m;
    Integer n;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Bidegree& d) {
    return os << "(" << d.m.get_str() << "," << d.n.get_str() << ")";
}

/**
 * An element of CH(Q) together with the basis it should be presented in.
 * Storage is always (b,w); the (z,w) view uses z = b - w.
 */
class QuadricClass {
public:
    explicit QuadricClass(RingElement element, BasisMode mode = BasisMode::bw)
        : element_(std::move(element)), mode_(mode) {
        if (!same_ring(element_.ring(), ring()))
            throw Error("QuadricClass: element is not in the quadric Chow ring");
    }

    static QuadricClass zero() { return QuadricClass(RingElement(ring())); }
    static QuadricClass one() { return QuadricClass(RingElement::one(ring())); }
    static QuadricClass point(const Integer& k = 1) {
        return QuadricClass(RingElement::homogeneous(ring(), 2, {k}));
    }
    static QuadricClass bw(const Integer& m, const Integer& n) {
        return QuadricClass(RingElement::homogeneous(ring(), 1, {m, n}), BasisMode::bw);
    }
    static QuadricClass of(const Bidegree& d) { return bw(d.m, d.n); }
    /// p*z + q*w = p*b + (q - p)*w.
    static QuadricClass zw(const Integer& p, const Integer& q) {
        return QuadricClass(RingElement::homogeneous(ring(), 1, {p, q - p}), BasisMode::zw);
    }
    static QuadricClass b() { return bw(1, 0); }
    static QuadricClass w() { return bw(0, 1); }
    static QuadricClass z() { return zw(1, 0); }
    static QuadricClass xi() { return bw(1, 1); }

    const RingElement& element() const { return element_; }
    BasisMode mode() const { return mode_; }
    QuadricClass in_mode(BasisMode mode) const { return QuadricClass(element_, mode); }

    /// Degree-1 coordinates in the requested basis: (b,w) or (z,w).
    std::pair<Integer, Integer> divisor_coords(BasisMode mode) const {
        const IntVector& v = element_.coeffs(1);
        if (mode == BasisMode::bw)
            return {v[0], v[1]};
        return {v[0], v[0] + v[1]};
    }
    std::pair<Integer, Integer> divisor_coords() const { return divisor_coords(mode_); }

    Bidegree bidegree() const {
        auto [m, n] = divisor_coords(BasisMode::bw);
        return {m, n};
    }
    Integer unit_coeff() const { return element_.coeffs(0)[0]; }
    Integer point_coeff() const { return element_.coeffs(2)[0]; }

    QuadricClass operator+(const QuadricClass& o) const { return QuadricClass(element_ + o.element_, mode_); }
    QuadricClass operator-(const QuadricClass& o) const { return QuadricClass(element_ - o.element_, mode_); }
    QuadricClass operator-() const { return QuadricClass(-element_, mode_); }
    QuadricClass operator*(const QuadricClass& o) const { return QuadricClass(element_ * o.element_, mode_); }
    friend QuadricClass operator*(const Integer& s, const QuadricClass& x) {
        return QuadricClass(s * x.element_, x.mode_);
    }
    friend QuadricClass operator*(long s, const QuadricClass& x) { return Integer(s) * x; }

    /// Equality of classes; the presentation mode is not part of the value.
    friend bool operator==(const QuadricClass& a, const QuadricClass& b) { return a.element_ == b.element_; }

private:
    RingElement element_;
    BasisMode mode_;
};

/// "2*z + 3*w" style rendering in the class's own basis.
inline std::string to_string(const QuadricClass& x) {
    if (x.mode() == BasisMode::bw)
        return twistor::to_string(x.element());
    std::vector<std::string> terms;
    auto term = [&](const Integer& c, const std::string& name) {
        if (c == 0)
            return;
        std::string s = (c < 0 ? "-" : "+");
        if (abs(c) != 1)
            s += Integer(abs(c)).get_str() + "*";
        terms.push_back(s + name);
    };
    term(x.unit_coeff(), "1");
    auto [p, q] = x.divisor_coords(BasisMode::zw);
    term(p, "z");
    term(q, "w");
    term(x.point_coeff(), "pt");
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string& t = terms[i];
        if (i == 0)
            out += (t[0] == '-' ? "-" : "") + t.substr(1);
        else
            out += (t[0] == '-' ? " - " : " + ") + t.substr(1);
    }
    return out;
}

/// The ruling swap b <-> w as a ring automorphism of CH(Q).
inline const GradedMap& sigma_map() {
    static const GradedMap s = GradedMap::from_images(
        ring(), ring(), 0,
        [](int d, std::size_t i) {
            if (d == 1)
                return RingElement::basis(ring(), 1, 1 - i);
            return RingElement::basis(ring(), d, i);
        },
        true);
    return s;
}

inline QuadricClass sigma_pushforward(const QuadricClass& x) {
    return QuadricClass(sigma_map()(x.element()), x.mode());
}

// The swap is an involution, so the pullback is given by the same matrices.
inline QuadricClass sigma_pullback(const QuadricClass& x) {
    return QuadricClass(sigma_map()(x.element()), x.mode());
}

inline Integer intersection_number(const QuadricClass& x, const QuadricClass& y) {
    auto divisor = [](const QuadricClass& c) { return c.unit_coeff() == 0 && c.point_coeff() == 0; };
    if (!divisor(x) || !divisor(y))
        throw Error("intersection_number: both classes must be divisor classes");
    return (x * y).point_coeff();
}

inline Integer arithmetic_genus(const Bidegree& d) { return (d.m - 1) * (d.n - 1); }

inline QuadricClass canonical_class() { return QuadricClass::bw(-2, -2); }

enum class Ruling {
    g_fibre,  // fibre of Q -> l, class b
    other,    // fibre of the opposite ruling, class w
};

/// Degree of O(m,n) on a fibre of the selected ruling.
inline Integer restrict_to_ruling_fibre(const Bidegree& d, Ruling ruling) {
    const QuadricClass fibre = ruling == Ruling::g_fibre ? QuadricClass::b() : QuadricClass::w();
    return intersection_number(QuadricClass::of(d), fibre);
}

struct CohomologyDims {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;
    friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// h^i(Q, O(a,b)) by Kuenneth from h^0, h^1 of O(n) on P^1.
inline CohomologyDims cohomology_dims(std::int64_t a, std::int64_t b) {
    auto p = [](std::int64_t n) { return n + 1 > 0 ? n + 1 : 0; };
    auto q = [](std::int64_t n) { return -n - 1 > 0 ? -n - 1 : 0; };
    return {p(a) * p(b), p(a) * q(b) + q(a) * p(b), q(a) * q(b)};
}

}  // namespace twistor::quadric
