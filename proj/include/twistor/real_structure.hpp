#pragma once

// The fixed-point-free real structure on P^1 x P^1, its action on
// H^0(O(1,1)), the invariant RP^3 of sections and the pencil [s1 : -s2].

#include "twistor/gaussian.hpp"
#include "twistor/lattice.hpp"

#include <array>
#include <optional>
#include <vector>

namespace twistor::real {

/// [a0 : a1], not both zero.
struct ProjectivePair {
    GaussianScalar x0;
    GaussianScalar x1;

    ProjectivePair(GaussianScalar a0, GaussianScalar a1) : x0(std::move(a0)), x1(std::move(a1)) {
        if (x0.is_zero() && x1.is_zero())
            throw Error("ProjectivePair: both coordinates vanish");
    }

    /// Equality in P^1 by cross-multiplication.
    bool same_point(const ProjectivePair& o) const { return x0 * o.x1 == x1 * o.x0; }
    ProjectivePair conj() const { return {x0.conj(), x1.conj()}; }
};

/// ([z0:z1], [w0:w1]) on P^1 x P^1.
struct QuadricPoint {
    ProjectivePair z;
    ProjectivePair w;

    bool same_point(const QuadricPoint& o) const { return z.same_point(o.z) && w.same_point(o.w); }
};

inline QuadricPoint make_point(GaussianScalar z0, GaussianScalar z1, GaussianScalar w0, GaussianScalar w1) {
    return {{std::move(z0), std::move(z1)}, {std::move(w0), std::move(w1)}};
}

/// ([z0:z1],[w0:w1]) -> ([-conj z1 : conj z0], [-conj w1 : conj w0]).
inline QuadricPoint tau(const QuadricPoint& p) {
    return {{-p.z.x1.conj(), p.z.x0.conj()}, {-p.w.x1.conj(), p.w.x0.conj()}};
}

inline bool is_fixed_point(const QuadricPoint& p) { return tau(p).same_point(p); }

/// a z0w0 + b z0w1 + c z1w0 + d z1w1.
struct Section11 {
    std::array<GaussianScalar, 4> coeffs;

    const GaussianScalar& a() const { return coeffs[0]; }
    const GaussianScalar& b() const { return coeffs[1]; }
    const GaussianScalar& c() const { return coeffs[2]; }
    const GaussianScalar& d() const { return coeffs[3]; }

    friend Section11 operator*(const GaussianScalar& s, const Section11& x) {
        return {{s * x.coeffs[0], s * x.coeffs[1], s * x.coeffs[2], s * x.coeffs[3]}};
    }
    friend bool operator==(const Section11&, const Section11&) = default;
};

inline Section11 s1() { return {{1, 0, 0, 1}}; }
inline Section11 s2() { return {{0, 1, -1, 0}}; }

/// s -> tau^*(conj s).
inline Section11 tau_tilde(const Section11& s) {
    return {{s.d().conj(), -s.c().conj(), -s.b().conj(), s.a().conj()}};
}

inline bool is_invariant_section(const Section11& s) { return s.d() == s.a().conj() && s.c() == -s.b().conj(); }

/// [a1 + i a2 : b1 + i b2 : -b1 + i b2 : a1 - i a2].
inline Section11 fixed_space_embedding(const Rational& a1, const Rational& a2, const Rational& b1,
                                       const Rational& b2) {
    if (a1 == 0 && a2 == 0 && b1 == 0 && b2 == 0)
        throw Error("fixed_space_embedding: the zero vector is not a point of RP^3");
    Section11 s{{GaussianScalar(a1, a2), GaussianScalar(b1, b2), GaussianScalar(-b1, b2), GaussianScalar(a1, -a2)}};
    if (!is_invariant_section(s))
        throw std::logic_error("fixed_space_embedding: image is not tau-invariant");
    return s;
}

/// Value on the chosen affine representatives; only its vanishing is projective.
inline GaussianScalar evaluate_section(const Section11& s, const QuadricPoint& p) {
    return s.a() * p.z.x0 * p.w.x0 + s.b() * p.z.x0 * p.w.x1 + s.c() * p.z.x1 * p.w.x0 + s.d() * p.z.x1 * p.w.x1;
}

/// h = [s1 : -s2]; nullopt at a base point.
inline std::optional<ProjectivePair> pencil_value(const QuadricPoint& p) {
    GaussianScalar v1 = evaluate_section(s1(), p);
    GaussianScalar v2 = -evaluate_section(s2(), p);
    if (v1.is_zero() && v2.is_zero())
        return std::nullopt;
    return ProjectivePair(v1, v2);
}

/**
 * Solves s1 = s2 = 0 exactly. If z0 = 0 then s1 forces w1 = 0 and s2 forces
 * w0 = 0, so z0 != 0; symmetrically w0 != 0. With z = [1:t], w = [1:u]:
 * s2 gives u = t and s1 gives t^2 = -1.
 */
inline std::vector<QuadricPoint> base_locus() {
    std::vector<QuadricPoint> out;
    for (const GaussianScalar& t : gaussian_sqrt(GaussianScalar(-1))) {
        QuadricPoint p = make_point(1, t, 1, t);
        if (!evaluate_section(s1(), p).is_zero() || !evaluate_section(s2(), p).is_zero())
            throw std::logic_error("base_locus: candidate does not lie on both sections");
        out.push_back(p);
    }
    return out;
}

/// Real coordinates (Re a, Im a, ..., Re d, Im d) of a section.
inline std::array<Rational, 8> real_coordinates(const Section11& s) {
    std::array<Rational, 8> out;
    for (std::size_t k = 0; k < 4; ++k) {
        out[2 * k] = s.coeffs[k].re();
        out[2 * k + 1] = s.coeffs[k].im();
    }
    return out;
}

/**
 * Rank over Q of the tau-invariance conditions' solution space in R^8
 * coordinates: Re d = Re a, Im d = -Im a, Re c = -Re b, Im c = Im b.
 */
inline std::size_t invariant_space_dimension() {
    IntMatrix conditions(4, 8);
    // columns: a.re a.im b.re b.im c.re c.im d.re d.im
    conditions(0, 6) = 1, conditions(0, 0) = -1;
    conditions(1, 7) = 1, conditions(1, 1) = 1;
    conditions(2, 4) = 1, conditions(2, 2) = 1;
    conditions(3, 5) = 1, conditions(3, 3) = -1;
    return kernel_lattice(conditions).size();
}

inline std::array<Section11, 4> fixed_space_basis() {
    return {fixed_space_embedding(1, 0, 0, 0), fixed_space_embedding(0, 1, 0, 0), fixed_space_embedding(0, 0, 1, 0),
            fixed_space_embedding(0, 0, 0, 1)};
}

/// Random point with small Gaussian-rational coordinates.
inline QuadricPoint random_point(std::mt19937_64& rng, long bound = 9) {
    auto pair = [&] {
        for (;;) {
            GaussianScalar a = random_gaussian(rng, bound), b = random_gaussian(rng, bound);
            if (!a.is_zero() || !b.is_zero())
                return ProjectivePair(a, b);
        }
    };
    ProjectivePair z = pair();
    ProjectivePair w = pair();
    return {z, w};
}

}  // namespace twistor::real
