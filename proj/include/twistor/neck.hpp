#pragma once

// Characteristic-class arithmetic for the fixed-phase circle bundle over the
// exceptional quadric, and exact phase algebra for the local model t = uv.

#include "twistor/gaussian.hpp"
#include "twistor/quadric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twistor::neck {

enum class CircleBase { quadric, ruling_fibre, curve_on_quadric };

class CircleBundleClass {
public:
    static CircleBundleClass over_quadric(quadric::QuadricClass c1) {
        if (c1.unit_coeff() != 0 || c1.point_coeff() != 0)
            throw Error("CircleBundleClass: c1 over the quadric must be a divisor class");
        return CircleBundleClass(CircleBase::quadric, std::move(c1), 0, std::nullopt);
    }
    static CircleBundleClass over_ruling_fibre(Integer c1) {
        return CircleBundleClass(CircleBase::ruling_fibre, quadric::QuadricClass::zero(), std::move(c1), std::nullopt);
    }
    static CircleBundleClass over_curve(quadric::Bidegree curve, Integer c1) {
        return CircleBundleClass(CircleBase::curve_on_quadric, quadric::QuadricClass::zero(), std::move(c1),
                                 std::move(curve));
    }

    CircleBase base() const { return base_; }

    const quadric::QuadricClass& quadric_c1() const {
        if (base_ != CircleBase::quadric)
            throw Error("CircleBundleClass: bundle is not over the quadric");
        return quadric_c1_;
    }
    const Integer& c1() const {
        if (base_ == CircleBase::quadric)
            throw Error("CircleBundleClass: c1 over the quadric is a class, not an integer");
        return degree_;
    }
    const quadric::Bidegree& curve() const {
        if (!curve_)
            throw Error("CircleBundleClass: bundle is not over a curve");
        return *curve_;
    }

private:
    CircleBundleClass(CircleBase base, quadric::QuadricClass qc1, Integer degree, std::optional<quadric::Bidegree> curve)
        : base_(base), quadric_c1_(std::move(qc1)), degree_(std::move(degree)), curve_(std::move(curve)) {}

    CircleBase base_;
    quadric::QuadricClass quadric_c1_;
    Integer degree_;
    std::optional<quadric::Bidegree> curve_;
};

/// Unit circle bundle of the normal bundle O_Q(-1): c1 = -(b+w).
inline CircleBundleClass kn_fixed_phase_bundle() {
    return CircleBundleClass::over_quadric(-quadric::QuadricClass::xi());
}

/// Signed pairing of c1 with the fibre class b of Q -> l, before any orientation choice.
inline Integer raw_fibre_pairing(const CircleBundleClass& bundle) {
    return quadric::intersection_number(bundle.quadric_c1(), quadric::QuadricClass::b());
}

/// Restriction to a ruling fibre, with circle orientation chosen so the KN bundle gives +1.
inline CircleBundleClass restrict_to_ruling_fibre_bundle(const CircleBundleClass& bundle) {
    static const Integer orientation = raw_fibre_pairing(kn_fixed_phase_bundle());  // +-1, squares to 1
    return CircleBundleClass::over_ruling_fibre(orientation * raw_fibre_pairing(bundle));
}

/// Restriction to a curve of bidegree (a, b): c1 . (a*b + b*w).
inline CircleBundleClass restrict_to_curve(const CircleBundleClass& bundle, const quadric::Bidegree& curve) {
    return CircleBundleClass::over_curve(
        curve, quadric::intersection_number(bundle.quadric_c1(), quadric::QuadricClass::of(curve)));
}

/// c1 of the S^1-bundle associated to a T^2-bundle through the character (a, b).
inline Integer character_quotient(const std::pair<Integer, Integer>& chern_vector,
                                  const std::pair<Integer, Integer>& character) {
    return character.first * chern_vector.first + character.second * chern_vector.second;
}

struct ThreeManifold {
    enum class Kind { S3, RP3, S2xS1, Lens };
    Kind kind;
    Integer order;  // n for L(n,1)

    std::string name() const {
        switch (kind) {
        case Kind::S3:
            return "S3";
        case Kind::RP3:
            return "RP3";
        case Kind::S2xS1:
            return "S2xS1";
        default:
            return "L(" + order.get_str() + ",1)";
        }
    }
    friend bool operator==(const ThreeManifold&, const ThreeManifold&) = default;
};

/// Total space of the circle bundle over S^2 with the given c1.
inline ThreeManifold lens_space_of(const Integer& c1) {
    Integer n = abs(c1);
    if (n == 0)
        return {ThreeManifold::Kind::S2xS1, 0};
    if (n == 1)
        return {ThreeManifold::Kind::S3, 1};
    if (n == 2)
        return {ThreeManifold::Kind::RP3, 2};
    return {ThreeManifold::Kind::Lens, n};
}

struct FibreQuotient {
    Integer c1;
    ThreeManifold total_space;
};

/// KN circle over a ruling fibre times the Hopf bundle, quotiented along a character.
inline FibreQuotient antidiagonal_quotient_over_fibre(const std::pair<Integer, Integer>& character = {1, 1}) {
    const Integer kn = restrict_to_ruling_fibre_bundle(kn_fixed_phase_bundle()).c1();
    const Integer hopf = 1;
    Integer c1 = character_quotient({kn, hopf}, character);
    return {c1, lens_space_of(c1)};
}

inline FibreQuotient antidiagonal_quotient_over_fibre(const std::pair<Integer, Integer>& chern_vector,
                                                      const std::pair<Integer, Integer>& character) {
    Integer c1 = character_quotient(chern_vector, character);
    return {c1, lens_space_of(c1)};
}

/// Phases (rho1, rho2) of the two branches with rho1 * rho2 = e^{i theta}.
class PhasePair {
public:
    PhasePair(GaussianScalar rho1, GaussianScalar rho2, GaussianScalar theta)
        : rho1_(std::move(rho1)), rho2_(std::move(rho2)), theta_(std::move(theta)) {
        if (!rho1_.is_unit() || !rho2_.is_unit() || !theta_.is_unit())
            throw Error("PhasePair: phases must have unit modulus");
        if (rho1_ * rho2_ != theta_)
            throw Error("PhasePair: rho1 * rho2 != e^{i theta}");
    }
    const GaussianScalar& rho1() const { return rho1_; }
    const GaussianScalar& rho2() const { return rho2_; }
    const GaussianScalar& theta() const { return theta_; }
    friend bool operator==(const PhasePair&, const PhasePair&) = default;

private:
    GaussianScalar rho1_, rho2_, theta_;
};

inline PhasePair phase_solve(const GaussianScalar& theta, const GaussianScalar& rho2) {
    if (!theta.is_unit() || !rho2.is_unit())
        throw Error("phase_solve: inputs must have unit modulus");
    return PhasePair(theta / rho2, rho2, theta);
}

/// A point of the neck in polar form: squared modulus and phase of each coordinate.
struct NeckPoint {
    Rational u_modulus_sq;
    GaussianScalar u_phase;
    Rational v_modulus_sq;
    GaussianScalar v_phase;
};

/// u = sqrt(rho) e^{i theta} eta^{-1}, v = sqrt(rho) eta, carried as squared moduli.
inline NeckPoint neck_point(const Rational& rho_sq, const GaussianScalar& theta, const GaussianScalar& eta) {
    if (rho_sq < 0)
        throw Error("neck_point: squared modulus must be non-negative");
    PhasePair phases = phase_solve(theta, eta);
    NeckPoint p{rho_sq, phases.rho1(), rho_sq, phases.rho2()};
    if (p.u_modulus_sq != p.v_modulus_sq || p.u_phase * p.v_phase != theta)
        throw std::logic_error("neck_point: |u| = |v| or phase(u) phase(v) = e^{i theta} violated");
    return p;
}

struct DecoratedPoint {
    std::string id;
    PhasePair phases;
};

struct PhaseDecoration {
    GaussianScalar theta;
    std::vector<DecoratedPoint> points;
};

inline PhaseDecoration phase_decoration(const std::vector<std::string>& ids, const GaussianScalar& theta,
                                        const std::vector<GaussianScalar>& etas) {
    if (ids.size() != etas.size())
        throw Error("phase_decoration: " + std::to_string(ids.size()) + " points but " +
                    std::to_string(etas.size()) + " phase choices");
    if (!theta.is_unit())
        throw Error("phase_decoration: e^{i theta} must have unit modulus");
    PhaseDecoration out{theta, {}};
    for (std::size_t k = 0; k < ids.size(); ++k)
        out.points.push_back({ids[k], phase_solve(theta, etas[k])});
    return out;
}

}  // namespace twistor::neck
