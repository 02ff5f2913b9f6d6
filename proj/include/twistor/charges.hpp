#pragma once

// Component-pair bookkeeping on the central fibre: specialization, lifts of
// Chern polynomials, glued bundle data, polarized charge, and the vanishing
// dimension counts used for unobstructedness.

#include "twistor/pushout.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace twistor::charges {

/// A cycle on Z0 as its two component classes plus the matching flag.
struct CentralFibreCycle {
    ClassPair pair;
    bool matched = false;
};

inline CentralFibreCycle specialize(const EqualizerRing& eq, ClassPair pair) {
    bool matched = eq.contains(pair);  // throws on codimension mismatch
    return {std::move(pair), matched};
}

/// Integer polynomial in m variables, stored as exponent vector -> coefficient.
class Polynomial {
public:
    explicit Polynomial(std::size_t variables) : vars_(variables) {}

    static Polynomial constant(std::size_t variables, const Integer& c) {
        Polynomial p(variables);
        p.add_term(std::vector<unsigned>(variables, 0), c);
        return p;
    }

    Polynomial& add_term(std::vector<unsigned> exponents, const Integer& c) {
        if (exponents.size() != vars_)
            throw Error("Polynomial: exponent vector has the wrong length");
        terms_[std::move(exponents)] += c;
        return *this;
    }

    std::size_t variables() const { return vars_; }
    const std::map<std::vector<unsigned>, Integer>& terms() const { return terms_; }

    RingElement evaluate(const RingPtr& ring, const std::vector<RingElement>& values) const {
        if (values.size() != vars_)
            throw Error("Polynomial: expected " + std::to_string(vars_) + " values, got " +
                        std::to_string(values.size()));
        RingElement out(ring);
        for (const auto& [exps, c] : terms_) {
            RingElement term = c * RingElement::one(ring);
            for (std::size_t k = 0; k < vars_; ++k)
                term = term * pow(values[k], exps[k]);
            out += term;
        }
        return out;
    }

private:
    std::size_t vars_;
    std::map<std::vector<unsigned>, Integer> terms_;
};

/**
 * Evaluates P on the first Chern classes componentwise. Inputs must be
 * matched codimension-1 pairs; the result is matched because j* and sigma*
 * are ring homomorphisms, and that is asserted.
 */
inline CentralFibreCycle practical_lift(const EqualizerRing& eq, const Polynomial& p,
                                        const std::vector<ClassPair>& c1_data) {
    std::vector<RingElement> first, second;
    for (std::size_t k = 0; k < c1_data.size(); ++k) {
        const ClassPair& c = c1_data[k];
        if (c.first.degree().value_or(1) != 1 || c.second.degree().value_or(1) != 1)
            throw Error("practical_lift: input pair " + std::to_string(k) + " is not of codimension 1");
        if (!eq.contains(c))
            throw Error("practical_lift: input pair " + std::to_string(k) + " does not match on Q");
        first.push_back(c.first);
        second.push_back(c.second);
    }
    CentralFibreCycle out = specialize(
        eq, {p.evaluate(eq.branch1().ring(), first), p.evaluate(eq.branch2().ring(), second)});
    if (!out.matched)
        throw std::logic_error("practical_lift: lifted classes fail the matching condition");
    return out;
}

struct GluedBundleData {
    int rank = 0;
    ClassPair c1;
    ClassPair c2;
    bool trivial_on_Q = false;
    std::array<Integer, 2> h2_end{0, 0};  // dim H^2(Bl_i, End F_i)
};

inline void validate(const EqualizerRing& eq, const GluedBundleData& b) {
    if (b.rank < 0)
        throw Error("GluedBundleData: negative rank");
    if (b.h2_end[0] < 0 || b.h2_end[1] < 0)
        throw Error("GluedBundleData: negative H^2 dimension");
    for (const auto* p : {&b.c1, &b.c2}) {
        int want = p == &b.c1 ? 1 : 2;
        if (p->first.degree().value_or(want) != want || p->second.degree().value_or(want) != want)
            throw Error("GluedBundleData: c" + std::to_string(want) + " must have codimension " +
                        std::to_string(want));
    }
    if (b.trivial_on_Q && (!eq.contains(b.c1) || !eq.contains(b.c2)))
        throw Error("GluedBundleData: bundle is trivial on Q but its Chern classes do not match");
}

/// gamma = phi_1*(c2 on branch 1) + phi_2*(c2 on branch 2). No neck term.
inline CentralFibreCycle glued_c2_cycle(const EqualizerRing& eq, const GluedBundleData& b) {
    validate(eq, b);
    return specialize(eq, b.c2);
}

struct ChargeBreakdown {
    Integer branch1;
    Integer branch2;
    Integer total;
};

/// deg(c2 . H) on each branch and their sum.
inline ChargeBreakdown polarized_charge(const EqualizerRing& eq, const GluedBundleData& b, const ClassPair& h) {
    validate(eq, b);
    if (h.first.degree().value_or(1) != 1 || h.second.degree().value_or(1) != 1)
        throw Error("polarized_charge: polarization must have codimension 1");
    if (!eq.contains(h))
        throw Error("polarized_charge: polarization pair does not match on Q");
    Integer d1 = degree_of(b.c2.first * h.first);
    Integer d2 = degree_of(b.c2.second * h.second);
    return {d1, d2, d1 + d2};
}

/// dim H^2(Z0, End F). Exact only when F|_Q is trivial; refuses otherwise.
inline Integer obstruction_dim(const GluedBundleData& b) {
    if (!b.trivial_on_Q)
        throw Error("obstruction_dim: restriction to Q is not trivial, only an inequality is available");
    return b.h2_end[0] + b.h2_end[1];
}

/// r^2 * h^1(Q, O(m+1, m+1)) for m = 0..m_max.
inline std::vector<Integer> formal_triviality_obstructions(int m_max, int r) {
    if (m_max < 0 || r < 1)
        throw Error("formal_triviality_obstructions: need m_max >= 0 and r >= 1");
    std::vector<Integer> out;
    for (int m = 0; m <= m_max; ++m)
        out.emplace_back(Integer(r) * r * quadric::cohomology_dims(m + 1, m + 1).h1);
    return out;
}

/// dim H^0(Q, End O^r) = r^2 h^0(O_Q).
inline Integer ward_gluing_space_dim(int r) {
    if (r < 1)
        throw Error("ward_gluing_space_dim: rank must be at least 1");
    return Integer(r) * r * quadric::cohomology_dims(0, 0).h0;
}

struct HSChern {
    RingElement c1;
    RingElement c2;
};

/// c1(E) = c1(L), c2(E) = [C] for the extension 0 -> O -> E -> I_C (x) L -> 0.
inline HSChern hs_chern(const RingElement& line_bundle_c1, const RingElement& curve_class) {
    if (!same_ring(line_bundle_c1.ring(), curve_class.ring()))
        throw Error("hs_chern: classes live in different rings");
    if (line_bundle_c1.degree().value_or(1) != 1)
        throw Error("hs_chern: c1(L) must be a divisor class");
    if (curve_class.degree().value_or(2) != 2)
        throw Error("hs_chern: [C] must be a curve class");
    return {line_bundle_c1, curve_class};
}

}  // namespace twistor::charges
