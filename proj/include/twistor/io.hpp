#pragma once

// JSON interchange for rings, maps, twistor bases, classes, bundles, phases
// and sections. Integers are JSON numbers when they fit in 64 bits and
// decimal strings otherwise; rationals are always strings.

#include "twistor/charges.hpp"
#include "twistor/neck.hpp"
#include "twistor/real_structure.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace twistor::io {

using json = nlohmann::json;

inline json to_json(const Integer& x) {
    if (x.fits_slong_p())
        return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw Error("expected a decimal integer, got \"" + j.get<std::string>() + "\"");
        return x;
    }
    throw Error("expected an integer, got " + j.dump());
}

inline IntVector int_vector_from_json(const json& j) {
    if (!j.is_array())
        throw Error("expected an array of integers, got " + j.dump());
    IntVector v;
    for (const auto& x : j)
        v.push_back(integer_from_json(x));
    return v;
}

inline json to_json(const IntVector& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return Rational(integer_from_json(j));
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
            throw Error("expected a rational like \"3/5\", got \"" + j.get<std::string>() + "\"");
        q.canonicalize();
        return q;
    }
    if (j.is_object() && j.contains("num")) {
        Integer den = j.contains("den") ? integer_from_json(j.at("den")) : Integer(1);
        if (den == 0)
            throw Error("zero denominator in " + j.dump());
        Rational q(integer_from_json(j.at("num")), den);
        q.canonicalize();
        return q;
    }
    throw Error("expected a rational, got " + j.dump());
}

inline json to_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

// --- parsing with location -------------------------------------------------

/// Parses JSON text; syntax errors report the line and column.
inline json parse_json(const std::string& text, const std::string& source = "<input>") {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::size_t start = text.rfind('\n', e.byte > 1 ? e.byte - 2 : 0);
        start = start == std::string::npos ? 0 : start + 1;
        std::size_t end = text.find('\n', start);
        std::string context = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        throw Error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON\n  " +
                    context);
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

// --- rings -------------------------------------------------------------------

inline RingPtr ring_from_json(const json& j) {
    try {
        int top = j.at("top_degree").get<int>();
        auto labels = j.at("basis").get<std::vector<std::vector<std::string>>>();
        std::vector<ProductEntry> products;
        if (j.contains("mult"))
            for (const auto& m : j.at("mult"))
                products.push_back({m.at("d1").get<int>(), m.at("i1").get<std::size_t>(), m.at("d2").get<int>(),
                                    m.at("i2").get<std::size_t>(), int_vector_from_json(m.at("out"))});
        std::optional<IntVector> functional;
        if (j.contains("degree_functional") && !j.at("degree_functional").is_null())
            functional = int_vector_from_json(j.at("degree_functional"));
        return make_ring(top, std::move(labels), products, std::move(functional));
    } catch (const json::exception& e) {
        throw Error(std::string("ring JSON: ") + e.what());
    }
}

/// Every product of non-unit basis pairs, each unordered pair once.
inline json to_json(const GradedRing& r) {
    json mult = json::array();
    for (int d1 = 1; d1 <= r.top_degree(); ++d1)
        for (int d2 = d1; d1 + d2 <= r.top_degree(); ++d2)
            for (std::size_t i1 = 0; i1 < r.rank(d1); ++i1)
                for (std::size_t i2 = (d1 == d2 ? i1 : 0); i2 < r.rank(d2); ++i2)
                    mult.push_back({{"d1", d1},
                                    {"i1", i1},
                                    {"d2", d2},
                                    {"i2", i2},
                                    {"out", to_json(r.product(d1, i1, d2, i2))}});
    json out = {{"top_degree", r.top_degree()}, {"mult", mult}};
    json basis = json::array();
    for (int d = 0; d <= r.top_degree(); ++d)
        basis.push_back(r.labels(d));
    out["basis"] = basis;
    out["degree_functional"] = r.degree_functional() ? to_json(*r.degree_functional()) : json(nullptr);
    return out;
}

inline json to_json(const GradedMap& f) {
    json ms = json::array();
    for (int d = 0; d <= f.source()->top_degree(); ++d) {
        json m = json::array();
        for (std::size_t r = 0; r < f.matrix(d).rows(); ++r)
            m.push_back(to_json(f.matrix(d).row(r)));
        ms.push_back(m);
    }
    return {{"shift", f.shift()}, {"ring_hom", f.is_ring_hom()}, {"matrices", ms}};
}

inline GradedMap map_from_json(const json& j, RingPtr source, RingPtr target) {
    try {
        int shift = j.value("shift", 0);
        std::vector<IntMatrix> ms;
        const json& blocks = j.at("matrices");
        for (int d = 0; d <= source->top_degree(); ++d) {
            std::vector<IntVector> rows;
            if (static_cast<std::size_t>(d) < blocks.size())
                for (const auto& row : blocks.at(d))
                    rows.push_back(int_vector_from_json(row));
            ms.push_back(IntMatrix::from_rows(rows, source->rank(d)));
        }
        return GradedMap(std::move(source), std::move(target), shift, std::move(ms), j.value("ring_hom", false));
    } catch (const json::exception& e) {
        throw Error(std::string("map JSON: ") + e.what());
    }
}

// --- elements --------------------------------------------------------------

/// {label: coeff, ...} or one coefficient array per degree.
inline RingElement element_from_json(const json& j, const RingPtr& ring) {
    RingElement x(ring);
    if (j.is_object()) {
        for (const auto& [label, c] : j.items())
            x += integer_from_json(c) * RingElement::basis(ring, label);
        return x;
    }
    if (j.is_array()) {
        if (j.size() != static_cast<std::size_t>(ring->top_degree() + 1))
            throw Error("element JSON: expected " + std::to_string(ring->top_degree() + 1) + " degree blocks");
        std::vector<IntVector> coeffs;
        for (const auto& block : j)
            coeffs.push_back(int_vector_from_json(block));
        return RingElement(ring, std::move(coeffs));
    }
    if (j.is_null())
        return x;
    throw Error("element JSON: expected an object of label coefficients, got " + j.dump());
}

inline json to_json(const RingElement& x) {
    json out = json::object();
    for (int d = 0; d <= x.ring()->top_degree(); ++d)
        for (std::size_t i = 0; i < x.ring()->rank(d); ++i)
            if (x.coeffs(d)[i] != 0)
                out[x.ring()->label(d, i)] = to_json(x.coeffs(d)[i]);
    return out;
}

inline json to_json(const ClassPair& p) { return {{"branch1", to_json(p.first)}, {"branch2", to_json(p.second)}}; }

inline ClassPair pair_from_json(const json& j, const EqualizerRing& eq) {
    if (!j.is_object())
        throw Error("pair JSON: expected {\"branch1\": ..., \"branch2\": ...}");
    return {element_from_json(j.value("branch1", json()), eq.branch1().ring()),
            element_from_json(j.value("branch2", json()), eq.branch2().ring())};
}

inline json to_json(const quadric::QuadricClass& x) {
    auto [m, n] = x.divisor_coords(quadric::BasisMode::bw);
    auto [p, q] = x.divisor_coords(quadric::BasisMode::zw);
    return {{"bw", {to_json(m), to_json(n)}},
            {"zw", {to_json(p), to_json(q)}},
            {"unit", to_json(x.unit_coeff())},
            {"pt", to_json(x.point_coeff())},
            {"text", quadric::to_string(x)}};
}

// --- twistor bases ---------------------------------------------------------

inline TwistorChow twistor_chow_from_json(const json& j) {
    if (j.is_string())
        return builtin_base(j.get<std::string>());
    RingPtr r = ring_from_json(j);
    try {
        return TwistorChow(j.value("name", std::string("custom")), r, element_from_json(j.at("line_class"), r),
                           int_vector_from_json(j.at("twistor_degrees")), element_from_json(j.at("point_class"), r));
    } catch (const json::exception& e) {
        throw Error(std::string("twistor space JSON: ") + e.what());
    }
}

inline json to_json(const TwistorChow& z) {
    json out = to_json(*z.ring());
    out["name"] = z.name();
    out["line_class"] = to_json(z.line_class());
    out["twistor_degrees"] = to_json(z.twistor_degrees());
    out["point_class"] = to_json(z.point_class());
    return out;
}

// --- bundles ---------------------------------------------------------------

inline charges::GluedBundleData bundle_from_json(const json& j, const EqualizerRing& eq) {
    ClassPair zero{RingElement(eq.branch1().ring()), RingElement(eq.branch2().ring())};
    charges::GluedBundleData b{j.value("rank", 2), j.contains("c1") ? pair_from_json(j.at("c1"), eq) : zero,
                               j.contains("c2") ? pair_from_json(j.at("c2"), eq) : zero};
    b.trivial_on_Q = j.value("trivial_on_Q", false);
    if (j.contains("h2_end")) {
        const json& h = j.at("h2_end");
        if (!h.is_array() || h.size() != 2)
            throw Error("bundle JSON: h2_end must be a pair of integers");
        b.h2_end = {integer_from_json(h[0]), integer_from_json(h[1])};
    }
    charges::validate(eq, b);
    return b;
}

// --- Gaussian scalars and phases -------------------------------------------

/// {"re_num","re_den","im_num","im_den"}
inline json to_json(const GaussianScalar& x) {
    return {{"re_num", x.re().get_num().get_str()},
            {"re_den", x.re().get_den().get_str()},
            {"im_num", x.im().get_num().get_str()},
            {"im_den", x.im().get_den().get_str()}};
}

inline GaussianScalar gaussian_from_json(const json& j) {
    if (j.is_object() && j.contains("re_num")) {
        auto part = [&](const char* num, const char* den) {
            Integer d = j.contains(den) ? integer_from_json(j.at(den)) : Integer(1);
            if (d == 0)
                throw Error("Gaussian JSON: zero denominator");
            Rational q(integer_from_json(j.at(num)), d);
            q.canonicalize();
            return q;
        };
        return {part("re_num", "re_den"), j.contains("im_num") ? part("im_num", "im_den") : Rational(0)};
    }
    if (j.is_object() && (j.contains("re") || j.contains("im")))
        return {j.contains("re") ? rational_from_json(j.at("re")) : Rational(0),
                j.contains("im") ? rational_from_json(j.at("im")) : Rational(0)};
    if (j.is_array() && j.size() == 2)
        return {rational_from_json(j[0]), rational_from_json(j[1])};
    return {rational_from_json(j), Rational(0)};
}

inline json to_json(const neck::PhaseDecoration& d) {
    json points = json::array();
    for (const auto& p : d.points)
        points.push_back({{"id", p.id}, {"rho1", to_json(p.phases.rho1())}, {"rho2", to_json(p.phases.rho2())}});
    return {{"theta", to_json(d.theta)}, {"points", points}};
}

/// Request: {"theta": g, "points": [{"id": ..., "eta": g}, ...]}.
inline neck::PhaseDecoration decoration_from_request(const json& j) {
    GaussianScalar theta = gaussian_from_json(j.at("theta"));
    std::vector<std::string> ids;
    std::vector<GaussianScalar> etas;
    for (const auto& p : j.value("points", json::array())) {
        ids.push_back(p.at("id").is_string() ? p.at("id").get<std::string>() : p.at("id").dump());
        etas.push_back(gaussian_from_json(p.at("eta")));
    }
    return neck::phase_decoration(ids, theta, etas);
}

/// Points and sections: arrays of {"num","den"} string pairs, real part then imaginary part.
inline json exact_json(const GaussianScalar& x) { return json::array({to_json(x.re()), to_json(x.im())}); }

inline json to_json(const real::QuadricPoint& p) {
    return {{"z", {exact_json(p.z.x0), exact_json(p.z.x1)}}, {"w", {exact_json(p.w.x0), exact_json(p.w.x1)}}};
}

inline json to_json(const real::Section11& s) {
    json out = json::array();
    for (const auto& c : s.coeffs)
        out.push_back(exact_json(c));
    return out;
}

inline json to_json(const real::ProjectivePair& p) { return json::array({exact_json(p.x0), exact_json(p.x1)}); }

}  // namespace twistor::io
