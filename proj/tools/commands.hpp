#pragma once

// Scenario loading and the report-producing commands behind twistor-cli.

#include "twistor/twistor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistor::cli {

using io::json;

struct Identity {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string command;
    json results = json::object();
    std::vector<Identity> identities;
    std::vector<std::string> text;

    void check(std::string name, bool pass, std::string detail = {}) {
        identities.push_back({std::move(name), pass, std::move(detail)});
    }
    bool all_pass() const {
        for (const auto& i : identities)
            if (!i.pass)
                return false;
        return true;
    }
    json to_json() const {
        json ids = json::array();
        for (const auto& i : identities) {
            json e = {{"identity", i.name}, {"pass", i.pass}};
            if (!i.detail.empty())
                e["detail"] = i.detail;
            ids.push_back(e);
        }
        return {{"command", command}, {"results", results}, {"identities", ids}, {"all_pass", all_pass()}};
    }
    std::string render_text() const {
        std::string out = "== " + command + " ==\n";
        for (const auto& line : text)
            out += line + "\n";
        out += "identities:\n";
        for (const auto& i : identities)
            out += std::string(i.pass ? "  [PASS] " : "  [FAIL] ") + i.name +
                   (i.detail.empty() ? "" : "  (" + i.detail + ")") + "\n";
        return out;
    }
};

struct Scenario {
    std::string source = "<built-in P3#P3>";
    TwistorChow branch1 = projective_space();
    TwistorChow branch2 = projective_space();
    json bundles = json::array();
    std::optional<json> polarization;
    json surfaces = json::array();
    std::optional<json> decoration;
    bool assumption_def = false;
};

inline TwistorChow branch_from_json(const json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        for (const auto& b : builtin_bases())
            if (b == name)
                return builtin_base(name);
        std::string known;
        for (const auto& b : builtin_bases())
            known += (known.empty() ? "" : ", ") + b;
        throw Error("unknown built-in twistor space \"" + name + "\" (known: " + known + ")");
    }
    return io::twistor_chow_from_json(j);
}

inline Scenario scenario_from_json(const json& j, std::string source) {
    if (!j.is_object())
        throw Error(source + ": scenario must be a JSON object");
    Scenario s;
    s.source = std::move(source);
    try {
        if (j.contains("branch1"))
            s.branch1 = branch_from_json(j.at("branch1"));
        if (j.contains("branch2"))
            s.branch2 = branch_from_json(j.at("branch2"));
        if (j.contains("bundles"))
            s.bundles = j.at("bundles");
        if (!s.bundles.is_array())
            throw Error("\"bundles\" must be an array");
        if (j.contains("polarization"))
            s.polarization = j.at("polarization");
        if (j.contains("surfaces"))
            s.surfaces = j.at("surfaces");
        if (!s.surfaces.is_array())
            throw Error("\"surfaces\" must be an array");
        if (j.contains("decoration"))
            s.decoration = j.at("decoration");
        s.assumption_def = j.value("assumption_DEF", false);
    } catch (const json::exception& e) {
        throw Error(s.source + ": " + e.what());
    } catch (const Error& e) {
        throw Error(s.source + ": " + e.what());
    }
    return s;
}

inline Scenario load_scenario(const std::optional<std::string>& path) {
    if (!path)
        return Scenario{};
    return scenario_from_json(io::read_json_file(*path), *path);
}

inline EqualizerRing scenario_equalizer(const Scenario& s) { return build_equalizer(blow_up(s.branch1), blow_up(s.branch2)); }

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k)
        out += (k ? sep : "") + xs[k];
    return out;
}

inline std::string pair_string(const ClassPair& p) { return "(" + to_string(p.first) + ", " + to_string(p.second) + ")"; }

// --- ring-show ---------------------------------------------------------------

inline json multiplication_table(const RingPtr& ring, std::vector<std::string>& text) {
    const GradedRing& r = *ring;
    json rows = json::array();
    for (int d1 = 1; d1 <= r.top_degree(); ++d1)
        for (int d2 = d1; d1 + d2 <= r.top_degree(); ++d2)
            for (std::size_t i1 = 0; i1 < r.rank(d1); ++i1)
                for (std::size_t i2 = (d1 == d2 ? i1 : 0); i2 < r.rank(d2); ++i2) {
                    IntVector out = r.product(d1, i1, d2, i2);
                    std::string lhs = r.label(d1, i1) + " . " + r.label(d2, i2);
                    std::string rhs = to_string(RingElement::homogeneous(ring, d1 + d2, out));
                    rows.push_back({{"lhs", lhs}, {"product", rhs}, {"coeffs", io::to_json(out)}});
                    text.push_back("  " + lhs + " = " + rhs);
                }
    return rows;
}

inline json basis_json(const GradedRing& r, std::vector<std::string>& text) {
    json basis = json::array();
    for (int d = 0; d <= r.top_degree(); ++d) {
        basis.push_back(r.labels(d));
        text.push_back("  degree " + std::to_string(d) + ": " + join(r.labels(d), ", "));
    }
    return basis;
}

inline Report quadric_show() {
    using namespace quadric;
    Report rep;
    rep.command = "ring-show --branch q";
    rep.text.push_back("CH(Q), Q = P1 x P1");
    rep.text.push_back("basis:");
    rep.results["name"] = "Q";
    rep.results["basis"] = basis_json(*ring(), rep.text);
    rep.text.push_back("multiplication table:");
    rep.results["table"] = multiplication_table(ring(), rep.text);
    const QuadricClass b = QuadricClass::b(), w = QuadricClass::w(), z = QuadricClass::z(), xi = QuadricClass::xi();
    rep.check("b^2 = 0", (b * b).element().is_zero());
    rep.check("w^2 = 0", (w * w).element().is_zero());
    rep.check("b w = [pt]", b * w == QuadricClass::point());
    rep.check("z^2 + 2 z w = 0", (z * z + Integer(2) * (z * w)).element().is_zero());
    rep.check("xi = b + w = z + 2w", xi == b + w && xi == z + Integer(2) * w);
    rep.check("sigma_*(z) = -z", sigma_pushforward(z) == -z);
    rep.check("sigma_*(w) = b", sigma_pushforward(w) == b);
    rep.check("sigma_*(xi) = xi", sigma_pushforward(xi) == xi);
    rep.check("sigma is multiplicative", sigma_map().ring_hom_defects().empty());
    return rep;
}

inline Report ring_show(const Scenario& s, const std::string& which) {
    if (which == "q")
        return quadric_show();
    if (which != "1" && which != "2")
        throw Error("unknown branch \"" + which + "\" (expected 1, 2 or q)");
    const TwistorChow& z = which == "1" ? s.branch1 : s.branch2;
    BlownUpChow bl = blow_up(z);
    const GradedRing& r = *bl.ring();
    Report rep;
    rep.command = "ring-show --branch " + which;
    rep.text.push_back("CH(Bl_l " + z.name() + ")");
    rep.text.push_back("basis:");
    rep.results["base"] = z.name();
    rep.results["basis"] = basis_json(r, rep.text);
    rep.text.push_back("multiplication table:");
    rep.results["table"] = multiplication_table(bl.ring(), rep.text);

    const RingElement q = bl.exceptional_divisor();
    const RingElement q2 = q * q;
    const RingElement line = bl.line_pullback();
    json restriction = json::array();
    rep.text.push_back("restriction to Q:");
    for (int d = 0; d <= r.top_degree(); ++d)
        for (std::size_t i = 0; i < r.rank(d); ++i) {
            quadric::QuadricClass img = bl.restrict_to_quadric(RingElement::basis(bl.ring(), d, i));
            restriction.push_back({{"class", r.label(d, i)}, {"image", quadric::to_string(img)}});
            rep.text.push_back("  j*(" + r.label(d, i) + ") = " + quadric::to_string(img));
        }
    rep.results["restriction_to_Q"] = restriction;
    rep.results["Q_squared"] = to_string(q2);
    rep.results["line_class"] = to_string(line);

    rep.check("commutativity", r.is_commutative());
    rep.check("associativity", r.associativity_defects().empty(), join(r.associativity_defects(), "; "));
    auto pf = bl.projection_formula_defects();
    rep.check("projection formula j_*(j*a . c) = a . j_*c", pf.empty(), join(pf, "; "));
    auto hom = bl.restriction_to_Q().ring_hom_defects();
    rep.check("j* is a ring homomorphism", hom.empty(), join(hom, "; "));
    const RingElement jxi = bl.pushforward(quadric::QuadricClass::xi());
    rep.check("j_*(xi) = f*[l]", jxi == line, "j_*(xi) = " + to_string(jxi));
    rep.check("[Q]^2 = -f*[l]", q2 == -line, "[Q]^2 = " + to_string(q2) + ", -f*[l] = " + to_string(-line));
    return rep;
}

// --- equalizer -----------------------------------------------------------------

/// Rank of the matched integer vectors with entries in [-bound, bound], found by enumeration.
inline std::size_t enumerated_rank(const EqualizerRing& eq, int d, int bound) {
    const IntMatrix m = eq.matching_matrix(d);
    const std::size_t n = m.cols();
    std::vector<IntVector> found;
    IntVector v(n, Integer(-bound));
    for (;;) {
        if (!is_zero(v) && is_zero(m * v)) {
            std::vector<IntVector> trial = found;
            trial.push_back(v);
            if (rank(IntMatrix::from_rows(trial, n)) > found.size()) {
                found = std::move(trial);
                if (found.size() == n)
                    break;
            }
        }
        std::size_t k = 0;
        while (k < n && v[k] == bound)
            v[k++] = -bound;
        if (k == n)
            break;
        v[k] += 1;
    }
    return found.size();
}

inline Report equalizer(const Scenario& s, const std::optional<std::string>& member_path) {
    EqualizerRing eq = scenario_equalizer(s);
    Report rep;
    rep.command = "equalizer";
    rep.results["branches"] = {s.branch1.name(), s.branch2.name()};
    rep.text.push_back("A(Z0) for Bl " + s.branch1.name() + " u_Q Bl " + s.branch2.name());
    json ranks = json::array(), bases = json::array();
    for (int d = 0; d <= 3; ++d) {
        ranks.push_back(eq.rank(d));
        json basis = json::array();
        std::vector<std::string> shown;
        for (std::size_t k = 0; k < eq.rank(d); ++k) {
            ClassPair p = eq.basis_pair(d, k);
            basis.push_back(io::to_json(p));
            shown.push_back(pair_string(p));
        }
        bases.push_back(basis);
        rep.text.push_back("  degree " + std::to_string(d) + ", rank " + std::to_string(eq.rank(d)) + ": " +
                           join(shown, ", "));
    }
    rep.results["ranks"] = ranks;
    rep.results["bases"] = bases;

    auto closure = eq.product_closure_defects();
    rep.results["product_closure_defects"] = closure;
    rep.check("lattice is closed under products", closure.empty(), join(closure, "; "));
    const ClassPair exc = eq.exceptional_class();
    rep.check("([Q1], -[Q2]) is a member", eq.contains(exc));
    const ClassPair qq{eq.branch1().exceptional_divisor(), eq.branch2().exceptional_divisor()};
    rep.check("([Q1], [Q2]) is a member", eq.contains(qq),
              "mismatch j1*[Q1] - sigma* j2*[Q2] = " + quadric::to_string(eq.mismatch(qq)));
    for (int d = 0; d <= 3; ++d) {
        std::size_t cells = 1;
        for (std::size_t k = 0; k < eq.matching_matrix(d).cols(); ++k)
            cells *= 7;
        if (cells > 200000)
            continue;
        std::size_t brute = enumerated_rank(eq, d, 3);
        rep.check("rank A^" + std::to_string(d) + " agrees with enumeration over [-3,3]", brute == eq.rank(d),
                  "kernel " + std::to_string(eq.rank(d)) + ", enumeration " + std::to_string(brute));
    }

    if (member_path) {
        ClassPair p = io::pair_from_json(io::read_json_file(*member_path), eq);
        quadric::QuadricClass mm = eq.mismatch(p);
        bool member = mm.element().is_zero();
        rep.results["query"] = {{"pair", io::to_json(p)}, {"member", member}, {"mismatch", quadric::to_string(mm)}};
        rep.text.push_back("query " + pair_string(p) + ": " + (member ? "member" : "not a member") +
                           (member ? "" : ", mismatch " + quadric::to_string(mm)));
    }
    return rep;
}

// --- surfaces ------------------------------------------------------------------

inline std::string flag_name(bool in) { return in ? "in" : "out"; }

inline bool parse_flag(const std::string& s) {
    if (s == "in")
        return true;
    if (s == "out")
        return false;
    throw Error("expected in or out, got \"" + s + "\"");
}

inline json surface_json(const surfaces::SurfaceData& s) {
    return {{"d", s.twistor_degree}, {"contains_line", s.contains_line}};
}

inline json pair_report(const surfaces::SurfaceData& s1, const surfaces::SurfaceData& s2, Report& rep) {
    using namespace quadric;
    QuadricClass t1 = surfaces::trace_class(s1), t2 = surfaces::trace_class(s2);
    QuadricClass moved = sigma_pushforward(t1);
    bool ok = surfaces::glue_check(s1, s2);
    std::string tag = "(" + std::to_string(s1.twistor_degree) + "," + flag_name(s1.contains_line) + "," +
                      std::to_string(s2.twistor_degree) + "," + flag_name(s2.contains_line) + ")";
    rep.text.push_back("  " + tag + ": sigma_*(" + to_string(t1) + ") = " + to_string(moved) + " vs " +
                       to_string(t2) + " -> " + (ok ? "glues" : "does not glue"));
    json row = {{"first", surface_json(s1)},
                {"second", surface_json(s2)},
                {"trace1", to_string(t1)},
                {"trace2", to_string(t2)},
                {"sigma_trace1", to_string(moved)},
                {"glues", ok}};
    if (!ok)
        row["mismatch"] = to_string(moved - t2);
    for (int k : {1, 2}) {
        const surfaces::SurfaceData& s = k == 1 ? s1 : s2;
        QuadricClass t = k == 1 ? t1 : t2;
        std::string which = "trace " + std::to_string(k) + " of " + tag;
        rep.check(which + " meets xi in d points", intersection_number(t, QuadricClass::xi()) == s.twistor_degree);
        if (s.contains_line)
            rep.check(which + " is rational", arithmetic_genus(t.bidegree()) == 0);
    }
    return row;
}

inline Report surfaces_cmd(const Scenario& s, int d_max, const std::optional<std::vector<std::string>>& pair) {
    Report rep;
    if (pair) {
        if (pair->size() != 4)
            throw Error("--pair expects d1 in|out d2 in|out");
        surfaces::SurfaceData s1{std::stoi((*pair)[0]), parse_flag((*pair)[1])};
        surfaces::SurfaceData s2{std::stoi((*pair)[2]), parse_flag((*pair)[3])};
        surfaces::validate(s1);
        surfaces::validate(s2);
        rep.command = "surfaces --pair";
        rep.results["pair"] = pair_report(s1, s2, rep);
        return rep;
    }
    rep.command = "surfaces --dmax " + std::to_string(d_max);
    auto configs = surfaces::classify_all(d_max);
    json rows = json::array();
    std::vector<std::string> tags;
    rep.text.push_back("admissible configurations with d <= " + std::to_string(d_max) + ":");
    for (const auto& c : configs) {
        rows.push_back({{"d1", c.first.twistor_degree},
                        {"flag1", flag_name(c.first.contains_line)},
                        {"d2", c.second.twistor_degree},
                        {"flag2", flag_name(c.second.contains_line)},
                        {"trace1", quadric::to_string(surfaces::trace_class(c.first))},
                        {"trace2", quadric::to_string(surfaces::trace_class(c.second))}});
        tags.push_back("(" + std::to_string(c.first.twistor_degree) + "," + flag_name(c.first.contains_line) + "," +
                       std::to_string(c.second.twistor_degree) + "," + flag_name(c.second.contains_line) + ")");
        rep.text.push_back("  " + tags.back());
    }
    rep.results["configurations"] = rows;
    std::vector<std::string> expected = {"(1,in,1,out)", "(1,out,1,in)"};
    if (d_max >= 2)
        expected.insert(expected.begin(), "(2,in,2,in)");
    std::vector<std::string> sorted_tags = tags, sorted_expected = expected;
    std::sort(sorted_tags.begin(), sorted_tags.end());
    std::sort(sorted_expected.begin(), sorted_expected.end());
    rep.check("admissible configurations are exactly " + join(expected, ", "), sorted_tags == sorted_expected,
              "found " + join(tags, ", "));
    bool degrees_ok = true, genus_ok = true;
    for (int d = 1; d <= d_max; ++d)
        for (bool in : {true, false}) {
            auto t = surfaces::trace_class({d, in});
            degrees_ok = degrees_ok && quadric::intersection_number(t, quadric::QuadricClass::xi()) == d;
            if (in)
                genus_ok = genus_ok && quadric::arithmetic_genus(t.bidegree()) == 0 &&
                           surfaces::section_degree_over_ruling({d, in}) == d - 1;
        }
    rep.check("every trace meets xi in d points", degrees_ok);
    rep.check("contained-line traces are rational sections of degree d-1", genus_ok);
    if (!s.surfaces.empty()) {
        json checked = json::array();
        rep.text.push_back("scenario pairs:");
        for (const auto& e : s.surfaces) {
            surfaces::SurfaceData s1{e.at("d1").get<int>(), e.value("in1", false)};
            surfaces::SurfaceData s2{e.at("d2").get<int>(), e.value("in2", false)};
            surfaces::validate(s1);
            surfaces::validate(s2);
            checked.push_back(pair_report(s1, s2, rep));
        }
        rep.results["scenario_pairs"] = checked;
    }
    return rep;
}

// --- charge --------------------------------------------------------------------

inline Report charge(const Scenario& s) {
    EqualizerRing eq = scenario_equalizer(s);
    if (s.bundles.empty())
        throw Error(s.source + ": the charge command needs a \"bundles\" block");
    if (!s.polarization)
        throw Error(s.source + ": the charge command needs a \"polarization\" block");
    ClassPair h = io::pair_from_json(*s.polarization, eq);
    if (!eq.contains(h))
        throw Error("polarization " + pair_string(h) + " does not match on Q: j1*H1 - sigma* j2*H2 = " +
                    quadric::to_string(eq.mismatch(h)));
    const std::string label = s.assumption_def ? "smooth-fibre charge" : "central-fibre degree";
    Report rep;
    rep.command = "charge";
    rep.results["label"] = label;
    rep.results["polarization"] = io::to_json(h);
    rep.text.push_back("polarization H = " + pair_string(h));
    json rows = json::array();
    for (std::size_t k = 0; k < s.bundles.size(); ++k) {
        charges::GluedBundleData b = io::bundle_from_json(s.bundles[k], eq);
        charges::ChargeBreakdown c = charges::polarized_charge(eq, b, h);
        charges::CentralFibreCycle cyc = charges::glued_c2_cycle(eq, b);
        json row = {{"rank", b.rank},
                    {"c2", io::to_json(b.c2)},
                    {"c2_matched", cyc.matched},
                    {"branch1", io::to_json(c.branch1)},
                    {"branch2", io::to_json(c.branch2)},
                    {"total", io::to_json(c.total)},
                    {"label", label},
                    {"ward_gluing_dim", io::to_json(charges::ward_gluing_space_dim(std::max(b.rank, 1)))}};
        std::string tag = "bundle " + std::to_string(k);
        rep.text.push_back(tag + ": " + label + " = " + c.branch1.get_str() + " + " + c.branch2.get_str() + " = " +
                           c.total.get_str());
        rep.check(tag + ": total equals the sum of branch degrees", c.total == c.branch1 + c.branch2);
        if (b.trivial_on_Q) {
            Integer obs = charges::obstruction_dim(b);
            row["obstruction_dim"] = io::to_json(obs);
            rep.text.push_back(tag + ": dim H^2(Z0, End F) = " + obs.get_str());
            auto formal = charges::formal_triviality_obstructions(5, std::max(b.rank, 1));
            bool vanish = std::all_of(formal.begin(), formal.end(), [](const Integer& x) { return x == 0; });
            rep.check(tag + ": formal neighbourhood obstructions vanish", vanish);
            if (b.h2_end[0] == 0 && b.h2_end[1] == 0)
                rep.check(tag + ": unobstructed when both branches are", obs == 0);
        } else {
            row["obstruction_dim"] = nullptr;
        }
        rep.check(tag + ": gluing automorphisms have dimension r^2",
                  charges::ward_gluing_space_dim(std::max(b.rank, 1)) == Integer(std::max(b.rank, 1)) * std::max(b.rank, 1));
        rows.push_back(row);
    }
    rep.results["bundles"] = rows;
    return rep;
}

// --- neck ------------------------------------------------------------------------

inline Report neck_cmd(const Scenario& s, const std::optional<std::pair<long, long>>& curve,
                       const std::optional<std::pair<long, long>>& character,
                       const std::optional<std::string>& decorate_path) {
    Report rep;
    rep.command = "neck";
    auto kn = neck::kn_fixed_phase_bundle();
    Integer fibre = neck::restrict_to_ruling_fibre_bundle(kn).c1();
    rep.results["kn_c1"] = io::to_json(kn.quadric_c1());
    rep.results["fibre_restriction"] = io::to_json(fibre);
    rep.text.push_back("KN fixed-phase bundle: c1 = " + quadric::to_string(kn.quadric_c1()));
    rep.text.push_back("restriction to a ruling fibre: c1 = " + fibre.get_str());
    rep.check("KN fibre restriction has magnitude 1", abs(fibre) == 1);
    rep.check("KN fibre restriction is +1 in the chosen orientation", fibre == 1);

    auto anti = neck::antidiagonal_quotient_over_fibre();
    rep.results["antidiagonal"] = {{"c1", io::to_json(anti.c1)}, {"total_space", anti.total_space.name()}};
    rep.text.push_back("antidiagonal quotient: c1 = " + anti.c1.get_str() + " -> " + anti.total_space.name());
    rep.check("antidiagonal quotient has c1 = 2 and is RP3",
              anti.c1 == 2 && anti.total_space.kind == neck::ThreeManifold::Kind::RP3);

    if (character) {
        auto q = neck::antidiagonal_quotient_over_fibre({Integer(character->first), Integer(character->second)});
        rep.results["character"] = {{"character", {character->first, character->second}},
                                    {"c1", io::to_json(q.c1)},
                                    {"total_space", q.total_space.name()}};
        rep.text.push_back("character (" + std::to_string(character->first) + "," +
                           std::to_string(character->second) + "): c1 = " + q.c1.get_str() + " -> " +
                           q.total_space.name());
        Integer expected = Integer(character->first) * fibre + Integer(character->second);
        rep.check("character quotient c1 = a*c1(KN) + b*c1(Hopf)", q.c1 == expected);
    }
    if (curve) {
        if (curve->first < 0 || curve->second < 0 || (curve->first == 0 && curve->second == 0))
            throw Error("--curve expects an effective nontrivial bidegree");
        quadric::Bidegree bd{curve->first, curve->second};
        Integer c1 = neck::restrict_to_curve(kn, bd).c1();
        rep.results["curve"] = {{"bidegree", {curve->first, curve->second}}, {"c1", io::to_json(c1)}};
        rep.text.push_back("restriction to a curve of bidegree (" + std::to_string(curve->first) + "," +
                           std::to_string(curve->second) + "): c1 = " + c1.get_str());
        rep.check("curve restriction c1 = -(a+b)", c1 == -(Integer(curve->first) + curve->second));
        rep.check("curve restriction is nontrivial", c1 != 0);
    }
    std::optional<json> request;
    if (decorate_path)
        request = io::read_json_file(*decorate_path);
    else if (s.decoration)
        request = s.decoration;
    if (request) {
        neck::PhaseDecoration dec = io::decoration_from_request(*request);
        rep.results["decoration"] = io::to_json(dec);
        bool ok = true;
        for (const auto& p : dec.points) {
            ok = ok && p.phases.rho1() * p.phases.rho2() == dec.theta;
            rep.text.push_back("  " + p.id + ": rho1 = " + to_string(p.phases.rho1()) +
                               ", rho2 = " + to_string(p.phases.rho2()));
        }
        rep.check("rho1 rho2 = e^{i theta} at every decorated point", ok);
    }
    return rep;
}

// --- real ------------------------------------------------------------------------

inline constexpr std::uint64_t real_seed = 20240611;

inline Report real_cmd(int samples) {
    using namespace real;
    if (samples < 0)
        throw Error("--samples must be non-negative");
    Report rep;
    rep.command = "real --samples " + std::to_string(samples);
    auto base = base_locus();
    json pts = json::array();
    for (const auto& p : base)
        pts.push_back(io::to_json(p));
    rep.results["base_locus"] = pts;
    rep.text.push_back("base locus of the pencil [s1 : -s2]: ([1:i],[1:i]) and ([1:-i],[1:-i])");
    rep.check("base locus has two points", base.size() == 2);
    rep.check("tau swaps the base points",
              base.size() == 2 && tau(base[0]).same_point(base[1]) && tau(base[1]).same_point(base[0]));
    rep.check("s1 and s2 are tau-invariant", is_invariant_section(s1()) && is_invariant_section(s2()));
    std::size_t dim = invariant_space_dimension();
    rep.results["fixed_space_dimension"] = dim;
    json basis = json::array();
    bool basis_ok = true;
    for (const auto& sec : fixed_space_basis()) {
        basis.push_back(io::to_json(sec));
        basis_ok = basis_ok && is_invariant_section(sec) && tau_tilde(sec) == sec && tau_tilde(tau_tilde(sec)) == sec;
    }
    rep.results["fixed_space_basis"] = basis;
    rep.text.push_back("fixed space of tau~ has rational dimension " + std::to_string(dim));
    rep.check("fixed space has dimension 4", dim == 4);
    rep.check("fixed-space basis is tau~-invariant and tau~^2 = id", basis_ok);

    std::mt19937_64 rng(real_seed);
    int fixed = 0, equivariant = 0, evaluated = 0;
    for (int k = 0; k < samples; ++k) {
        QuadricPoint p = random_point(rng);
        if (is_fixed_point(p))
            ++fixed;
        auto h = pencil_value(p);
        if (!h)
            continue;
        ++evaluated;
        auto ht = pencil_value(tau(p));
        if (ht && ht->same_point(h->conj()))
            ++equivariant;
    }
    rep.results["seed"] = real_seed;
    rep.results["samples"] = samples;
    rep.results["fixed_points_found"] = fixed;
    rep.results["equivariance_passed"] = equivariant;
    rep.results["equivariance_evaluated"] = evaluated;
    rep.text.push_back("random points: " + std::to_string(samples) + ", tau-fixed: " + std::to_string(fixed) +
                       ", h(tau p) = conj h(p): " + std::to_string(equivariant) + "/" + std::to_string(evaluated));
    rep.check("tau has no fixed points on the samples", fixed == 0);
    rep.check("h(tau p) = conj(h(p)) on the samples", equivariant == evaluated);
    return rep;
}

}  // namespace twistor::cli
