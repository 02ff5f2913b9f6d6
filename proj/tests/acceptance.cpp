// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "commands.hpp"
#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace twistor;
using quadric::QuadricClass;

namespace {

/// Collects failed sub-checks of one criterion.
struct Checks {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok)
            failures.push_back(what);
    }
};

std::vector<IntVector> rows_of(const IntMatrix& m) {
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(m.row(r));
    return out;
}

ClassPair random_member(const EqualizerRing& eq, int d, std::mt19937_64& rng) {
    IntVector v(eq.branch1().ring()->rank(d) + eq.branch2().ring()->rank(d));
    for (const auto& g : eq.lattice(d))
        v = v + Integer(static_cast<long>(rng() % 7) - 3) * g;
    return eq.split(d, v);
}

void criterion_1(Checks& c) {
    using namespace quadric;
    const auto b = QuadricClass::b(), w = QuadricClass::w(), z = QuadricClass::z(), xi = QuadricClass::xi();
    c.expect((b * b).element().is_zero(), "b^2 = 0");
    c.expect((w * w).element().is_zero(), "w^2 = 0");
    c.expect(b * w == QuadricClass::point(), "bw = [pt]");
    c.expect((z * z + Integer(2) * (z * w)).element().is_zero(), "z^2 + 2zw = 0");
    c.expect(xi == b + w && xi == z + Integer(2) * w, "xi = b + w = z + 2w");
    c.expect(sigma_pushforward(z) == -z, "sigma_*(z) = -z");
    c.expect(sigma_pushforward(w) == b, "sigma_*(w) = b");
    c.expect(sigma_pushforward(xi) == xi, "sigma_*(xi) = xi");
    for (int d1 = 0; d1 <= 2; ++d1)
        for (int d2 = 0; d1 + d2 <= 2; ++d2)
            for (std::size_t i1 = 0; i1 < ring()->rank(d1); ++i1)
                for (std::size_t i2 = 0; i2 < ring()->rank(d2); ++i2) {
                    QuadricClass x(RingElement::basis(ring(), d1, i1), BasisMode::bw);
                    QuadricClass y(RingElement::basis(ring(), d2, i2), BasisMode::bw);
                    c.expect(sigma_pushforward(x * y) == sigma_pushforward(x) * sigma_pushforward(y),
                             "sigma multiplicative on " + ring()->label(d1, i1) + "," + ring()->label(d2, i2));
                }
}

void criterion_2(Checks& c) {
    for (const auto& base : {projective_space(), flag_threefold()}) {
        BlownUpChow bl = blow_up(base);
        const GradedRing& r = *bl.ring();
        const std::string tag = base.name() + ": ";
        for (int d1 = 0; d1 <= 3; ++d1)
            for (int d2 = 0; d1 + d2 <= 3; ++d2)
                for (std::size_t i1 = 0; i1 < r.rank(d1); ++i1)
                    for (std::size_t i2 = 0; i2 < r.rank(d2); ++i2) {
                        RingElement x = RingElement::basis(bl.ring(), d1, i1), y = RingElement::basis(bl.ring(), d2, i2);
                        c.expect(x * y == y * x, tag + "commutativity " + r.label(d1, i1) + "," + r.label(d2, i2));
                    }
        c.expect(r.associativity_defects().empty(), tag + "associativity");
        c.expect(bl.projection_formula_defects().empty(), tag + "projection formula");
        c.expect(bl.pushforward(QuadricClass::xi()) == bl.line_pullback(), tag + "j_*(xi) = f*[l]");
        const RingElement q = bl.exceptional_divisor();
        c.expect(q * q == -bl.line_pullback(),
                 tag + "[Q]^2 = -f*[l] (computed [Q]^2 = " + to_string(q * q) + ")");
        c.expect(bl.restriction_to_Q().ring_hom_defects().empty(), tag + "j* ring homomorphism");
    }
}

void criterion_3(Checks& c) {
    auto start = std::chrono::steady_clock::now();
    EqualizerRing eq = build_equalizer(blow_up(projective_space()), blow_up(projective_space()));
    const ClassPair qq{eq.branch1().exceptional_divisor(), eq.branch2().exceptional_divisor()};
    c.expect(eq.contains(qq), "([Q1],[Q2]) is a member (mismatch " + quadric::to_string(eq.mismatch(qq)) + ")");
    c.expect(eq.product_closure_defects().empty(), "P3#P3 product closure");
    EqualizerRing fl = build_equalizer(blow_up(flag_threefold()), blow_up(flag_threefold()));
    c.expect(fl.product_closure_defects().empty(), "flag#flag product closure");
    for (int d = 0; d <= 3; ++d) {
        IntMatrix m = eq.matching_matrix(d);
        auto found = oracle::bounded_kernel(rows_of(m), m.cols(), 3);
        std::size_t brute = oracle::rational_rank(found);
        c.expect(brute == eq.rank(d), "rank A^" + std::to_string(d) + ": kernel " + std::to_string(eq.rank(d)) +
                                          ", enumeration " + std::to_string(brute));
        bool all_in = true;
        for (const auto& v : found)
            all_in = all_in && lattice_membership(eq.lattice(d), v);
        c.expect(all_in, "enumerated vectors lie in the degree-" + std::to_string(d) + " lattice");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
}

void criterion_4(Checks& c) {
    using surfaces::Configuration;
    std::vector<Configuration> expected = {{{1, true}, {1, false}}, {{1, false}, {1, true}}, {{2, true}, {2, true}}};
    c.expect(surfaces::classify_all(50) == expected, "classify_all(50)");
    for (int d = 1; d <= 50; ++d)
        for (bool in : {true, false}) {
            QuadricClass t = surfaces::trace_class({d, in});
            c.expect(quadric::intersection_number(t, QuadricClass::xi()) == d, "trace . xi = d at d=" + std::to_string(d));
            if (in)
                c.expect(quadric::arithmetic_genus(t.bidegree()) == 0, "genus 0 at d=" + std::to_string(d));
        }
}

void criterion_5(Checks& c) {
    for (long m = 0; m <= 10; ++m)
        for (long n = 0; n <= 10; ++n) {
            QuadricClass d = QuadricClass::bw(m, n);
            Integer via_ring = (d * (d + quadric::canonical_class())).point_coeff() / 2 + 1;
            c.expect(Integer((m - 1) * (n - 1)) == via_ring,
                     "genus at (" + std::to_string(m) + "," + std::to_string(n) + ")");
            c.expect(quadric::arithmetic_genus({m, n}) == via_ring, "closed form in library");
        }
}

void criterion_6(Checks& c) {
    using quadric::cohomology_dims;
    for (int m = 0; m <= 20; ++m)
        c.expect(cohomology_dims(m + 1, m + 1).h1 == 0, "h1(O(m+1,m+1)) at m=" + std::to_string(m));
    c.expect(cohomology_dims(0, 0) == quadric::CohomologyDims{1, 0, 0}, "h*(O)");
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b) {
            auto h = cohomology_dims(a, b), dual = cohomology_dims(-a - 2, -b - 2);
            std::string at = " at (" + std::to_string(a) + "," + std::to_string(b) + ")";
            c.expect(h.h0 == dual.h2 && h.h1 == dual.h1 && h.h2 == dual.h0, "Serre duality" + at);
            c.expect(h.h0 - h.h1 + h.h2 == (a + 1) * (b + 1), "Euler characteristic" + at);
            auto [p0a, p1a] = oracle::p1_cohomology(a);
            auto [p0b, p1b] = oracle::p1_cohomology(b);
            c.expect(h.h0 == p0a * p0b && h.h1 == p0a * p1b + p1a * p0b && h.h2 == p1a * p1b, "Kuenneth" + at);
        }
}

void criterion_7(Checks& c) {
    std::mt19937_64 rng(7001);
    EqualizerRing eqs[] = {build_equalizer(blow_up(projective_space()), blow_up(projective_space())),
                           build_equalizer(blow_up(flag_threefold()), blow_up(flag_threefold()))};
    for (int trial = 0; trial < 200; ++trial) {
        const EqualizerRing& eq = eqs[trial % 2];
        std::size_t vars = 1 + rng() % 3;
        std::vector<ClassPair> inputs;
        for (std::size_t k = 0; k < vars; ++k)
            inputs.push_back(random_member(eq, 1, rng));
        charges::Polynomial p(vars);
        for (int t = 0, terms = 1 + static_cast<int>(rng() % 4); t < terms; ++t) {
            std::vector<unsigned> exps(vars);
            unsigned budget = static_cast<unsigned>(rng() % 4);
            for (auto& e : exps) {
                e = budget ? static_cast<unsigned>(rng() % (budget + 1)) : 0;
                budget -= e;
            }
            p.add_term(exps, static_cast<long>(rng() % 7) - 3);
        }
        try {
            auto out = charges::practical_lift(eq, p, inputs);
            c.expect(out.matched && eq.contains(out.pair), "trial " + std::to_string(trial));
        } catch (const std::exception& e) {
            c.expect(false, "trial " + std::to_string(trial) + ": " + e.what());
        }
    }
}

void criterion_8(Checks& c) {
    EqualizerRing eq = build_equalizer(blow_up(projective_space()), blow_up(projective_space()));
    const RingPtr& r1 = eq.branch1().ring();
    const RingPtr& r2 = eq.branch2().ring();
    ClassPair zero{RingElement(r1), RingElement(r2)};
    c.expect(charges::obstruction_dim({2, zero, zero, true, {0, 0}}) == 0, "obstruction_dim(0,0) = 0");
    ClassPair h{RingElement::basis(r1, "f*h"), RingElement::basis(r2, "f*h") - eq.branch2().exceptional_divisor()};
    ClassPair c2{RingElement::basis(r1, "f*h^2") + RingElement::basis(r1, "j_*b"), RingElement(r2)};
    auto charge = charges::polarized_charge(eq, {2, zero, c2, false, {0, 0}}, h);
    c.expect(charge.total == 1, "worked example total = 1 (got " + charge.total.get_str() + ")");
    c.expect(charge.total == charge.branch1 + charge.branch2, "total = sum of branch degrees");
}

void criterion_9(Checks& c) {
    using namespace neck;
    Integer fibre = restrict_to_ruling_fibre_bundle(kn_fixed_phase_bundle()).c1();
    c.expect(abs(fibre) == 1, "fibre magnitude 1");
    c.expect(fibre == 1, "fibre convention +1");
    FibreQuotient anti = antidiagonal_quotient_over_fibre();
    c.expect(anti.c1 == 2 && anti.total_space.name() == "RP3", "antidiagonal -> c1 2, RP3");
    FibreQuotient diag = antidiagonal_quotient_over_fibre({1, -1});
    c.expect(diag.c1 == 0 && diag.total_space.name() == "S2xS1", "diagonal character -> 0, S2xS1");
    for (long a = 0; a <= 20; ++a)
        for (long b = 0; b <= 20; ++b) {
            if (a == 0 && b == 0)
                continue;
            Integer c1 = restrict_to_curve(kn_fixed_phase_bundle(), {a, b}).c1();
            c.expect(c1 == -(a + b) && c1 != 0, "curve (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    std::mt19937_64 rng(9001);
    for (int trial = 0; trial < 1000; ++trial) {
        GaussianScalar theta = random_unit(rng), rho2 = random_unit(rng);
        PhasePair p = phase_solve(theta, rho2);
        c.expect(p.rho1() * p.rho2() == theta && p.rho1().is_unit(), "phase trial " + std::to_string(trial));
    }
}

void criterion_10(Checks& c) {
    using namespace real;
    std::vector<GaussianScalar> small;
    for (long re = -2; re <= 2; ++re)
        for (long im = -2; im <= 2; ++im)
            small.emplace_back(Rational(re), Rational(im));
    for (const auto& z0 : small)
        for (const auto& z1 : small) {
            if (z0.is_zero() && z1.is_zero())
                continue;
            for (const auto& w0 : small)
                for (const auto& w1 : small) {
                    if (w0.is_zero() && w1.is_zero())
                        continue;
                    if (is_fixed_point({ProjectivePair(z0, z1), ProjectivePair(w0, w1)}))
                        c.expect(false, "grid point is tau-fixed");
                }
        }
    std::mt19937_64 rng(10001);
    for (int trial = 0; trial < 1000; ++trial)
        c.expect(!is_fixed_point(random_point(rng)), "random point is tau-fixed");
    for (int trial = 0; trial < 200; ++trial) {
        Section11 s{{random_gaussian(rng), random_gaussian(rng), random_gaussian(rng), random_gaussian(rng)}};
        c.expect(tau_tilde(tau_tilde(s)) == s, "tau~^2 = id");
    }
    c.expect(invariant_space_dimension() == 4, "fixed space dimension 4");
    auto base = base_locus();
    bool two = base.size() == 2;
    c.expect(two, "base locus has two points");
    if (two) {
        const GaussianScalar i = GaussianScalar::i();
        bool plus = false, minus = false;
        for (const auto& p : base) {
            plus = plus || p.same_point(make_point(1, i, 1, i));
            minus = minus || p.same_point(make_point(1, -i, 1, -i));
        }
        c.expect(plus && minus, "base locus is ([1:i],[1:i]), ([1:-i],[1:-i])");
        c.expect(tau(base[0]).same_point(base[1]) && tau(base[1]).same_point(base[0]), "tau swaps base points");
    }
    int evaluated = 0;
    while (evaluated < 100) {
        QuadricPoint p = random_point(rng);
        auto h = pencil_value(p);
        if (!h)
            continue;
        ++evaluated;
        auto ht = pencil_value(tau(p));
        c.expect(ht && ht->same_point(h->conj()), "h(tau p) = conj h(p)");
    }
}

std::optional<std::string> run_capture(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return std::nullopt;
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

void criterion_11(Checks& c) {
    const std::string cli = TWISTOR_CLI;
    const std::string dir = TWISTOR_SCENARIO_DIR;
    std::vector<std::string> commands;
    const std::vector<std::string> scenarios = {dir + "/p3_p3.json", dir + "/flag_flag.json"};
    for (const auto& scenario : scenarios)
        for (const auto& sub : std::vector<std::string>{"ring-show --branch 1", "ring-show --branch 2", "ring-show --branch q",
                                      "equalizer", "equalizer --member " + dir + "/member_pair.json",
                                      "surfaces --dmax 50", "surfaces --pair 1 out 1 out", "charge", "neck",
                                      "neck --curve 3 1 --character 1 -1", "neck --decorate " + dir + "/decoration.json",
                                      "real --samples 100"})
            commands.push_back(cli + " --json " + sub + " " + scenario);
    for (const auto& cmd : commands) {
        auto a = run_capture(cmd), b = run_capture(cmd);
        c.expect(a && b && !a->empty(), "no output: " + cmd);
        c.expect(a && b && *a == *b, "outputs differ: " + cmd);
        if (a && !a->empty()) {
            try {
                io::json j = io::json::parse(*a);
                c.expect(j.dump(2) + "\n" == *a, "output is not canonical sorted JSON: " + cmd);
            } catch (const std::exception&) {
                c.expect(false, "output is not JSON: " + cmd);
            }
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria = {
        {"quadric ring relations and sigma", criterion_1},
        {"blow-up rings: structure, projection formula, j_*(xi), [Q]^2, j* homomorphism", criterion_2},
        {"equalizer: ([Q1],[Q2]) membership, product closure, ranks vs enumeration", criterion_3},
        {"surface classification and trace invariants", criterion_4},
        {"genus closed form vs adjunction", criterion_5},
        {"cohomology vanishing, Serre duality, Euler characteristic", criterion_6},
        {"practical lifting preserves matching (200 trials)", criterion_7},
        {"obstruction dimension and polarized charge", criterion_8},
        {"neck circle bundles and phase invariant", criterion_9},
        {"real structure on the quadric", criterion_10},
        {"CLI determinism on shipped scenarios", criterion_11},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Checks c;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[k].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 5.0)
            c.failures.push_back("runtime " + std::to_string(secs) + " s exceeds 5 s");
        std::ostringstream line;
        line << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first;
        line.precision(3);
        line << " [" << std::fixed << secs << " s]";
        std::cout << line.str() << "\n";
        for (std::size_t f = 0; f < c.failures.size() && f < 5; ++f)
            std::cout << "    failed: " << c.failures[f] << "\n";
        if (c.failures.size() > 5)
            std::cout << "    ... " << c.failures.size() - 5 << " more\n";
        if (!c.failures.empty())
            ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
