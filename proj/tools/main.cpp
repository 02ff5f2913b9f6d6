#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace twistor;
    CLI::App app{"Exact intersection theory, gluing and charge computations for the pushout twistor space"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::optional<std::string> scenario_path;
    std::string positional;
    app.add_flag("--json", as_json, "Emit machine-readable JSON")->configurable(false);
    app.add_option("--scenario", scenario_path, "Scenario JSON file");

    auto* ring_show = app.add_subcommand("ring-show", "Bases and multiplication table of a blown-up branch");
    std::string branch = "1";
    ring_show->add_option("--branch", branch, "1, 2, or q for the quadric");

    auto* equalizer = app.add_subcommand("equalizer", "Per-degree lattices of the pushout Chow ring");
    std::optional<std::string> member;
    equalizer->add_option("--member", member, "Pair JSON file to test for membership");

    auto* surfaces = app.add_subcommand("surfaces", "Glueable surface configurations");
    int d_max = 50;
    std::vector<std::string> pair;
    surfaces->add_option("--dmax", d_max, "Largest twistor degree");
    surfaces->add_option("--pair", pair, "d1 in|out d2 in|out")->expected(4)->allow_extra_args(false);

    auto* charge = app.add_subcommand("charge", "Polarized charges of the scenario bundles");

    auto* neck = app.add_subcommand("neck", "Circle-bundle and phase data of the neck");
    std::vector<long> curve, character;
    std::optional<std::string> decorate;
    neck->add_option("--curve", curve, "Bidegree a b")->expected(2)->allow_extra_args(false);
    neck->add_option("--character", character, "Character a b")->expected(2)->allow_extra_args(false);
    neck->add_option("--decorate", decorate, "Phase decoration request JSON file");

    auto* real = app.add_subcommand("real", "Real structure on the quadric");
    int samples = 100;
    real->add_option("--samples", samples, "Number of random points");

    for (auto* sub : {ring_show, equalizer, surfaces, charge, neck, real})
        sub->add_option("scenario", positional, "Scenario JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (!positional.empty()) {
        if (scenario_path && *scenario_path != positional) {
            std::cerr << "error: scenario given both positionally and with --scenario\n";
            return 2;
        }
        scenario_path = positional;
    }

    try {
        cli::Scenario s = cli::load_scenario(scenario_path);
        auto pair2 = [](const std::vector<long>& v) -> std::optional<std::pair<long, long>> {
            if (v.empty())
                return std::nullopt;
            return std::make_pair(v[0], v[1]);
        };
        cli::Report rep;
        if (ring_show->parsed())
            rep = cli::ring_show(s, branch);
        else if (equalizer->parsed())
            rep = cli::equalizer(s, member);
        else if (surfaces->parsed())
            rep = cli::surfaces_cmd(s, d_max, pair.empty() ? std::nullopt : std::optional(pair));
        else if (charge->parsed())
            rep = cli::charge(s);
        else if (neck->parsed())
            rep = cli::neck_cmd(s, pair2(curve), pair2(character), decorate);
        else
            rep = cli::real_cmd(samples);
        if (as_json)
            std::cout << rep.to_json().dump(2) << "\n";
        else
            std::cout << rep.render_text();
        return rep.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
