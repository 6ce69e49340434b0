#include "commands.hpp"

#include "stein/errors.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>

int main(int argc, char** argv) {
    using namespace stein::cli;
    CLI::App app{"Legendrian fronts, surgery calculus and Stein fillability deciders"};
    app.require_subcommand(1);
    std::function<int()> run;

    std::string path;
    auto file_verb = [&](const std::string& name, const std::string& help, std::function<int()> body) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", path, "input file")->required();
        sub->callback([&run, body] { run = body; });
        return sub;
    };

    file_verb("stats", "classical invariants of every component of a FRONT file", [&] { return stats(path, std::cout); });
    file_verb("lint", "structural and parity checks of a FRONT file", [&] { return lint(path, std::cout); });
    file_verb("check-stein", "check that every component is framed tb - 1", [&] { return check_stein(path, std::cout); });
    file_verb("surger", "trade 1-handles for 0-framed unknots; prints a SURGERY file", [&] { return surger(path, std::cout); });
    file_verb("h1", "first homology of the boundary (SURGERY or FRONT file)", [&] { return h1(path, std::cout); });
    file_verb("expand", "replace rational coefficients by integer chains", [&] { return expand(path, std::cout); });

    int comp_i = 0;
    std::string twist_m;
    auto* twist_cmd = file_verb("twist", "Rolfsen twist on an unknotted component", [&] { return twist(path, comp_i, twist_m, std::cout); });
    twist_cmd->add_option("component", comp_i)->required();
    twist_cmd->add_option("m", twist_m)->required();

    std::optional<int> dunk_j;
    std::optional<std::string> dunk_inverse;
    auto* dunk_cmd = file_verb("dunk", "slam dunk a meridian, or undo one with --inverse", [&] {
        return dunk(path, comp_i, dunk_j, dunk_inverse, std::cout);
    });
    dunk_cmd->add_option("component", comp_i)->required();
    dunk_cmd->add_option("meridian", dunk_j);
    dunk_cmd->add_option("--inverse", dunk_inverse, "integer framing left on the component");

    auto* blow_cmd = file_verb("blowdown", "blow down a +-1 framed unknot", [&] { return blowdown(path, comp_i, std::cout); });
    blow_cmd->add_option("component", comp_i)->required();

    file_verb("plan", "Legendrian chains realizing the coefficients (needs tb data)", [&] { return plan(path, std::cout); });

    std::optional<std::string> sublink;
    auto* gamma_cmd = file_verb("gamma", "Chern cocycle, spin structures and Gamma", [&] { return gamma(path, sublink, std::cout); });
    gamma_cmd->add_option("--sublink", sublink, "characteristic sublink as 1-based slots, e.g. 1,3");

    file_verb("theta", "theta, d and Theta at the 0-framing", [&] { return theta(path, std::cout); });

    SeifertArgs seifert_args;
    auto* seifert_cmd = app.add_subcommand("seifert", "Stein fillability of a Seifert fibered space");
    seifert_cmd->add_option("--base", seifert_args.base, "o<genus> or n<genus>");
    seifert_cmd->add_option("--coeff", seifert_args.coefficients, "diagram coefficient p/q (repeatable)")->allow_extra_args(false);
    seifert_cmd->add_option("--search-bound", seifert_args.search_bound, "bound on matrix entries");
    seifert_cmd->callback([&] { run = [&] { return seifert(seifert_args, std::cout); }; });

    std::vector<std::string> multiplicities;
    std::string orientation = "+";
    long long brieskorn_bound = 100;
    auto* brieskorn_cmd = app.add_subcommand("brieskorn", "Stein fillability of a Brieskorn homology sphere");
    brieskorn_cmd->add_option("p", multiplicities, "three pairwise coprime multiplicities")->expected(3)->required();
    brieskorn_cmd->add_option("--orientation", orientation, "+ or -");
    brieskorn_cmd->add_option("--search-bound", brieskorn_bound, "bound on matrix entries");
    brieskorn_cmd->callback([&] { run = [&] { return brieskorn(multiplicities, orientation, brieskorn_bound, std::cout); }; });

    BorromeanArgs borromean_args;
    auto* borromean_cmd = app.add_subcommand("borromean", "Stein fillability of surgery on the Borromean rings");
    borromean_cmd->add_option("r", borromean_args.coefficients, "three coefficients");
    borromean_cmd->add_option("--twist-knot", borromean_args.twist_knot, "l m r")->expected(3);
    borromean_cmd->add_option("--two-component", borromean_args.two_component, "m r1 r2")->expected(3);
    borromean_cmd->callback([&] { run = [&] { return borromean(borromean_args, std::cout); }; });

    MoveArgs move_args;
    auto* move_cmd = file_verb("move", "apply a Legendrian move; prints a FRONT file", [&] { return move(path, move_args, std::cout); });
    move_cmd->add_option("n", move_args.move, "move number 0-6")->required();
    move_cmd->add_option("--variant", move_args.variant, "e.g. fishtail-below, triple, swing-down")->required();
    move_cmd->add_option("--at", move_args.at, "event index, or gap index for insertions")->required();
    move_cmd->add_option("--height", move_args.height, "strand height for insertions");
    move_cmd->add_option("--handle", move_args.handle, "1-based handle for moves 4-6");

    StabilizeArgs stab_args;
    auto* stab_cmd = file_verb("stabilize", "add a zig-zag; prints a FRONT file", [&] { return stabilize(path, stab_args, std::cout); });
    stab_cmd->add_option("component", stab_args.component)->required();
    stab_cmd->add_option("direction", stab_args.direction, "up or down")->required();
    stab_cmd->add_option("--at", stab_args.gap, "gap index")->required();
    stab_cmd->add_option("--height", stab_args.height, "strand height in that gap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const stein::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
