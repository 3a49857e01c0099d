#include <iostream>

#include <CLI11.hpp>

#include "babbage/cli/commands.hpp"

namespace {

using babbage::cli::CommandConfig;

void add_input(CLI::App* sub, CommandConfig& c) {
    auto* def = sub->add_option("--def", c.definition, "map definition, e.g. \"f(x1,x2) = x1 + x2\"");
    auto* table = sub->add_option("--table", c.table_path, "finite table file");
    def->excludes(table);
}

void add_budget(CLI::App* sub, CommandConfig& c) {
    sub->add_option("--max-states", c.max_states, "budget on m^k")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterates, involutory orders and cycle structure of maps f: X^k -> X"};
    app.require_subcommand(1);
    CommandConfig c;
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    auto* iterate = app.add_subcommand("iterate", "n-th iterate of a seed state");
    add_input(iterate, c);
    iterate->add_option("--seed", c.seed, "comma-separated seed, e.g. 1,1 or 1/2,zeta(3)")->required();
    iterate->add_option("--n", c.n, "iterate count (negative allowed for bijective tables)")->required();
    add_budget(iterate, c);

    auto* orbit = app.add_subcommand("orbit", "states visited until the seed recurs");
    add_input(orbit, c);
    orbit->add_option("--seed", c.seed, "comma-separated seed")->required();
    orbit->add_option("--max-steps", c.max_steps, "maximum states listed")->capture_default_str();
    add_budget(orbit, c);

    auto* order = app.add_subcommand("order", "minimal involutory order");
    add_input(order, c);
    order->add_option("--bound", c.bound, "search bound for definitions")->capture_default_str();
    add_budget(order, c);

    auto* point_order = app.add_subcommand("point-order", "least n with f^n(seed) = seed");
    add_input(point_order, c);
    point_order->add_option("--seed", c.seed, "comma-separated seed")->required();
    point_order->add_option("--bound", c.bound, "search bound for definitions")->capture_default_str();
    add_budget(point_order, c);

    auto* check_ii = app.add_subcommand("check-ii", "induced involutory test");
    add_input(check_ii, c);
    check_ii->add_option("--n", c.ii_order, "order n")->required();
    check_ii->add_option("--arg", c.arg, "1-based argument position; all positions when omitted");
    add_budget(check_ii, c);

    auto* symmetric = app.add_subcommand("symmetric", "invariance under permuting arguments");
    add_input(symmetric, c);
    add_budget(symmetric, c);

    auto* cycles = app.add_subcommand("cycles", "cycle decomposition of the first iterate");
    cycles->add_option("--table", c.table_path, "finite table file")->required();
    add_budget(cycles, c);

    auto* enumerate_ii = app.add_subcommand("enumerate-ii", "every II table with the given m and k");
    enumerate_ii->add_option("--m", c.m, "alphabet size")->required();
    enumerate_ii->add_option("--k", c.k, "arity")->required();
    add_budget(enumerate_ii, c);

    auto* count = app.add_subcommand("count-involutions", "number of involutions of an m-set");
    count->add_option("--m", c.m, "set size")->required();

    auto* claim1 = app.add_subcommand("claim1", "state periods against sequence periods");
    claim1->add_option("--table", c.table_path, "finite table file")->required();
    add_budget(claim1, c);

    auto* augment = app.add_subcommand("augment", "lift to a larger arity");
    add_input(augment, c);
    augment->add_option("--to", c.to, "target arity")->required();
    add_budget(augment, c);

    auto* conjugate = app.add_subcommand("conjugate", "conjugate a table by a permutation of X");
    conjugate->add_option("--table", c.table_path, "finite table file")->required();
    conjugate->add_option("--perm", c.perm, "comma-separated images of 0..m-1")->required();
    add_budget(conjugate, c);

    app.add_subcommand("verify-examples", "golden checks of the worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return babbage::cli::kExitUsage;
    }

    c.command = app.get_subcommands().front()->get_name();
    c.json = json;
    const auto result = babbage::cli::run(c);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
