#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sys/wait.h>

#include <json.hpp>

#include "babbage/cli/commands.hpp"
#include "babbage/cli/verify_examples.hpp"

using namespace babbage::cli;

namespace {

const std::string kData = BABBAGE_DATA_DIR;

CommandConfig config(const std::string& command) {
    CommandConfig c;
    c.command = command;
    return c;
}

CommandConfig with_table(const std::string& command, const std::string& file) {
    CommandConfig c = config(command);
    c.table_path = kData + "/" + file;
    return c;
}

CommandConfig with_def(const std::string& command, const std::string& def) {
    CommandConfig c = config(command);
    c.definition = def;
    return c;
}

struct Spawned {
    int exit_code;
    std::string out;
};

Spawned spawn(const std::string& args) {
    const std::string cmd = std::string(BABBAGE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("documented command examples") {
    auto it = with_def("iterate", "f(x1,x2)=x1+x2");
    it.seed = "1,1";
    it.n = 5;
    CHECK(run(it).out == "89 144\n");
    CHECK(run(with_table("order", "ex6.tbl")).out == "4\n");
    auto ii = with_table("check-ii", "ex7.tbl");
    ii.ii_order = "3";
    CHECK(run(ii).out == "true\n");
    CHECK(run(with_table("order", "ex7.tbl")).out == "15\n");
}

TEST_CASE("subcommands on the example tables") {
    const auto cycles = run(with_table("cycles", "ex6.tbl"));
    CHECK(cycles.exit_code == 0);
    CHECK(cycles.out ==
          "bijective true\nlengths 4 4 1\norder 4\ncycle (0 0)\ncycle (0 1) (1 2) (0 2) (2 1)\n"
          "cycle (1 0) (1 1) (2 0) (2 2)\n");

    auto orbit = with_table("orbit", "ex6.tbl");
    orbit.seed = "0,1";
    CHECK(run(orbit).out == "0 1\n1 2\n0 2\n2 1\nperiod 4\n");

    auto point = with_table("point-order", "ex7.tbl");
    point.seed = "0, 1";
    CHECK(run(point).out == "15\n");

    CHECK(run(with_table("symmetric", "ex6.tbl")).out == "true\n");

    auto conj = with_table("conjugate", "ex6.tbl");
    conj.perm = "1,0,2";
    CHECK(run(conj).out == "3 2\n2 0 1 0 1 2 1 2 0\n");

    const auto claim = run(with_table("claim1", "ex6.tbl"));
    CHECK(claim.exit_code == 0);
    CHECK(claim.out == "states 9\nperiod relation 9/9\nj | n 1/9\nj | nk 9/9\n");

    auto aug = with_table("augment", "ex6.tbl");
    aug.to = 3;
    const auto lifted = run(aug);
    CHECK(lifted.exit_code == 0);
    CHECK(lifted.out.starts_with("3 3\n"));

    auto negative = with_table("iterate", "ex6.tbl");
    negative.seed = "0,1";
    negative.n = -1;
    CHECK(run(negative).out == "2 1\n");
}

TEST_CASE("subcommands on definitions") {
    const std::string roots = "f(x1,x2) = zeta(3)*x1 + zeta(3)^2*x2";
    auto order = with_def("order", roots);
    order.bound = 50;
    CHECK(run(order).out == "none up to 50\n");
    CHECK(run(with_def("order", "f(x1,x2,x3) = 5 - x1 - x2 - x3")).out == "4\n");

    auto ii = with_def("check-ii", roots);
    ii.ii_order = "3";
    CHECK(run(ii).out == "true\n");
    ii.ii_order = "2";
    CHECK(run(ii).out == "false\n");
    ii.ii_order = "300000000000000000000000000000";
    CHECK(run(ii).out == "true\n");
    ii.ii_order = "3";
    ii.arg = 2;
    CHECK(run(ii).out == "true\n");

    auto sum_ii = with_def("check-ii", "f(x1, x2) = 1 - x1 - x2");
    sum_ii.ii_order = "2";
    CHECK(run(sum_ii).out == "true\n");
    auto proj_ii = with_def("check-ii", "f(x1, x2) = x1");
    proj_ii.ii_order = "1";
    proj_ii.arg = 1;
    CHECK(run(proj_ii).out == "true\n");
    auto shift_ii = with_def("check-ii", "f(x1) = x1 + 1");
    shift_ii.ii_order = "5";
    CHECK(run(shift_ii).out == "false\n");

    CHECK(run(with_def("symmetric", roots)).out == "false\n");
    CHECK(run(with_def("symmetric", "f(x1,x2,x3) = 5 - x1 - x2 - x3")).out == "true\n");

    auto it = with_def("iterate", roots);
    it.seed = "1, 0";
    it.n = 2;
    CHECK(run(it).out == "(-2*zeta(3) - 2) 3*zeta(3)\n");

    auto point = with_def("point-order", "f(x1,x2) = 1 - x1 - x2");
    point.seed = "1/2, 7";
    CHECK(run(point).out == "3\n");

    auto orbit = with_def("orbit", "f(x1, x2) = x1 + x2");
    orbit.seed = "1, 1";
    orbit.max_steps = 3;
    CHECK(run(orbit).out == "1 1\n2 3\n5 8\nno return within 3 steps\n");

    auto aug = with_def("augment", "f(x1, x2) = x1 + x2");
    aug.to = 3;
    CHECK(run(aug).out == "f(x1, x2, x3) = x1 + 2*x2\n");

    auto nonlinear = with_def("iterate", "f(x1, x2) = x1 * x2 + 1");
    nonlinear.seed = "2, 3";
    nonlinear.n = 1;
    CHECK(run(nonlinear).out == "7 22\n");
}

TEST_CASE("enumeration and counting") {
    auto e = config("enumerate-ii");
    e.m = 3;
    e.k = 2;
    CHECK(run(e).out == "0 2 1 2 1 0 1 0 2\n1 0 2 0 2 1 2 1 0\n2 1 0 1 0 2 0 2 1\ncount 3\n");
    auto c = config("count-involutions");
    c.m = 5;
    CHECK(run(c).out == "26\n");
    c.m = 30;
    CHECK(run(c).out == "606917269909048576\n");
}

TEST_CASE("exit codes and diagnostics") {
    auto bad_var = with_def("iterate", "f(x1,x2) = x1 + x3");
    bad_var.seed = "1,1";
    bad_var.n = 1;
    const auto r = run(bad_var);
    CHECK(r.exit_code == kExitUsage);
    CHECK(r.err.find("1:17") != std::string::npos);
    CHECK(r.out.empty());

    CHECK(run(config("nope")).exit_code == kExitUsage);
    CHECK(run(with_table("order", "missing.tbl")).exit_code == kExitUsage);

    auto both = with_table("order", "ex6.tbl");
    both.definition = "f(x1) = x1";
    CHECK(run(both).exit_code == kExitUsage);

    auto no_seed = with_table("iterate", "ex6.tbl");
    no_seed.n = 1;
    CHECK(run(no_seed).exit_code == kExitUsage);

    auto bad_seed = with_table("iterate", "ex6.tbl");
    bad_seed.n = 1;
    bad_seed.seed = "0, 3";
    CHECK(run(bad_seed).exit_code == kExitUsage);
    bad_seed.seed = "0";
    CHECK(run(bad_seed).exit_code == kExitUsage);

    CHECK(run(with_def("order", "f(x1,x2) = x1*x2")).exit_code == kExitUsage);
    CHECK(run(with_def("cycles", "f(x1) = x1")).exit_code == kExitUsage);

    auto big = config("enumerate-ii");
    big.m = 10;
    big.k = 7;
    CHECK(run(big).exit_code == kExitResource);

    auto bad_perm = with_table("conjugate", "ex6.tbl");
    bad_perm.perm = "0,0,1";
    CHECK(run(bad_perm).exit_code == kExitUsage);

    auto neg = with_def("iterate", "f(x1) = x1");
    neg.seed = "1";
    neg.n = -1;
    CHECK(run(neg).exit_code == kExitUsage);

    auto zero_order = with_table("check-ii", "ex6.tbl");
    zero_order.ii_order = "0";
    CHECK(run(zero_order).exit_code == kExitUsage);

    const auto claim_fail = run(with_table("claim1", "ex6.tbl"));
    CHECK(claim_fail.exit_code == kExitOk);
}

TEST_CASE("json output is stable") {
    auto it = with_def("iterate", "f(x1,x2)=x1+x2");
    it.seed = "1,1";
    it.n = 5;
    it.json = true;
    const auto a = run(it);
    CHECK(a.out == run(it).out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["command"] == "iterate");
    CHECK(j["state"] == nlohmann::json::array({"89", "144"}));

    auto cycles = with_table("cycles", "ex7.tbl");
    cycles.json = true;
    const auto c = nlohmann::json::parse(run(cycles).out);
    CHECK(c["cycle_lengths"] == nlohmann::json::array({15, 1}));
    CHECK(c["minimal_order"] == "15");
    CHECK(c["bijective"] == true);

    auto e = config("enumerate-ii");
    e.m = 4;
    e.k = 2;
    e.json = true;
    CHECK(run(e).out == run(e).out);
}

TEST_CASE("verify-examples") {
    for (const auto& check : verify_examples()) {
        INFO(check.name << ": " << check.detail);
        CHECK(check.passed);
    }
    CHECK(run(config("verify-examples")).exit_code == kExitOk);
}

TEST_CASE("binary end to end") {
    const auto it = spawn("iterate --def 'f(x1,x2)=x1+x2' --seed 1,1 --n 5");
    CHECK(it.exit_code == 0);
    CHECK(it.out == "89 144\n");
    CHECK(spawn("order --table " + kData + "/ex6.tbl").out == "4\n");
    CHECK(spawn("check-ii --table " + kData + "/ex7.tbl --n 3").out == "true\n");
    CHECK(spawn("verify-examples").exit_code == 0);
    CHECK(spawn("iterate --def 'f(x1)=' --seed 1 --n 1").exit_code == 2);
    CHECK(spawn("iterate --seed 1 --n 1").exit_code == 2);
    CHECK(spawn("enumerate-ii --m 10 --k 7").exit_code == 3);
    CHECK(spawn("--json cycles --table " + kData + "/ex6.tbl").out ==
          spawn("--json cycles --table " + kData + "/ex6.tbl").out);
}
