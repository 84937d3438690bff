#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "xc/eval.hpp"
#include "xc/stdlib.hpp"
#include "xc/valuetree.hpp"

using namespace std;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(XC_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CmdResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), p)) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path temp_dir() {
    fs::path d = fs::temp_directory_path() / "xc-cli-tests";
    fs::create_directories(d);
    return d;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = temp_dir() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

std::string corpus(const std::string& name) {
    return std::string(XC_CORPUS_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("typecheck prints inferred definition and main types") {
    CmdResult r = run_cli("typecheck " + corpus("distanceTo.xc"));
    CHECK(r.code == 0);
    CHECK(r.out ==
          "distanceEstimate : (field[num]) -> num\n"
          "distanceTo : (bool) -> num\n"
          "main : num\n");

    CmdResult pp = run_cli("typecheck " + corpus("ping-pong.xc"));
    CHECK(pp.code == 0);
    CHECK(pp.out == "ping-pong : () -> field[num]\nmain : field[num]\n");
}

TEST_CASE("typecheck failures exit 1 with a message") {
    fs::path bad = write_temp("bad.xc", "1 + True\n");
    CmdResult r = run_cli("typecheck " + bad.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("error:") != std::string::npos);

    fs::path unparsable = write_temp("unparsable.xc", "def f( { }\n");
    CHECK(run_cli("typecheck " + unparsable.string()).code == 1);
}

TEST_CASE("run executes self-feeding rounds on one device") {
    CmdResult r = run_cli("run " + corpus("ping-pong.xc") + " --rounds 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "round 1: 1[]\n"
          "round 2: 1[0->2]\n"
          "round 3: 1[0->3]\n");
}

TEST_CASE("run accepts sensor overrides") {
    fs::path prog = write_temp("temp_reader.xc", "temperature() * 2\n");
    CmdResult r = run_cli("run " + prog.string() + " --sensor temperature=21");
    CHECK(r.code == 0);
    CHECK(r.out == "round 1: 42[]\n");
}

TEST_CASE("run consumes serialized neighbour trees") {
    // Evaluate device 1's first round in-process, serialize its tree, and
    // feed it to a CLI run as device 0: the counter acknowledges it.
    std::string src = "exchange(0, (o, n) => retsend n + 1)\n";
    fs::path prog = write_temp("pp.xc", src);
    xc::Program p = xc::load_program(src);
    xc::SensorMap sensors;
    sensors["senseDist"] = xc::NValue::lift(xc::Literal{0.0});
    xc::EvalResult round1 = xc::evaluate_round(p.core, 1, {}, sensors);
    fs::path tree = write_temp("tree.txt", "1\n" + xc::serialize_tree(round1.tree) + "\n");

    CmdResult r = run_cli("run " + prog.string() + " --neighbour-tree " + tree.string());
    CHECK(r.code == 0);
    CHECK(r.out == "round 1: 1[1->2]\n");

    fs::path malformed = write_temp("noid.txt", "no-id-line");
    CHECK(run_cli("run " + prog.string() + " --neighbour-tree " + malformed.string()).code ==
          2);
}

TEST_CASE("simulate writes trace, meta, and snapshot files that trace-check accepts") {
    fs::path dir = temp_dir();
    std::string cfg_json = R"({
      "program": "gradient.xc",
      "devices": {"positions": [[0, 0], [1, 0], [2, 0], [3, 0]]},
      "radius": 1.5,
      "period": 1.0,
      "jitter": 0.2,
      "end_time": 8.0,
      "seed": 1
    })";
    std::ofstream(dir / "gradient.xc") << "def distanceEstimate(n) {\n"
                                          "  nfold(min, n + senseDist, Infinity)\n"
                                          "}\n"
                                          "def distanceTo(src) {\n"
                                          "  exchange(Infinity, (n) => retsend mux(src, 0, "
                                          "distanceEstimate(n)))\n"
                                          "}\n"
                                          "distanceTo(uid() == 0)\n";
    fs::path cfg = write_temp("gradient.json", cfg_json);
    std::string prefix = (dir / "gradient_out").string();

    CmdResult sim = run_cli("simulate " + cfg.string() + " --out " + prefix);
    REQUIRE(sim.code == 0);
    CHECK(sim.out.find("events: ") != std::string::npos);
    CHECK(sim.out.find("aborted: 0") != std::string::npos);
    CHECK(sim.out.find("stabilised: ") != std::string::npos);
    CHECK(sim.out.find("stabilised: never") == std::string::npos);

    CmdResult check = run_cli("trace-check " + prefix + ".trace.csv");
    CHECK(check.code == 0);
    CHECK(check.out.find("ok: ") != std::string::npos);

    // The line of four devices settles into the expected gradient.
    CmdResult snap = run_cli("snapshot " + prefix + " --time 8");
    CHECK(snap.code == 0);
    CHECK(snap.out.find("0,0,0,\"0[]\"") != std::string::npos);
    CHECK(snap.out.find("1,1,0,\"1[]\"") != std::string::npos);
    CHECK(snap.out.find("2,2,0,\"2[]\"") != std::string::npos);
    CHECK(snap.out.find("3,3,0,\"3[]\"") != std::string::npos);

    // Re-running with the same seed reproduces the trace byte for byte.
    std::string prefix2 = (dir / "gradient_out2").string();
    CmdResult again = run_cli("simulate " + cfg.string() + " --out " + prefix2);
    REQUIRE(again.code == 0);
    std::ifstream a(prefix + ".trace.csv"), b(prefix2 + ".trace.csv");
    std::string ta((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string tb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(ta == tb);
    CHECK(!ta.empty());

    // A different seed gives a different schedule.
    std::string prefix3 = (dir / "gradient_out3").string();
    REQUIRE(run_cli("simulate " + cfg.string() + " --seed 99 --out " + prefix3).code == 0);
    std::ifstream c(prefix3 + ".trace.csv");
    std::string tc((std::istreambuf_iterator<char>(c)), std::istreambuf_iterator<char>());
    CHECK(ta != tc);
}

TEST_CASE("trace-check rejects corrupt traces") {
    fs::path bad = write_temp("bad.trace.csv", "not,a,trace\n");
    CHECK(run_cli("trace-check " + bad.string()).code == 2);

    fs::path cyclic = write_temp(
        "cyclic.trace.csv",
        "event_id,device,time,round,precursors,aborted,result\n"
        "0:1,0,1,1,1:1,0,\"0[]\"\n"
        "1:1,1,2,1,,0,\"0[]\"\n");
    CmdResult r = run_cli("trace-check " + cyclic.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("acyclicity") != std::string::npos);
}

TEST_CASE("bad configurations exit 2") {
    fs::path bad = write_temp("bad.json", R"({"program": "1", "devices": {}, "oops": true})");
    CHECK(run_cli("simulate " + bad.string()).code == 2);
    CHECK(run_cli("simulate /nonexistent/config.json").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("simulate").code == 2);
}

TEST_CASE("the whole corpus typechecks and runs") {
    for (const auto& entry : fs::directory_iterator(XC_CORPUS_DIR)) {
        if (entry.path().extension() != ".xc") continue;
        CmdResult tc = run_cli("typecheck " + entry.path().string());
        INFO(entry.path().string(), ": ", tc.out);
        CHECK(tc.code == 0);
        CmdResult r = run_cli("run " + entry.path().string() + " --rounds 2");
        INFO(entry.path().string(), ": ", r.out);
        CHECK(r.code == 0);
    }
}
