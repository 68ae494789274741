#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "bchroma/bcolor.hpp"
#include "bchroma/edgelist.hpp"
#include "bchroma/families.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("bchroma_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

CommandResult run_cli(const std::string& args) {
    fs::path out_path = work_dir() / "stdout.txt";
    fs::path err_path = work_dir() / "stderr.txt";
    std::string command = std::string(BCHROMA_CLI_PATH) + " " + args + " > " + out_path.string() +
                          " 2> " + err_path.string();
    int raw = std::system(command.c_str());
    CommandResult result;
    result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

}  // namespace

TEST_CASE("gen writes edge lists with counts") {
    fs::path out = work_dir() / "rasta.el";
    auto r = run_cli("gen rasta 4 3 2 -o " + out.string());
    CHECK(r.code == 0);
    CHECK(r.out == "vertices 9 edges 18\n");
    std::string text = slurp(out);
    CHECK(text.substr(0, 5) == "9 18\n");
    CHECK(bchroma::parse_edgelist(text) == bchroma::rasta({{4, 3, 2}}));
}

TEST_CASE("gen jaco writes the underlying graph plus an arc sidecar") {
    fs::path out = work_dir() / "jaco.el";
    auto r = run_cli("gen jaco 5 1 0 -o " + out.string());
    CHECK(r.code == 0);
    CHECK(slurp(out) == "5 5\n1 2\n2 3\n3 4\n3 5\n4 5\n");
    CHECK(slurp(out.string() + ".arcs") == "5 5\n1 2\n2 3\n3 4\n3 5\n4 5\n");
}

TEST_CASE("gen ornated splits n from the reach string") {
    fs::path out = work_dir() / "ornated.el";
    auto r = run_cli("gen ornated 5 2 1 -o " + out.string());
    CHECK(r.code == 0);
    CHECK(r.out == "vertices 5 edges 7\n");
    CHECK(bchroma::parse_edgelist(slurp(out)) ==
          underlying(bchroma::ornated(5, bchroma::OrnatedString{{2, 1}})));
    CHECK(!slurp(out.string() + ".arcs").empty());
}

TEST_CASE("gen enforces the documented caps") {
    auto r = run_cli("gen setgraph 6");
    CHECK(r.code == 2);
    CHECK(r.err.find("capped") != std::string::npos);
}

TEST_CASE("gen chithra and edgejoint read input files") {
    fs::path base = work_dir() / "c4.el";
    spit(base, bchroma::emit_edgelist(bchroma::cycle(4)));
    fs::path out = work_dir() / "wheel.el";
    auto r = run_cli("gen chithra -i " + base.string() + " --w 1,2,3,4 -o " + out.string());
    CHECK(r.code == 0);
    CHECK(r.out == "vertices 5 edges 8\n");

    fs::path joint = work_dir() / "joint.el";
    auto j = run_cli("gen edgejoint -a " + base.string() + " -b " + base.string() +
                     " -v 1 -u 2 -o " + joint.string());
    CHECK(j.code == 0);
    CHECK(j.out == "vertices 8 edges 9\n");
}

TEST_CASE("phi command") {
    fs::path k5 = work_dir() / "k5.el";
    spit(k5, bchroma::emit_edgelist(bchroma::complete(5)));
    auto r = run_cli("phi " + k5.string() + " --oracle");
    CHECK(r.code == 0);
    CHECK(r.out.find("phi 5\n") == 0);
    CHECK(r.out.find("oracle 5 (agrees)") != std::string::npos);

    fs::path c4 = work_dir() / "c4phi.el";
    spit(c4, bchroma::emit_edgelist(bchroma::cycle(4)));
    auto s = run_cli("phi " + c4.string() + " --spectrum");
    CHECK(s.code == 0);
    CHECK(s.out.find("phi 2\n") == 0);
    CHECK(s.out.find("spectrum {2}") != std::string::npos);

    fs::path p4 = work_dir() / "p4.el";
    spit(p4, bchroma::emit_edgelist(bchroma::path(4)));
    auto p = run_cli("phi " + p4.string());
    CHECK(p.code == 0);
    CHECK(p.out == "phi 2\n");
}

TEST_CASE("phi writes a witness file") {
    fs::path w6 = work_dir() / "w6.el";
    spit(w6, bchroma::emit_edgelist(bchroma::wheel(5)));
    fs::path witness = work_dir() / "witness.json";
    auto r = run_cli("phi " + w6.string() + " --witness " + witness.string());
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(slurp(witness));
    CHECK(doc["phi"] == 4);
    bchroma::Coloring coloring{doc["k"].get<int>(), doc["colors"].get<std::vector<int>>()};
    CHECK(bchroma::is_b_coloring(bchroma::wheel(5), coloring, coloring.k));
}

TEST_CASE("phi reports timeouts with a distinct exit code") {
    fs::path big = work_dir() / "setgraph4.el";
    spit(big, bchroma::emit_edgelist(bchroma::set_graph(4)));
    auto r = run_cli("phi " + big.string() + " --budget 20");
    CHECK(r.code == 20);
    CHECK(r.out.find("undecided") != std::string::npos);
}

TEST_CASE("check command") {
    fs::path c4 = work_dir() / "check_c4.el";
    spit(c4, bchroma::emit_edgelist(bchroma::cycle(4)));
    fs::path good = work_dir() / "good.json";
    spit(good, "{\"k\":2,\"colors\":[1,2,1,2]}\n");
    auto r = run_cli("check " + c4.string() + " " + good.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("proper: yes") != std::string::npos);
    CHECK(r.out.find("b-coloring: yes") != std::string::npos);

    fs::path k3 = work_dir() / "check_k3.el";
    spit(k3, bchroma::emit_edgelist(bchroma::complete(3)));
    fs::path bad = work_dir() / "bad.json";
    spit(bad, "{\"k\":2,\"colors\":[1,1,2]}\n");
    auto b = run_cli("check " + k3.string() + " " + bad.string());
    CHECK(b.code == 0);
    CHECK(b.out.find("proper: no (edge 1-2") != std::string::npos);

    fs::path p3 = work_dir() / "check_p3.el";
    spit(p3, bchroma::emit_edgelist(bchroma::path(3)));
    fs::path rainbow = work_dir() / "rainbow.json";
    spit(rainbow, "{\"k\":3,\"colors\":[1,2,3]}\n");
    auto p = run_cli("check " + p3.string() + " " + rainbow.string());
    CHECK(p.code == 0);
    CHECK(p.out.find("b-coloring: no (class 1 has no b-vertex)") != std::string::npos);
}

TEST_CASE("parse errors name the line") {
    fs::path bad = work_dir() / "bad.el";
    spit(bad, "2 1\n2 1\n");
    auto r = run_cli("phi " + bad.string());
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    auto ok = run_cli("verify --claims PROP12-COMPLETE --max-n 8");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("summary: confirmed=8") != std::string::npos);

    auto refuted = run_cli("verify --claims SETGRAPH --n 2");
    CHECK(refuted.code == 10);

    auto timeout = run_cli("verify --claims SETGRAPH --budget 50");
    CHECK(timeout.code == 20);
}

TEST_CASE("verify writes byte-identical deterministic reports") {
    fs::path first = work_dir() / "report1.json";
    fs::path second = work_dir() / "report2.json";
    auto a = run_cli("verify --claims RASTA --deterministic --json " + first.string());
    auto b = run_cli("verify --claims RASTA --deterministic --json " + second.string());
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
    CHECK(slurp(first) == slurp(second));
    CHECK(!slurp(first).empty());
}
