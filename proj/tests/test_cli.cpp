#include <doctest.h>

#include <cstdio>
#include <string>

#include "helpers.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"
#include "topsnut/matrix.hpp"

using namespace topsnut;

namespace {

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

std::string with_data(const std::string& flag, const std::string& name) {
    return " --" + flag + " " + data_path(name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("tbpaw over an explicit vertex path") {
    auto r = run_cli("tbpaw path" + with_data("graph", "path5.g") + with_data("labels", "path5.lab") +
                     " --path u1,u2,u3,u4,u5 --kind vv");
    CHECK(r.status == 0);
    CHECK(r.out == "037102512\n");

    auto r2 = run_cli("tbpaw path" + with_data("graph", "path5.g") +
                      with_data("labels", "path5.lab") + " --path u1,u2,u3,u4,u5 --kind vev");
    CHECK(r2.status == 0);
    CHECK(r2.out == "03737271015251312\n");
}

TEST_CASE("counting answers") {
    auto r = run_cli("count tbpaws --q 2");
    CHECK(r.status == 0);
    CHECK(r.out == "2880\n");
    CHECK(run_cli("count matrices --q 3").out == "48\n");
    CHECK(run_cli("count headline --q 190").out == "(570!)(190!)2^190\n");
    CHECK(run_cli("count cycles --blocks 1,1,1").out == "12\n");
}

TEST_CASE("verification exit codes and facts") {
    auto good = run_cli("verify" + with_data("graph", "tree13.g") +
                        with_data("labels", "tree13.lab") + " --scheme 6c");
    CHECK(good.status == 0);
    CHECK(good.out.find("k=13") != std::string::npos);
    CHECK(good.out.find("k2=26") != std::string::npos);
    CHECK(good.out.find("pass") != std::string::npos);

    auto bad = run_cli("verify" + with_data("graph", "path5.g") + with_data("labels", "path5.lab") +
                       " --scheme graceful");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("violation") != std::string::npos);

    auto usage = run_cli("verify" + with_data("graph", "path5.g"));
    CHECK(usage.status == 2);

    auto unknown = run_cli("frobnicate");
    CHECK(unknown.status == 2);
}

TEST_CASE("label writes a labelling the verifier accepts") {
    std::string out = "/tmp/topsnut_cli_sog.lab";
    auto mk = run_cli("label" + with_data("graph", "cat25.g") +
                      " --make set-ordered-graceful --out " + out);
    REQUIRE(mk.status == 0);
    auto chk = run_cli("verify" + with_data("graph", "cat25.g") + " --labels " + out);
    CHECK(chk.status == 0);
    std::remove(out.c_str());
}

TEST_CASE("route extraction matches the library") {
    Scheme sch;
    Graph g = read_graph_file(data_path("path5.g"));
    Labelling L = load_labelling(data_path("path5.lab"), g, sch);
    std::string want = extract_tbpaw(matrix_from_graph(g, L), "rows") + "\n";
    auto r = run_cli("tbpaw route" + with_data("graph", "path5.g") +
                     with_data("labels", "path5.lab") + " --route rows");
    CHECK(r.status == 0);
    CHECK(r.out == want);
}

TEST_CASE("noise modes") {
    auto sub = run_cli("noise --mode substitute --table x=11,y=22 --tokens 11,2,22");
    CHECK(sub.status == 0);
    CHECK(sub.out == "x2y\n");

    auto ins = run_cli("noise --mode insert --in 12345 --seed 9 --count 3");
    REQUIRE(ins.status == 0);
    auto ins2 = run_cli("noise --mode insert --in 12345 --seed 9 --count 3");
    CHECK(ins.out == ins2.out);
    auto strip = run_cli("noise --mode strip --in " + trim(ins.out));
    CHECK(strip.out == "12345\n");
}

TEST_CASE("group file checks and addition") {
    auto chk = run_cli("group --group-file " + data_path("grp14.grp") + " --check");
    CHECK(chk.status == 0);
    CHECK(chk.out.find("n=14") != std::string::npos);
    CHECK(chk.out.find("pass") != std::string::npos);

    auto add = run_cli("group --group-file " + data_path("grp14.grp") + " --add 2,5 --zero 1");
    CHECK(add.status == 0);
    CHECK(add.out.find("result=6") != std::string::npos);
}

TEST_CASE("spantree algorithms") {
    auto a = run_cli("spantree" + with_data("graph", "cycle8.g") + " --algo A");
    CHECK(a.status == 0);
    CHECK(a.out.find("# dominating") != std::string::npos);
    auto c = run_cli("spantree" + with_data("graph", "cycle8.g") + " --algo C");
    CHECK(c.status == 0);
    CHECK(c.out.substr(0, 3) == "8 7");
}

TEST_CASE("manual encryption of a tree host") {
    auto r = run_cli("encrypt" + with_data("graph", "path5.g") + " --group-file " +
                     data_path("grp14.grp") + " --sequence 1,2,3,4 --zero 1 --start 0");
    CHECK(r.status == 0);
    CHECK(r.out.find("blocks=9 joins=8") != std::string::npos);
}

TEST_CASE("snapshot pipeline is reproducible") {
    std::string cmd = "encrypt --snapshot " + data_path("net50.snap") + " --group-file " +
                      data_path("grp14.grp") + " --algo A --seed 7";
    auto one = run_cli(cmd);
    auto two = run_cli(cmd);
    CHECK(one.status == 0);
    CHECK(one.out == two.out);
    CHECK(one.out.find("t=7 algo=A tree_edges=49") != std::string::npos);
}

TEST_CASE("classification report") {
    auto p = run_cli("classify" + with_data("graph", "path5.g"));
    CHECK(p.status == 0);
    CHECK(p.out.find("shape=path") != std::string::npos);

    auto c = run_cli("classify" + with_data("graph", "cycle8.g") + " --split");
    CHECK(c.status == 0);
    CHECK(c.out.find("shape=cycle") != std::string::npos);
    CHECK(c.out.find("kappa=2") != std::string::npos);
    CHECK(c.out.find("delta=2") != std::string::npos);
}

TEST_CASE("library failures exit with one") {
    auto r = run_cli("tbpaw warp" + with_data("graph", "path5.g") + with_data("labels", "path5.lab"));
    CHECK(r.status == 1);
    CHECK(r.out.find("error") != std::string::npos);

    auto missing = run_cli("classify --graph /nonexistent/file.g");
    CHECK(missing.status == 1);
}

}  // TEST_SUITE
