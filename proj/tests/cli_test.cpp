#include "normord/cli/commands.hpp"
#include "normord/cli/json_io.hpp"
#include "normord/cli/suites.hpp"
#include "normord/rewriter.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace normord;
using namespace normord::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

bool hasLine(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        if (l == line) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("order") {
    Run r = run({"order", "--word", "(YX)^3", "--s", "1", "--format", "pretty"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "q^3*Y^3X^3 + (q*alpha1 + 2*q^2*alpha1)*Y^3X^2 + (alpha1^2 + q*alpha1^2)*Y^3X + (2*q*alpha0 + q^2*alpha0)*Y^2X^2 + "
          "(2*alpha0*alpha1 + q*alpha0*alpha1)*Y^2X + alpha0^2*YX\n");
    CHECK(run({"order", "--word", "XY", "--s", "1", "--q", "1"}).out == "YX + alpha1*Y + alpha0\n");
    CHECK(run({"order", "--word", "", "--s", "0"}).out == "1\n");
    CHECK(run({"order", "--word", "XY", "--q", "1/2", "--alpha", "3,-1"}).out == "1/2*YX - Y + 3\n");
}

TEST_CASE("order --check prints both forms and a verdict") {
    Run r = run({"order", "--word", "X^2Y^2", "--s", "2", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("combinatorial: ") == 0);
    CHECK(r.out.find("\nrewriting:     ") != std::string::npos);
    CHECK(r.out.find("agree: yes") != std::string::npos);
    for (const char* engine : {"dp", "sequential", "static"}) {
        CHECK(run({"order", "--word", "XYXY", "--engine", engine, "--check"}).code == 0);
    }
}

TEST_CASE("order csv") {
    Run r = run({"order", "--word", "XY", "--s", "1", "--format", "csv"});
    CHECK(r.out == "y,x,coefficient\n1,1,1 * q\n1,0,1 * alpha1\n0,0,1 * alpha0\n");
}

TEST_CASE("order errors and guards") {
    Run parse = run({"order", "--word", "(YX"});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("at byte 3") != std::string::npos);
    CHECK(run({"order", "--word", "XY", "--alpha", "1,2,3"}).code == 2);
    CHECK(run({"order", "--word", "XY", "--q", "1/2"}).code == 2);
    CHECK(run({"order", "--word", "XY", "--q", "abc"}).code == 2);
    Run big = run({"order", "--word", "(XY)^8"});
    CHECK(big.code == 2);
    CHECK(big.err.find("refused") == 0);
    CHECK(run({"order", "--word", "(XY)^8", "--unsafe-limits"}).code == 0);
    CHECK(run({"order", "--word", "X^7Y^7", "--engine", "static"}).code == 2);
    CHECK(run({"order"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table") {
    Run r = run({"table", "--family", "ore-stirling", "--n", "3", "--q", "1", "--alpha", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,j,k,coefficient\n", 0) == 0);
    CHECK(hasLine(r.out, "3,2,1,3"));
    Run poly = run({"table", "--family", "poly-stirling", "--s", "2", "--n", "3"});
    CHECK(hasLine(poly.out, "3,4,2,1 * q * alpha2 + 1 * q^2 * alpha2 + 1 * q^3 * alpha2"));
    Run lah = run({"table", "--family", "ore-lah", "--n", "2", "--format", "pretty"});
    CHECK(hasLine(lah.out, "(2,4,1)  alpha1 + q*alpha1"));
    CHECK(hasLine(lah.out, "(2,4,2)  q^2"));
    CHECK(run({"table", "--family", "nope", "--n", "2"}).code == 2);
    CHECK(run({"table", "--family", "ore-lah", "--n", "20"}).code == 2);
    auto j = json::parse(run({"table", "--family", "ore-scherk", "--r", "3", "--n", "2", "--format", "json"}).out);
    CHECK(j["family"] == "ore-scherk(r=3)");
    CHECK(j["entries"].size() > 0);
}

TEST_CASE("board") {
    CHECK(run({"board", "--word", "(YX)^4"}).out == "heights (left to right): 3,2,1,0\n. . .\n. .\n.\n");
    CHECK(run({"board", "--word", "X^2YXYX^2Y"}).out.rfind("heights (left to right): 3,3,2,1,1\n", 0) == 0);
    CHECK(run({"board", "--family", "lah", "--n", "3"}).out.rfind("heights (left to right): 4,2,0\n", 0) == 0);
    Run overlay = run({"board", "--family", "partition", "--heights", "3,3,2,1,1", "--rooks", "1:0,3:2"});
    CHECK(overlay.code == 0);
    CHECK(hasLine(overlay.out, "empty 3, cancelled 5, weight q^3*alpha0^2"));
    Run bad = run({"board", "--family", "staircase", "--n", "3", "--rooks", "2:0,1:0"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("rook-row-conflict") != std::string::npos);
    CHECK(run({"board", "--word", "XY", "--family", "lah"}).code == 2);
    auto j = json::parse(run({"board", "--family", "rectangle", "--m", "2", "--n", "3", "--format", "json"}).out);
    CHECK(j["heights"] == json::array({3, 3}));
    CHECK(j["cells"] == 6);
}

TEST_CASE("verify") {
    Run r = run({"verify", "--suite", "binomial"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 checks, 0 failed") != std::string::npos);
    Run cf = run({"verify", "--suite", "closed-forms"});
    CHECK(cf.code == 0);
    CHECK(cf.out.find("informational:") != std::string::npos);
    CHECK(cf.out.find("(m,n,r,t)=(1,1,1,0): alternating sum 1, Eulerian form 2") != std::string::npos);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"verify", "--suite", "engines", "--max-cells", "6", "--seed", "5", "--format", "json"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::vector<std::string> order{"order", "--word", "(YYX)^3", "--s", "3", "--format", "json"};
    CHECK(run(order).out == run(order).out);
}

TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(17);
    for (const Word& w : randomWords(100, 9, 17)) {
        const int s = static_cast<int>(rng() % 4);
        NormalForm nf = normalOrder(w, s);
        json j = normalFormToJson(nf, w.render());
        NormalForm back = normalFormFromJson(json::parse(j.dump()));
        CHECK(equalNormalForms(nf, back).equal);
        CHECK(j["word"] == w.render());
    }
    Board b({1, 2, 2});
    CHECK(boardFromJson(boardToJson(b)) == b);
    CHECK_THROWS(coeffFromJson(json::parse(R"([{"q":0,"alpha":[1],"c":"2"}])"), 1));
}

TEST_CASE("order json matches the schema") {
    auto j = json::parse(run({"order", "--word", "XY", "--s", "1", "--format", "json"}).out);
    CHECK(j["word"] == "XY");
    CHECK(j["s"] == 1);
    CHECK(j["terms"][0]["y"] == 1);
    CHECK(j["terms"][0]["x"] == 1);
    CHECK(j["terms"][0]["coeff"][0]["q"] == 1);
    CHECK(j["terms"][0]["coeff"][0]["alpha"] == json::array({0, 0}));
    CHECK(j["terms"][0]["coeff"][0]["c"] == "1");
}
