#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rothkit::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("scroll commands") {
  CHECK(run({"scroll", "section", "5,9,11,15"}).out == "S_12,13,15\n");
  CHECK(run({"scroll", "degenerates", "2,2", "1,3"}).out == "true\n");
  CHECK(run({"scroll", "degenerates", "1,3", "2,2"}).out == "false\n");
  CHECK(run({"scroll", "normal-bundle", "1,2,3", "--select", "0"}).out == "-1,-2\n");
  const Run info = run({"scroll", "info", "0,0,2,3"});
  CHECK(info.code == 0);
  CHECK(contains(info.out, "degree=5"));
  CHECK(contains(info.out, "vertex_dim=1"));
}

TEST_CASE("roth report") {
  const Run r = run({"roth", "report", "--a", "3", "--b", "2", "--verify"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "d=7"));
  CHECK(contains(r.out, "sectional_genus=3"));
  CHECK(contains(r.out, "cx_top_power=80"));
  CHECK_FALSE(contains(r.out, "FAIL"));
  CHECK(contains(r.out, "PASS"));
}

TEST_CASE("other commands") {
  CHECK(run({"bound", "castelnuovo", "--d", "10", "--n", "1", "--N", "4"}).out == "M=3 epsilon=0 bound=9\n");
  CHECK(run({"harris-search", "--n", "2", "--max", "12"}).out == "degrees=9,10,11,12\n");
  CHECK(run({"harris-search", "--n", "2", "--max", "8"}).out == "degrees=none\n");
  CHECK(run({"cohom", "--twists", "0,0,3", "--a", "-3", "--b", "1"}).out == "h^0=0 h^1=0 h^2=0 h^3=1\n");
  const Run xc = run({"chow", "eval", "--a", "3", "--b", "2", "X*C"});
  CHECK(xc.out == "class=H^2*F\ndegree=1\n");
  CHECK(run({"chow", "eval", "--a", "3", "--b", "2", "CX*PL*X"}).out == "class=0\ndegree=0\n");
  CHECK(run({"chow", "eval", "--a", "3", "F*F"}).out == "class=0\ndegree=0\n");
  const Run s = run({"bundle", "surjects", "1,1", "2", "--witness", "--verify"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "surjects=true"));
  CHECK(contains(s.out, "x0^1"));
  CHECK(contains(s.out, "full_rank=true"));
  CHECK(run({"bundle", "surjects", "5,9,11,15", "13,13,14"}).out == "surjects=false\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"scroll", "info", "1,,2"}).code == 2);
  CHECK(run({"scroll", "info", "0,0"}).code == 1);
  CHECK(run({"roth", "report", "--a", "1", "--b", "2"}).code == 1);  // d_S = 1
  CHECK(run({"scroll", "section", "0,2,2"}).code == 1);
  CHECK(run({"scroll", "section", "4"}).code == 1);
  CHECK(run({"chow", "eval", "--a", "3", "H^"}).code == 2);
  CHECK(run({"chow", "eval", "--a", "3", "X"}).code == 1);  // missing b
  // no witness exists, so none is printed
  CHECK(run({"bundle", "surjects", "5,9,11,15", "13,13,14", "--witness"}).out == "surjects=false\n");
  CHECK(run({"bound", "castelnuovo", "--d", "5", "--n", "3", "--N", "3"}).code == 1);
  CHECK(run({"harris-search", "--n", "1", "--max", "5"}).code == 1);
  const Run usage = run({"chow", "eval", "--a", "3", "2H"});
  CHECK(usage.code == 2);
  CHECK_FALSE(usage.err.empty());
}

TEST_CASE("json output") {
  {
    const auto j = run_json({"scroll", "info", "0,0,2,3"});
    CHECK(j["degree"] == 5);
    CHECK(j["twists"] == nlohmann::json::array({0, 0, 2, 3}));
  }
  {
    const auto j = run_json({"scroll", "degenerates", "2,2", "1,3"});
    CHECK(j["degenerates"] == true);
    CHECK(j.contains("general"));
    CHECK(j.contains("special"));
  }
  {
    const auto j = run_json({"scroll", "section", "5,9,11,15"});
    CHECK(j["section"] == nlohmann::json::array({12, 13, 15}));
    CHECK(j.contains("scroll"));
  }
  {
    const auto j = run_json({"scroll", "normal-bundle", "1,2,3", "--select", "0"});
    CHECK(j["twists"] == nlohmann::json::array({-1, -2}));
    CHECK(j["selected"] == 0);
  }
  {
    const auto j = run_json({"bundle", "surjects", "1,1", "2", "--witness", "--verify"});
    CHECK(j["surjects"] == true);
    CHECK(j["full_rank"] == true);
    CHECK_FALSE(j["witness"].is_null());
    const auto k = run_json({"bundle", "surjects", "1,1", "2"});
    CHECK(k["witness"].is_null());
    CHECK(k["full_rank"].is_null());
  }
  {
    const auto j = run_json({"roth", "report", "--a", "3", "--b", "2", "--verify"});
    CHECK(j["report"]["d"] == 7);
    CHECK(j["report"]["cx_top_power"] == 80);
    CHECK_FALSE(j["verification"].is_null());
    CHECK(run_json({"roth", "report", "--a", "3", "--b", "2"})["verification"].is_null());
  }
  {
    const auto j = run_json({"chow", "eval", "--a", "3", "--b", "2", "X*C"});
    CHECK(j["normal_form"] == "H^2*F");
    CHECK(j["degree"] == 1);
    CHECK(j["expression"] == "X*C");
    CHECK(run_json({"chow", "eval", "--a", "3", "H"})["degree"].is_null());
  }
  {
    const auto j = run_json({"cohom", "--twists", "0,0,3", "--a", "1", "--b", "0"});
    CHECK(j["h"] == nlohmann::json::array({6, 0, 0, 0}));
    CHECK(j["euler_characteristic"] == 6);
  }
  {
    const auto j = run_json({"bound", "castelnuovo", "--d", "10", "--n", "1", "--N", "4"});
    CHECK(j["M"] == 3);
    CHECK(j["epsilon"] == 0);
    CHECK(j["bound"] == 9);
  }
  {
    const auto j = run_json({"harris-search", "--n", "2", "--max", "12"});
    CHECK(j["degrees"] == nlohmann::json::array({9, 10, 11, 12}));
  }
  // big integers survive as decimal strings
  {
    const auto j = run_json({"chow", "eval", "--a", "3", "--b", "2", "(1000000000*CX)^2*X"});
    CHECK(j["degree"] == "80000000000000000000");
  }
}
