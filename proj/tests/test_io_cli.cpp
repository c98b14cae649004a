#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "convexa/app.hpp"
#include "convexa/decision.hpp"
#include "convexa/io.hpp"
#include "convexa/topology.hpp"
#include "support.hpp"

using namespace convexa;
using nlohmann::json;
using testing::code;
using testing::labels;
using testing::W;
using V = std::vector<std::string>;

namespace {

const std::string kData = CONVEXA_TEST_DATA;

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("convexa_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
            std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto p = (path / name).string();
    std::ofstream(p) << text;
    return p;
  }
};

struct Run {
  int rc;
  std::string out;
  std::string err;
};

app::InputOptions input(const std::string& path) {
  app::InputOptions in;
  in.path = path;
  return in;
}

Run analyze(const std::string& path) {
  std::ostringstream out, err;
  app::AnalyzeOptions o;
  o.input = input(path);
  const int rc = app::cmd_analyze(o, out, err);
  return {rc, out.str(), err.str()};
}

Run realize(const std::string& path, const std::string& dim, const std::string& out_path = "") {
  std::ostringstream out, err;
  app::RealizeOptions o;
  o.input = input(path);
  o.dim = dim;
  o.out_path = out_path;
  const int rc = app::cmd_realize(o, out, err);
  return {rc, out.str(), err.str()};
}

Run verify(const std::string& realization, const std::string& code_path) {
  std::ostringstream out, err;
  app::VerifyOptions o;
  o.realization_path = realization;
  o.code = input(code_path);
  const int rc = app::cmd_verify(o, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze") {
  TempDir tmp;
  const auto cmin = analyze(kData + "/cmin.txt");
  CHECK(cmin.rc == 0);
  const auto doc = json::parse(cmin.out);
  CHECK(doc["schema"] == "convexa/1");
  CHECK(doc["verdict"] == "Convex");
  CHECK(doc["dim"] == "Exactly1");
  CHECK(doc["path_of_facets"]["a"] == "124");
  CHECK(doc["facet_intersections"] == json{"12", "13", "1"});
  CHECK(doc["minimal_code"] == json{"1356", "123", "124", "12", "13", "{}"});

  const auto tri = analyze(tmp.file("tri.txt", "12\n13\n23\n"));
  CHECK(tri.rc == 3);
  const auto tdoc = json::parse(tri.out);
  CHECK(tdoc["verdict"] == "NotConvex");
  V sigmas;
  for (const auto& r : tdoc["obstructions"]) {
    if (r["status"] == "Obstruction") sigmas.push_back(r["sigma"]);
  }
  CHECK(sigmas == V{"1", "2", "3"});

  CHECK(analyze(tmp.file("four.txt", "12\n13\n14\n234\n")).rc == 4);
  const auto bad = analyze(tmp.file("bad.txt", "12\n1 x\n"));
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(analyze((tmp.path / "missing.txt").string()).rc == 2);
}

TEST_CASE("analysis document with a realization is consistent") {
  const auto doc = app::analysis_document(code(6, {"1356", "123", "124", "12", "13", "23", "24", "5", "6"}), true, {});
  CHECK(doc["realization"]["dim"] == 2);
  CHECK(doc["certificate"]["code"] == doc["code"]);
}

TEST_CASE("realize and verify round trips") {
  TempDir tmp;
  const auto fig3 = realize(kData + "/cmin.txt", "1");
  REQUIRE(fig3.rc == 0);
  CHECK(json::parse(fig3.out) == json::parse(testing::read_file(kData + "/figure3.json")));

  const auto fig5 = realize(kData + "/code_d.txt", "auto");
  REQUIRE(fig5.rc == 0);
  const auto j5 = json::parse(fig5.out);
  CHECK(j5 == json::parse(testing::read_file(kData + "/figure5.json")));
  CHECK(j5["certificate"]["code"] == json{"1356", "123", "124", "12", "13", "23", "24", "5", "6", "{}"});

  const auto d1 = realize(kData + "/code_d.txt", "1");
  CHECK(d1.rc == 5);
  CHECK(d1.err.find("23") != std::string::npos);
  CHECK(realize(tmp.file("tri.txt", "12\n13\n23\n"), "auto").rc == 3);
  CHECK(realize(tmp.file("four.txt", "12\n13\n14\n234\n"), "auto").rc == 4);

  CHECK(verify(kData + "/figure3.json", kData + "/cmin.txt").rc == 0);
  const auto diff = verify(kData + "/figure3.json", kData + "/code_d.txt");
  CHECK(diff.rc == 3);
  CHECK(json::parse(diff.out)["missing"] == json{"23", "24", "5", "6"});
  CHECK(verify(kData + "/figure5.json", kData + "/code_d.txt").rc == 0);

  const auto out_path = (tmp.path / "tri.json").string();
  const auto tri = tmp.file("trio.txt", "12\n13\n23\n1\n2\n3\n");
  CHECK(realize(tri, "auto", out_path).rc == 0);
  CHECK(verify(out_path, tri).rc == 0);

  CHECK(verify(tmp.file("junk.json", "{\"dim\": 2, "), tri).rc == 2);
  CHECK(verify(tmp.file("nodim.json", "{\"n\": 2}"), tri).rc == 2);
}

TEST_CASE("verify reports an extra codeword with a witness") {
  TempDir tmp;
  auto j = json::parse(testing::read_file(kData + "/figure5.json"));
  // Stretch U5 far to the left so it meets U4 and U2.
  j["sets"][4] = json::array({json::array({"-1/1", "0/1"}), json::array({"30/1", "0/1"}),
                              json::array({"30/1", "1/10"}), json::array({"-1/1", "1/10"})});
  const auto r = verify(tmp.file("nudged.json", j.dump()), kData + "/code_d.txt");
  CHECK(r.rc == 3);
  const auto report = json::parse(r.out);
  REQUIRE_FALSE(report["extra"].empty());
  CHECK(report["extra"][0]["witness"].size() == 2);
}

TEST_CASE("json round trips") {
  const auto v = decide(code(6, {"1356", "123", "124", "12", "13", "23", "24", "5", "6"}));
  const auto r = realize_plan_2d(code(6, {"1356", "123", "124", "12", "13", "23", "24", "5", "6"}), *v.plan);
  const auto back = std::get<Realization2D>(realization_from_json(to_json(r)));
  CHECK(to_json(back) == to_json(r));
  CHECK(certify(back).code == certify(r).code);

  const auto d = testing::cpx(6, {"1356", "123", "124"});
  const auto r1 = construct_min_code_1d(d, *path_of_facets(d));
  const auto back1 = std::get<Realization1D>(realization_from_json(to_json(r1)));
  CHECK(back1.intervals == r1.intervals);

  const auto c = code(11, {"1,11", "2"});
  CHECK(code_from_json(json{{"n", 11}, {"code", to_json(c)}}) == c);
  CHECK(code_from_json(json::array({json::array({1, 11}), "2"})) == c);
  CHECK(to_json(c) == json{"1,11", "2", "{}"});
}

TEST_CASE("svg output") {
  const auto d = testing::cpx(6, {"1356", "123", "124"});
  const auto svg1 = render_svg(construct_min_code_1d(d, *path_of_facets(d)));
  CHECK(svg1.rfind("<svg", 0) == 0);
  CHECK(svg1.find("U6") != std::string::npos);
  const auto c = code(6, {"1356", "123", "124", "12", "13", "23", "24", "5", "6"});
  const auto r = realize_plan_2d(c, *decide(c).plan);
  const auto svg2 = render_svg(r, certify(r));
  CHECK(svg2.find("fill-opacity") != std::string::npos);
  CHECK(svg2.find(">23<") != std::string::npos);
}

TEST_CASE("enumerate command") {
  TempDir tmp;
  std::ostringstream out, err;
  app::EnumerateOptions o;
  o.neurons = 3;
  o.facets = 3;
  o.out_dir = (tmp.path / "enum").string();
  CHECK(app::cmd_enumerate(o, out, err) == 0);
  CHECK(std::filesystem::exists(tmp.path / "enum" / "summary.csv"));
  bool found = false;
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path / "enum")) {
    if (entry.path().extension() != ".json") continue;
    const auto j = json::parse(testing::read_file(entry.path().string()));
    if (j["facets"] == json{"12", "13", "23"}) {
      found = true;
      CHECK(j["minimal_code"] == json{"12", "13", "23", "1", "2", "3", "{}"});
    }
  }
  CHECK(found);

  o.neurons = 2;
  o.out_dir.clear();
  std::ostringstream out2;
  CHECK(app::cmd_enumerate(o, out2, err) == 0);
  const std::string table = out2.str();
  CHECK(std::count(table.begin(), table.end(), '\n') == 1);

  o.neurons = 7;
  CHECK(app::cmd_enumerate(o, out, err) == 2);
  o.neurons = 3;
  o.facets = 4;
  CHECK(app::cmd_enumerate(o, out, err) == 2);
}

TEST_CASE("refine budget from the environment") {
  ::setenv("CONVEXA_REFINE_BUDGET", "5", 1);
  CHECK(app::refine_budget_from_env() == 5);
  ::setenv("CONVEXA_REFINE_BUDGET", "nonsense", 1);
  CHECK(app::refine_budget_from_env() == 32);
  ::unsetenv("CONVEXA_REFINE_BUDGET");
  CHECK(app::refine_budget_from_env() == 32);
}
