#include <doctest.h>

#include "tw/io.hpp"
#include "tw/pipeline.hpp"

using namespace tw;

TEST_CASE("params round trip and kind detection") {
  const Params closed = TrisectionParams{2, {1, 0, 2}};
  CHECK(parse_params(dump_params(closed)) == closed);
  const Params rel = RelTrisectionParams{3, {1, 1, 0}, 1, 2};
  CHECK(parse_params(dump_params(rel)) == rel);
  CHECK(dump_params(closed) == dump_params(closed));
}

TEST_CASE("schema errors carry a location") {
  try {
    parse_params(R"({"schema":"tw/1","genus":1.5,"k":[0,0,0]})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.location() == "/genus");
  }
  try {
    parse_params(R"({"schema":"tw/1","genus":1,"k":[0,0]})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.location() == "/k");
  }
  CHECK_THROWS_AS(parse_params(R"({"genus":1,"k":[0,0,0]})"), SchemaError);
  CHECK_THROWS_AS(parse_params(R"({"schema":"tw/2","genus":1,"k":[0,0,0]})"), SchemaError);
  CHECK_THROWS_AS(parse_params("{not json"), SchemaError);
  CHECK_THROWS_AS(parse_params("[1,2]"), SchemaError);
}

TEST_CASE("diagram, bridge, monodromy and scene round trips") {
  const auto d = unbalanced_s4_diagram(2);
  CHECK(parse_diagram(dump_diagram(d)) == d);

  auto s = perturb(trivial_disks(3), {2, 1});
  CHECK(parse_bridge_surface(dump_bridge_surface(s)) == s);

  const auto rho = standard_rho(4);
  const auto back = parse_monodromy(dump_monodromy(rho));
  CHECK(back.degree == rho.degree);
  CHECK(back.meridian_images == rho.meridian_images);
  CHECK_THROWS_AS(parse_monodromy(R"({"schema":"tw/1","degree":3,"meridians":[[1,4]]})"), SchemaError);
  CHECK_THROWS_AS(parse_monodromy(R"({"schema":"tw/1","degree":3,"meridians":[[2,2]]})"), SchemaError);

  Scene scene;
  scene.graphs = {linear_member(1, Scales{}), pleat_member(2, 3, Scales{})};
  scene.declared = expected_bridge_data(scene.graphs);
  const auto sb = parse_scene(dump_scene(scene));
  REQUIRE(sb.graphs.size() == 2);
  CHECK(sb.graphs[1].pleated);
  CHECK(sb.graphs[1].theta == scene.graphs[1].theta);
  CHECK(sb.graphs[0].translation == scene.graphs[0].translation);
  CHECK(*sb.declared == *scene.declared);
}

TEST_CASE("pipeline config validation") {
  CHECK(parse_pipeline_config(R"({"schema":"tw/1","n":[1,0,2]})").n == Triple{1, 0, 2});
  CHECK_THROWS_AS(parse_pipeline_config(R"({"schema":"tw/1","n":[-1,0,0]})"), SchemaError);
  CHECK_THROWS_AS(parse_pipeline_config(R"({"schema":"tw/1","n":[0,0,0],"R":200})"), SchemaError);
  CHECK_THROWS_AS(parse_pipeline_config(R"({"schema":"tw/1","n":[0,0.5,0]})"), SchemaError);
}

TEST_CASE("stein-b4 reports are deterministic") {
  PipelineConfig cfg;
  cfg.n = {1, 0, 1};
  const auto a = run_stein_b4(cfg);
  const auto b = run_stein_b4(cfg);
  CHECK(a.exit_code == kExitOk);
  CHECK(a.report == b.report);
  CHECK(a.report.find("\"schema\": \"tw/1\"") != std::string::npos);
}

TEST_CASE("stein-b4 examples") {
  PipelineConfig cfg;
  CHECK(run_stein_b4(cfg).report.find("\"status\": \"ok\"") != std::string::npos);
  cfg.n = {0, 0, 1};
  const auto r = run_stein_b4(cfg);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report.find("\"k\": [\n      0,\n      0,\n      1\n    ]") != std::string::npos);
  cfg.scales.R = cfg.scales.M;
  CHECK(run_stein_b4(cfg).exit_code == kExitInput);
}

TEST_CASE("verify dispatch and exit codes") {
  CHECK(run_verify("params", R"({"schema":"tw/1","genus":1,"k":[1,0,0]})").exit_code == kExitOk);
  CHECK(run_verify("params", R"({"schema":"tw/1","genus":1,"k":[2,0,0]})").exit_code == kExitAssertion);
  CHECK(run_verify("params", "{").exit_code == kExitInput);
  CHECK(run_verify("nonsense", "{}").exit_code == kExitInput);
  CHECK(run_verify("cusp", "").exit_code == kExitOk);
  CHECK(run_verify("diagram-h1", dump_diagram(unbalanced_s4_diagram(1))).exit_code == kExitOk);
  const auto seeded = run_verify("cusp", "", VerifyOptions{std::nullopt, 9});
  CHECK(seeded.report == run_verify("cusp", "", VerifyOptions{std::nullopt, 9}).report);
}
