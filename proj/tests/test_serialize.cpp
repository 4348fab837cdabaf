#include <doctest.h>

#include <json.hpp>

#include "expcycles/generators.hpp"
#include "expcycles/serialize.hpp"

using namespace expcycles;

TEST_CASE("certificate and spectrum json") {
  const auto c = exact_expansion(complete_graph(4), 2);
  const Json j = to_json(c);
  CHECK(j.dump().rfind(R"({"kind":"exact","alpha":1.0,"k":2,)", 0) == 0);
  CHECK(j["witness"].size() == 2);

  const auto s = to_json(cycle_spectrum(complete_graph(4)), true);
  CHECK(s["lengths"] == Json({3, 4}));
  CHECK(s["witnesses"]["3"]["vertices"].size() == 3);

  const auto sp = to_json(spectral_alpha(petersen_graph()));
  CHECK(sp["kind"] == "spectral");
  CHECK(sp["lambda"].get<double>() == 2.0);
}

TEST_CASE("collect_cycles finds cycles but not paths") {
  const auto j = nlohmann::json::parse(R"({
    "a": {"length": 3, "vertices": [0, 1, 2]},
    "p": {"length": 2, "vertices": [0, 1, 2]},
    "list": [{"x": {"length": 4, "vertices": [0, 1, 2, 3]}}]})");
  const auto cycles = collect_cycles(j);
  CHECK(cycles.size() == 2);
}

TEST_CASE("error json carries the stage") {
  const StageFailure f("long-path", "too short");
  const auto j = error_json(f);
  CHECK(j["error"] == "stage-failure");
  CHECK(j["stage"] == "long-path");
}

TEST_CASE("traces dump identically for identical inputs") {
  const Graph g = random_regular(50, 3, 4);
  const double alpha = spectral_alpha(g).value;
  CHECK(to_json(run_thm2(g, alpha)).dump() == to_json(run_thm2(random_regular(50, 3, 4), alpha)).dump());

  const Graph d = binomial_random(40, 0.5, 3);
  Thm3Options opt;
  opt.gate = RangeGate::structural;
  opt.seed = 9;
  CHECK(to_json(run_thm3(d, 0.1, 10, opt)).dump() == to_json(run_thm3(d, 0.1, 10, opt)).dump());
}
