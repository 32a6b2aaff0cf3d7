#include <doctest.h>

#include <nlohmann/json.hpp>

#include "gmanvol/classify.hpp"
#include "gmanvol/error.hpp"

using namespace gmanvol;

TEST_CASE("geometry table verdicts") {
  CHECK(geometry_finiteness(Geometry::SL2tilde).verdict == Finiteness::Finite);
  for (auto g : {Geometry::Spherical, Geometry::S2xR, Geometry::Euclidean, Geometry::Nil,
                 Geometry::H2xR}) {
    CAPTURE(to_string(g));
    CHECK(geometry_finiteness(g).verdict == Finiteness::Infinite);
  }
  CHECK(geometry_finiteness(Geometry::Euclidean).reason == reason::kCoveredByTorusBundle);
  CHECK(geometry_finiteness(Geometry::H2xR).reason == reason::kCoveredByTrivialBundle);
}

TEST_CASE("description verdicts") {
  CHECK(mapping_degree_finiteness(SeifertInvariants{0, {{2, 1}, {3, 1}, {7, 1}}}).verdict ==
        Finiteness::Finite);
  CHECK(mapping_degree_finiteness(SeifertInvariants{2, {}}).verdict == Finiteness::Infinite);
  CHECK(mapping_degree_finiteness(TorusBundleCovered{}).verdict == Finiteness::Infinite);
  CHECK(mapping_degree_finiteness(HyperbolicOrContainsHyperbolicPiece{}).verdict ==
        Finiteness::Finite);

  GraphManifold gm;
  gm.pieces = {{"A", 2, 1}, {"B", 2, 1}};
  gm.edges = {{{"A", 0}, {"B", 0}, GluingMatrix::J()}};
  CHECK(mapping_degree_finiteness(gm) ==
        FinitenessVerdict{Finiteness::Finite, std::string(reason::kNontrivialGraph)});
  gm.pieces[0].genus = 1;
  CHECK_THROWS_AS(mapping_degree_finiteness(gm), Error);
}

TEST_CASE("description json") {
  using nlohmann::json;
  auto verdict = [](const json& doc) {
    return verdict_to_json(mapping_degree_finiteness(description_from_json(doc)))["verdict"];
  };
  CHECK(verdict(json::parse(R"({"kind":"seifert","genus":0,"fibers":[[2,1],[3,1],[7,1]]})")) ==
        "finite");
  CHECK(verdict(json::parse(R"({"kind":"torus_bundle_covered"})")) == "infinite");
  CHECK(verdict(json::parse(R"({"kind":"hyperbolic"})")) == "finite");
  CHECK(verdict(json::parse(
            R"({"pieces":[{"id":"A","genus":2,"boundary":1},{"id":"B","genus":2,"boundary":1}],)"
            R"("edges":[{"tail":["A",0],"head":["B",0],"matrix":[[0,1],[1,0]]}]})")) == "finite");
  CHECK_THROWS_AS(description_from_json(json::parse(R"({"kind":"lens"})")), Error);
  CHECK_THROWS_AS(description_from_json(json::parse(R"({"kind":"seifert"})")), Error);
}
