#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "nrt/report.hpp"
#include "nrt/zn_b.hpp"

using namespace nrt;
using nlohmann::json;

TEST_CASE("loop table output parses back to the same loop")
{
  for (const char* b : {"", "1", "2,3", "1,3,5"}) {
    auto loop = znb_right_loop(SubsetB::parse(7, b));
    std::istringstream in(render_loop(loop, Format::Table));
    CHECK(parse_right_loop(in) == loop);
  }
}

TEST_CASE("loop JSON carries the table row by row")
{
  auto loop = znb_right_loop(SubsetB::parse(5, "2"));
  auto j = json::parse(render_loop(loop, Format::Json));
  CHECK(j["order"] == 5);
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y)
      CHECK(j["table"][x][y] == loop.op(x, y));
}

TEST_CASE("partition JSON and CSV")
{
  auto g = symmetric_group(3);
  auto h = generated_subgroup(g, parse_generators(*g, "(2,3)"));
  ClassifiedSet set;
  for (const auto& t : enumerate_transversals(h)) {
    set.loops.push_back(induced_right_loop(t));
    set.labels.push_back(transversal_text(t));
  }
  set.partition = classify(set.loops, Relation::Isotopy);

  auto j = json::parse(render_partition(set, Format::Json));
  CHECK(j["relation"] == "isotopy");
  CHECK(j["class_count"] == 2);
  std::size_t members = 0, loops = 0;
  for (const auto& c : j["classes"]) {
    members += c["members"].size();
    CHECK(c["size"] == c["members"].size());
    loops += c["is_loop"].get<bool>();
  }
  CHECK(members == 4);
  CHECK(loops == 1);

  auto csv = render_partition(set, Format::Csv);
  CHECK(csv.rfind("class_id,size,is_loop,n_left_nonsingular\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("cycle index JSON uses integer numerators and denominators")
{
  auto j = json::parse(render_cycle_index(5, cycle_index_formula(5), Format::Json));
  CHECK(j["p"] == 5);
  REQUIRE(j["terms"].size() == 4);
  CHECK(j["terms"][0]["num"] == 1);
  CHECK(j["terms"][0]["den"] == 20);
  CHECK(j["terms"][3]["type"] == json::parse("[[5, 1]]"));
}

TEST_CASE("census and families JSON")
{
  auto c = json::parse(render_census(loop_transversal_census(6), Format::Json));
  CHECK(c["n"] == 6);
  CHECK(c["count"] == 2);
  auto f = json::parse(render_families(5, xb_partition(5), Format::Json));
  CHECK(f["families"].size() == 3);
}

TEST_CASE("group rendering")
{
  auto j = json::parse(render_group(*dihedral_group(3), Format::Json));
  CHECK(j["order"] == 6);
  CHECK(j["kind"] == "dihedral");
  auto big = render_group(*symmetric_group(5), Format::Table);
  CHECK(big.find("order 120") != std::string::npos);
}
