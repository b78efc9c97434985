// Exercises libnrt through nrt.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "nrt/nrt.h"

namespace {

std::string take(char* s)
{
  std::string out = s ? s : "";
  nrt_string_free(s);
  return out;
}

} // namespace

TEST_CASE("group and subgroup handles")
{
  nrt_group* g = nullptr;
  REQUIRE(nrt_group_create("sym:3", &g) == NRT_OK);
  CHECK(nrt_group_order(g) == 6);
  uint32_t a = 0, b = 0, ab = 0;
  REQUIRE(nrt_group_parse_element(g, "(1,2)", &a) == NRT_OK);
  REQUIRE(nrt_group_parse_element(g, "(2,3)", &b) == NRT_OK);
  REQUIRE(nrt_group_multiply(g, a, b, &ab) == NRT_OK);
  char* name = nullptr;
  REQUIRE(nrt_group_element_name(g, ab, &name) == NRT_OK);
  // (1,2)(2,3): apply (2,3) first.
  CHECK(take(name) == "(1,2,3)");
  CHECK(nrt_group_multiply(g, 99, 0, &ab) == NRT_ERR_INVALID_ARGUMENT);

  nrt_subgroup* h = nullptr;
  REQUIRE(nrt_subgroup_create(g, "(2,3)", &h) == NRT_OK);
  CHECK(nrt_subgroup_order(h) == 2);
  CHECK(nrt_subgroup_index(h) == 3);
  CHECK(nrt_subgroup_is_normal(h) == 0);
  CHECK(nrt_subgroup_core_order(h) == 1);
  uint64_t count = 0;
  REQUIRE(nrt_transversal_count(h, &count) == NRT_OK);
  CHECK(count == 4);
  char* text = nullptr;
  REQUIRE(nrt_transversals_render(h, NRT_DEFAULT_CAP, NRT_FORMAT_CSV, &text) == NRT_OK);
  CHECK(take(text).find("true") != std::string::npos);

  nrt_subgroup_free(h);
  nrt_group_free(g);
  nrt_group_free(nullptr);
}

TEST_CASE("errors set status, message and witness")
{
  nrt_group* g = nullptr;
  CHECK(nrt_group_create("torus:3", &g) == NRT_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::strlen(nrt_last_error()) > 0);
  CHECK(std::string(nrt_status_name(NRT_ERR_PARSE)).size() > 0);

  nrt_loop* loop = nullptr;
  const uint32_t bad[] = {0, 1, 2, 1, 2, 1, 2, 0, 1};
  CHECK(nrt_loop_from_table(3, bad, &loop) == NRT_ERR_COLUMN_NOT_BIJECTIVE);
  CHECK(nrt_last_error_witness() == 2);

  CHECK(nrt_group_create(nullptr, &g) == NRT_ERR_INVALID_ARGUMENT);
  CHECK(nrt_itp_count_formula(9, nullptr) == NRT_ERR_INVALID_ARGUMENT);
  uint64_t v = 0;
  CHECK(nrt_itp_count_formula(9, &v) == NRT_ERR_NOT_PRIME);

  REQUIRE(nrt_group_create("sym:5", &g) == NRT_OK);
  nrt_subgroup* h = nullptr;
  REQUIRE(nrt_subgroup_create(g, "(1,2)", &h) == NRT_OK);
  nrt_partition* p = nullptr;
  CHECK(nrt_classify(h, NRT_RELATION_ISOTOPY, 10, 1, &p) == NRT_ERR_ENUMERATION_TOO_LARGE);
  nrt_subgroup_free(h);
  nrt_group_free(g);
}

TEST_CASE("last error is per thread")
{
  nrt_group* g = nullptr;
  CHECK(nrt_group_create("torus:3", &g) == NRT_ERR_PARSE);
  std::string other;
  std::thread t([&] { other = nrt_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::strlen(nrt_last_error()) > 0);
}

TEST_CASE("loops and decisions")
{
  nrt_loop* a = nullptr;
  nrt_loop* b = nullptr;
  REQUIRE(nrt_loop_znb(5, "1", &a) == NRT_OK);
  REQUIRE(nrt_loop_znb(5, "2", &b) == NRT_OK);
  CHECK(nrt_loop_order(a) == 5);
  uint32_t r = 0;
  REQUIRE(nrt_loop_op(a, 1, 1, &r) == NRT_OK);
  CHECK(r == 0);

  int is_loop = -1, is_group = -1;
  REQUIRE(nrt_loop_flags(a, &is_loop, &is_group) == NRT_OK);
  CHECK(is_loop == 0);
  CHECK(is_group == 0);
  uint32_t lns[5];
  size_t n_lns = 0;
  REQUIRE(nrt_loop_left_nonsingular(a, lns, 5, &n_lns) == NRT_OK);
  CHECK(n_lns == 1);
  CHECK(lns[0] == 0);

  // {1} and {2} lie in the same family for p = 5.
  int result = -1;
  uint32_t al[5], be[5], ga[5];
  REQUIRE(nrt_are_isotopic(a, b, &result, al, be, ga) == NRT_OK);
  REQUIRE(result == 1);
  int ok = 0;
  REQUIRE(nrt_verify_isotopy(a, b, al, be, ga, &ok) == NRT_OK);
  CHECK(ok == 1);
  REQUIRE(nrt_isotopy_oracle(a, b, &result) == NRT_OK);
  CHECK(result == 1);
  be[0] ^= 1;
  be[1] ^= 1;
  REQUIRE(nrt_verify_isotopy(a, b, al, be, ga, &ok) == NRT_OK);
  CHECK(ok == 0);

  nrt_loop* c = nullptr;
  REQUIRE(nrt_loop_znb(5, "", &c) == NRT_OK);
  REQUIRE(nrt_are_isotopic(a, c, &result, nullptr, nullptr, nullptr) == NRT_OK);
  CHECK(result == 0);
  REQUIRE(nrt_are_isomorphic(c, c, &result, nullptr) == NRT_OK);
  CHECK(result == 1);

  char* text = nullptr;
  REQUIRE(nrt_loop_render(a, NRT_FORMAT_TABLE, &text) == NRT_OK);
  nrt_loop* back = nullptr;
  REQUIRE(nrt_loop_parse(text, &back) == NRT_OK);
  nrt_string_free(text);
  REQUIRE(nrt_are_isomorphic(a, back, &result, nullptr) == NRT_OK);
  CHECK(result == 1);

  uint64_t torsion = 0;
  REQUIRE(nrt_loop_torsion_order(c, &torsion) == NRT_OK);
  CHECK(torsion == 1);

  for (nrt_loop* l : {a, b, c, back})
    nrt_loop_free(l);
}

TEST_CASE("classification through handles")
{
  nrt_group* g = nullptr;
  nrt_subgroup* h = nullptr;
  REQUIRE(nrt_group_create("alt:4", &g) == NRT_OK);
  REQUIRE(nrt_subgroup_create(g, "(1,2)(3,4)", &h) == NRT_OK);
  nrt_partition* p = nullptr;
  REQUIRE(nrt_classify(h, NRT_RELATION_ISOMORPHISM, NRT_DEFAULT_CAP, 2, &p) == NRT_OK);
  CHECK(nrt_partition_class_count(p) == 5);
  CHECK(nrt_partition_item_count(p) == 32);
  char* text = nullptr;
  REQUIRE(nrt_partition_render(p, NRT_FORMAT_JSON, &text) == NRT_OK);
  CHECK(take(text).find("\"class_count\": 5") != std::string::npos);
  nrt_partition_free(p);

  REQUIRE(nrt_classify(h, NRT_RELATION_ISOTOPY, NRT_DEFAULT_CAP, 1, &p) == NRT_OK);
  CHECK(nrt_partition_class_count(p) == 2);
  nrt_partition_free(p);

  nrt_loop* s1 = nullptr;
  REQUIRE(nrt_loop_from_transversal(h, "I,(1,2,3),(2,3,4),(1,3,2),(1,4,2),(1,3)(2,4)", &s1) ==
          NRT_OK);
  size_t n_lns = 0;
  REQUIRE(nrt_loop_left_nonsingular(s1, nullptr, 0, &n_lns) == NRT_OK);
  CHECK(n_lns == 4);
  nrt_loop_free(s1);
  nrt_subgroup_free(h);
  nrt_group_free(g);
}

TEST_CASE("dihedral, cycle index and verify")
{
  uint64_t v = 0;
  REQUIRE(nrt_itp_count_formula(7, &v) == NRT_OK);
  CHECK(v == 5);

  char* text = nullptr;
  int consistent = 0;
  REQUIRE(nrt_dihedral_render(5, NRT_DIHEDRAL_COUNT, NRT_FORMAT_TABLE, NRT_DEFAULT_CAP, 1, &text,
                              &consistent) == NRT_OK);
  CHECK(consistent == 1);
  CHECK(take(text).find("3 = 3 = 3") != std::string::npos);

  REQUIRE(nrt_cycle_index_render(5, NRT_FORMAT_TABLE, &text) == NRT_OK);
  CHECK(take(text).find("(1/20)") != std::string::npos);

  const char* checks[] = {"quotient-invariance", "cor3.2"};
  int failed = -1;
  REQUIRE(nrt_verify(checks, 2, nullptr, 0, 1, NRT_DEFAULT_CAP, NRT_FORMAT_JSON, &text, &failed) ==
          NRT_OK);
  CHECK(failed == 0);
  CHECK(take(text).find("loop-preservation") != std::string::npos);

  const char* unknown[] = {"nope"};
  CHECK(nrt_verify(unknown, 1, nullptr, 0, 1, NRT_DEFAULT_CAP, NRT_FORMAT_JSON, &text, &failed) ==
        NRT_ERR_INVALID_ARGUMENT);

  REQUIRE(nrt_list_checks(&text) == NRT_OK);
  CHECK(take(text).find("dihedral-count") != std::string::npos);
}
