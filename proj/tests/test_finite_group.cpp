#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "nrt/error.hpp"
#include "nrt/finite_group.hpp"
#include "oracles.hpp"

using namespace nrt;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an nrt::Error");
  return ErrorCode::Internal;
}

} // namespace

TEST_CASE("family orders")
{
  CHECK(cyclic_group(1)->order() == 1);
  CHECK(cyclic_group(12)->order() == 12);
  CHECK(dihedral_group(7)->order() == 14);
  CHECK(symmetric_group(4)->order() == 24);
  CHECK(alternating_group(4)->order() == 12);
  CHECK(alternating_group(5)->order() == 60);
  CHECK(build_named_group("sym:5")->order() == 120);
}

TEST_CASE("symmetric group multiplies like permutation composition")
{
  auto g = symmetric_group(4);
  auto perms = oracle::all_perms(4);
  REQUIRE(perms.size() == g->order());
  for (const auto& f : perms)
    for (const auto& h : perms) {
      auto a = *g->find_permutation(f);
      auto b = *g->find_permutation(h);
      CHECK(g->permutation(g->mul(a, b)) == oracle::compose(f, h));
    }
}

TEST_CASE("named groups pass the full table validation")
{
  for (const char* d : {"cyclic:9", "dihedral:6", "sym:4", "alt:4", "alt:5"})
    CHECK_NOTHROW(build_named_group(d)->validate());
}

TEST_CASE("dihedral presentation")
{
  for (std::size_t n : {3, 4, 5, 8}) {
    auto g = dihedral_group(n);
    auto y = parse_element(*g, "y");
    auto x = parse_element(*g, "x");
    CHECK(element_order(*g, y) == n);
    CHECK(element_order(*g, x) == 2);
    CHECK(g->mul(g->mul(x, y), x) == g->inv(y));
    // index n+i is x y^i
    Element yi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(g->mul(x, yi) == n + i);
      yi = g->mul(yi, y);
    }
  }
}

TEST_CASE("descriptor and element parsing errors")
{
  CHECK(code_of([] { build_named_group("cyclic:0"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_named_group("sym:9"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_named_group("torus:3"); }) == ErrorCode::Parse);
  auto g = symmetric_group(3);
  CHECK(code_of([&] { parse_element(*g, "(1,4)"); }) == ErrorCode::Parse);
  CHECK(parse_element(*g, "(2,3)") == parse_element(*g, "(3,2)"));
  CHECK(parse_generators(*g, "(1,2);(1,2,3)").size() == 2);
}

TEST_CASE("cayley table text round trip and diagnostics")
{
  std::istringstream ok("3\n0 1 2\n1 2 0\n2 0 1\nnames: e a b\n");
  auto g = parse_cayley_table(ok);
  CHECK(g->order() == 3);
  CHECK(g->name(1) == "a");

  std::istringstream not_latin("2\n0 1\n1 1\n");
  CHECK(code_of([&] { parse_cayley_table(not_latin); }) == ErrorCode::InvalidArgument);
  std::istringstream short_row("2\n0 1\n1\n");
  CHECK(code_of([&] { parse_cayley_table(short_row); }) == ErrorCode::Parse);
  // Latin and unital but not associative (order 5 loop).
  std::istringstream loop5("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n");
  CHECK(code_of([&] { parse_cayley_table(loop5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("subgroups, cosets, core, normality")
{
  auto s3 = symmetric_group(3);
  auto h = generated_subgroup(s3, parse_generators(*s3, "(2,3)"));
  CHECK(h.order() == 2);
  CHECK_FALSE(is_normal(h));
  CHECK(core(h).order() == 1);
  auto cos = right_cosets(h);
  REQUIRE(cos.index() == 3);
  // Each coset is H g computed by hand.
  for (const auto& c : cos.cosets)
    for (Element g : c)
      for (Element m : h.members())
        CHECK(std::find(c.begin(), c.end(), s3->mul(m, g)) != c.end());

  auto a3 = generated_subgroup(s3, parse_generators(*s3, "(1,2,3)"));
  CHECK(is_normal(a3));
  CHECK(core(a3) == a3);

  auto c = parse_element(*s3, "(1,2,3)");
  CHECK(code_of([&] { Subgroup(s3, {0, c}); }) == ErrorCode::NotSubgroup);
}

TEST_CASE("quotients")
{
  auto d12 = dihedral_group(6);
  auto z = generated_subgroup(d12, parse_generators(*d12, "y^3"));
  REQUIRE(is_normal(z));
  auto q = quotient(z);
  CHECK(q.group->order() == 6);
  for (Element a = 0; a < d12->order(); ++a)
    for (Element b = 0; b < d12->order(); ++b)
      CHECK(q.projection[d12->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));

  auto s3 = symmetric_group(3);
  auto h = generated_subgroup(s3, parse_generators(*s3, "(2,3)"));
  CHECK(code_of([&] { quotient(h); }) == ErrorCode::NotNormal);
}

TEST_CASE("center, nilpotent, solvable")
{
  CHECK(center(dihedral_group(4)).order() == 2);
  CHECK(center(symmetric_group(3)).order() == 1);
  CHECK(is_nilpotent(dihedral_group(4)));
  CHECK(is_nilpotent(cyclic_group(6)));
  CHECK_FALSE(is_nilpotent(symmetric_group(3)));
  CHECK(is_solvable(symmetric_group(4)));
  CHECK_FALSE(is_solvable(alternating_group(5)));
  CHECK(commutator_subgroup(whole_group(alternating_group(4))).order() == 4);
}

TEST_CASE("large permutation groups skip the dense table")
{
  auto g = symmetric_group(7);
  CHECK(g->order() == 5040);
  auto a = parse_element(*g, "(1,2,3,4,5,6,7)");
  CHECK(element_order(*g, a) == 7);
  CHECK(g->mul(a, g->inv(a)) == 0);
}
