#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "nrt/error.hpp"
#include "nrt/transversal.hpp"
#include "nrt/zn_b.hpp"
#include "oracles.hpp"

using namespace nrt;

namespace {

RightLoop sym3_loop(const std::string& reps)
{
  auto g = symmetric_group(3);
  auto h = generated_subgroup(g, parse_generators(*g, "(2,3)"));
  return induced_right_loop(parse_transversal(make_cosets(h), reps));
}

std::set<oracle::Perm> closure(std::vector<oracle::Perm> gens, std::size_t n)
{
  std::set<oracle::Perm> out;
  oracle::Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<oracle::Perm> todo{id};
  out.insert(id);
  while (!todo.empty()) {
    auto p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      auto q = oracle::compose(g, p);
      if (out.insert(q).second)
        todo.push_back(q);
    }
  }
  return out;
}

/// G_S from the group side: generated by chi(x y (x∘y)^{-1}) over x, y in S.
std::set<oracle::Perm> torsion_from_group(const Transversal& t)
{
  const auto& g = t.group();
  const auto& coset_of = t.cosets()->coset_of;
  auto loop = induced_right_loop(t);
  auto chi = [&](Element e) {
    oracle::Perm p(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      p[i] = coset_of[g.mul(t.reps()[i], e)];
    return p;
  };
  std::vector<oracle::Perm> gens;
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y) {
      Element xy = g.mul(t.reps()[x], t.reps()[y]);
      Element h = g.mul(xy, g.inv(t.reps()[loop.op(x, y)]));
      REQUIRE(t.subgroup().contains(h));
      gens.push_back(chi(h));
    }
  return closure(gens, t.size());
}

} // namespace

TEST_CASE("validation reports the offending index")
{
  // 1 is not a right identity in column 0.
  try {
    validate_right_loop(2, {0, 1, 0, 0});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIdentity);
  }
  // Column 2 repeats 1.
  try {
    validate_right_loop(3, {0, 1, 2, 1, 2, 1, 2, 0, 1});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ColumnNotBijective);
    REQUIRE(e.witness());
    CHECK(*e.witness() == 2);
  }
}

TEST_CASE("group tables: every element left non-singular, trivial torsion")
{
  for (const char* d : {"cyclic:5", "dihedral:4", "sym:3", "alt:4"}) {
    auto loop = loop_from_group(*build_named_group(d));
    CHECK(left_nonsingular_elements(loop).size() == loop.order());
    auto f = structure_flags(loop);
    CHECK(f.is_loop);
    CHECK(f.is_group);
    CHECK(group_torsion(loop).torsion.is_trivial());
  }
}

TEST_CASE("sym3 transversal loops")
{
  auto s1 = sym3_loop("I,(1,2,3),(1,3,2)");
  auto f1 = structure_flags(s1);
  CHECK(f1.is_loop);
  CHECK(f1.is_group);

  auto s2 = sym3_loop("I,(1,3),(1,3,2)");
  auto f2 = structure_flags(s2);
  CHECK_FALSE(f2.is_loop);
  CHECK_FALSE(f2.is_group);
  CHECK(left_nonsingular_elements(s2) == std::vector<Element>{0});
  auto t = group_torsion(s2);
  CHECK(t.torsion.order() == 2);
  CHECK(t.envelope.order() == 6);
  CHECK_FALSE(t.envelope.as_finite_group()->kind() == GroupKind::Cyclic);
}

TEST_CASE("left non-singular elements match a direct row scan")
{
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 2 + round % 6;
    auto table = oracle::random_right_loop(n, rng);
    auto loop = RightLoop::from_table(n, table);
    CHECK(left_nonsingular_elements(loop) == oracle::left_nonsingular(table, n));
    CHECK(left_nonsingular_elements(loop).front() == 0);
  }
}

TEST_CASE("is_group agrees with trivial torsion on random right loops")
{
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    std::size_t n = 2 + round % 5;
    auto loop = RightLoop::from_table(n, oracle::random_right_loop(n, rng));
    CHECK(structure_flags(loop).is_group == group_torsion(loop).torsion.is_trivial());
  }
}

TEST_CASE("table torsion equals the torsion seen through the group action")
{
  auto check_all = [](const char* group, const char* gens) {
    auto g = build_named_group(group);
    auto h = generated_subgroup(g, parse_generators(*g, gens));
    for (const auto& t : enumerate_transversals(h)) {
      auto from_table = group_torsion(induced_right_loop(t)).torsion.elements();
      auto from_group = torsion_from_group(t);
      CHECK(std::set<oracle::Perm>(from_table.begin(), from_table.end()) == from_group);
    }
  };
  check_all("sym:3", "(2,3)");
  check_all("alt:4", "(1,2)(3,4)");
  check_all("dihedral:5", "x");
}

TEST_CASE("envelope of an Alt(4) transversal has the order of the generated subgroup")
{
  auto g = alternating_group(4);
  auto h = generated_subgroup(g, parse_generators(*g, "(1,2)(3,4)"));
  for (const auto& t : enumerate_transversals(h)) {
    auto gen = generated_subgroup(g, t.reps());
    // G_S S = chi(<S>), and chi is faithful modulo core(G,H) = 1.
    CHECK(group_torsion(induced_right_loop(t)).envelope.order() == gen.order());
  }
}

TEST_CASE("text format round trip")
{
  auto loop = znb_right_loop(SubsetB::parse(7, "1,2,4"));
  std::ostringstream out;
  out << loop.order() << "\n";
  for (Element x = 0; x < loop.order(); ++x) {
    for (Element y = 0; y < loop.order(); ++y)
      out << (y ? " " : "") << loop.op(x, y);
    out << "\n";
  }
  std::istringstream in(out.str());
  CHECK(parse_right_loop(in) == loop);

  std::istringstream bad("2\n0 1\n1 1\n");
  CHECK_THROWS_AS(parse_right_loop(bad), Error);
}
