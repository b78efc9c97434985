#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "nrt/affine_burnside.hpp"
#include "nrt/error.hpp"
#include "nrt/isotopy.hpp"
#include "nrt/zn_b.hpp"
#include "oracles.hpp"

using namespace nrt;

namespace {

/// Cycle lengths of x -> mu x + t, counted by walking the orbits.
std::map<std::vector<std::uint32_t>, std::uint64_t> naive_cycle_types(std::uint32_t p)
{
  std::map<std::vector<std::uint32_t>, std::uint64_t> out;
  for (std::uint32_t mu = 1; mu < p; ++mu)
    for (std::uint32_t t = 0; t < p; ++t) {
      std::vector<char> seen(p);
      std::vector<std::uint32_t> lens;
      for (std::uint32_t s = 0; s < p; ++s) {
        std::uint32_t len = 0;
        for (std::uint32_t x = s; !seen[x]; x = (mu * x + t) % p) {
          seen[x] = 1;
          ++len;
        }
        if (len)
          lens.push_back(len);
      }
      std::sort(lens.begin(), lens.end());
      ++out[lens];
    }
  return out;
}

} // namespace

TEST_CASE("primes and phi")
{
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
}

TEST_CASE("affine maps form a group of order p(p-1)")
{
  for (std::size_t p : {2, 3, 5, 7, 13}) {
    auto maps = affine_maps(p);
    CHECK(maps.size() == p * (p - 1));
    for (const auto& f : maps) {
      auto id = compose(f, inverse(f));
      CHECK(id.mu == 1);
      CHECK(id.t == 0);
    }
  }
  CHECK_THROWS_AS(affine_maps(9), Error);
  CHECK_THROWS_AS(affine_maps(37), Error);
}

TEST_CASE("closed form equals the cycle types of every map")
{
  for (std::uint32_t p = 2; p <= 31; ++p) {
    if (!is_prime(p))
      continue;
    auto formula = cycle_index_formula(p);
    auto naive = naive_cycle_types(p);
    REQUIRE(formula.terms.size() == naive.size());
    for (const auto& [lens, count] : naive) {
      CycleType ct;
      for (auto len : lens) {
        if (!ct.empty() && ct.back().first == len)
          ++ct.back().second;
        else
          ct.push_back({len, 1});
      }
      auto it = formula.terms.find(ct);
      REQUIRE(it != formula.terms.end());
      CHECK(it->second == Rational(count, p * (p - 1)));
    }
    CHECK(coefficient_sum(formula) == 1);
  }
}

TEST_CASE("brute-force cycle index input checks")
{
  CHECK_THROWS_AS(cycle_index_bruteforce({}), Error);
  CHECK_THROWS_AS(cycle_index_bruteforce({{0, 1}, {0, 1, 2}}), Error);
  // {id, (0 1)} on three points is closed; {(0 1 2)} alone is not.
  CHECK_NOTHROW(cycle_index_bruteforce({{0, 1, 2}, {1, 0, 2}}));
  CHECK_THROWS_AS(cycle_index_bruteforce({{1, 2, 0}}), Error);
}

TEST_CASE("rendering for p = 5")
{
  CHECK(cycle_index_text(cycle_index_formula(5)) == "(1/20)(x1^5 + 5 x1 x2^2 + 10 x1 x4 + 4 x5)");
}

TEST_CASE("P(2,...,2) counts subset orbits")
{
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto value = evaluate_cycle_index(cycle_index_formula(p), 2);
    CHECK(denominator(value) == 1);
    CHECK(value == Rational(oracle::affine_subset_orbits(p)));
    CHECK(subset_orbit_count(p, OrbitMethod::CycleUnion) == oracle::affine_subset_orbits(p));
    if (p <= 11)
      CHECK(subset_orbit_count(p, OrbitMethod::NaiveScan) == oracle::affine_subset_orbits(p));
  }
}

TEST_CASE("isotopy class count formula")
{
  // Direct classification of the 2^(p-1) dihedral transversal loops.
  for (std::size_t p : {3, 5, 7}) {
    std::vector<RightLoop> loops;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); mask += 2)
      loops.push_back(znb_right_loop(SubsetB::from_mask(p, mask)));
    auto classes = classify(loops, Relation::Isotopy).classes.size();
    CHECK(itp_count_formula(p) == classes);
  }
  CHECK(itp_count_formula(3) == 2);
  CHECK(itp_count_formula(5) == 3);
  CHECK(itp_count_formula(7) == 5);
  CHECK_THROWS_AS(itp_count_formula(2), Error);
  CHECK_THROWS_AS(itp_count_formula(15), Error);
}
