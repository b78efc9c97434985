#ifndef NRT_AFFINE_BURNSIDE_HPP
#define NRT_AFFINE_BURNSIDE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nrt/permutation.hpp"

namespace nrt {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n) noexcept;
std::uint64_t euler_phi(std::uint64_t n) noexcept;

inline constexpr std::size_t kMaxAffinePrime = 31;

/// x ↦ mu*x + t over Z_p, mu != 0.
struct AffineMap {
  std::uint32_t p = 0;
  std::uint32_t mu = 1;
  std::uint32_t t = 0;

  std::uint32_t apply(std::uint32_t x) const { return (mu * x + t) % p; }
  Permutation permutation() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// (outer ∘ inner)(x) = outer(inner(x)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);
AffineMap inverse(const AffineMap& f);

/// All p(p-1) maps, mu-major. Closure under composition is checked.
/// Throws Error(NotPrime) or Error(OrderTooLarge) for p > kMaxAffinePrime.
std::vector<AffineMap> affine_maps(std::size_t p);

/// Compares cycle lengths sorted in descending order, so x1^5 precedes
/// x1 x2^2 and x_p comes last.
struct PartitionOrder {
  bool operator()(const CycleType& a, const CycleType& b) const;
};

struct CycleIndex {
  std::size_t degree = 0;
  std::map<CycleType, Rational, PartitionOrder> terms;

  friend bool operator==(const CycleIndex&, const CycleIndex&) = default;
};

/// Assembled from the closed form
///   (1/(p(p-1))) (x1^p + p Σ_{d | p-1, d > 1} φ(d) x1 x_d^((p-1)/d) + (p-1) x_p).
CycleIndex cycle_index_formula(std::size_t p);

/// Average of cycle-type monomials. Throws Error(InvalidArgument) when the
/// set is empty, degrees differ, or the set is not closed under products.
CycleIndex cycle_index_bruteforce(const std::vector<Permutation>& perms);

Rational evaluate_cycle_index(const CycleIndex& index, const Rational& value);
Rational coefficient_sum(const CycleIndex& index);

/// P(2,...,2)/2 for an odd prime p; the result is asserted integral.
std::uint64_t itp_count_formula(std::size_t p);

enum class OrbitMethod {
  CycleUnion, ///< 2^(#cycles) fixed subsets per map; p <= 23
  NaiveScan,  ///< test every one of the 2^p subsets; p <= 13
};

/// Orbits of Aff(1,p) on the subsets of Z_p, by Burnside averaging.
std::uint64_t subset_orbit_count(std::size_t p, OrbitMethod method = OrbitMethod::CycleUnion);

/// e.g. "(1/20)(x1^5 + 5 x1 x2^2 + 10 x1 x4 + 4 x5)".
std::string cycle_index_text(const CycleIndex& index);

} // namespace nrt

#endif // NRT_AFFINE_BURNSIDE_HPP
