#include "nrt/affine_burnside.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nrt/error.hpp"

namespace nrt {

namespace {

void require_affine_prime(std::size_t p)
{
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxAffinePrime)
    throw Error(ErrorCode::OrderTooLarge,
                "affine maps are limited to p <= " + std::to_string(kMaxAffinePrime));
}

/// Cycle lengths in descending order, one entry per cycle.
std::vector<std::uint32_t> partition_of(const CycleType& t)
{
  std::vector<std::uint32_t> parts;
  for (auto [len, count] : t)
    parts.insert(parts.end(), count, len);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::uint32_t modular_inverse(std::uint32_t a, std::uint32_t p)
{
  for (std::uint32_t b = 1; b < p; ++b)
    if (a * b % p == 1)
      return b;
  throw Error(ErrorCode::Internal, "no modular inverse");
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) noexcept
{
  std::uint64_t result = n;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      while (n % d == 0)
        n /= d;
      result -= result / d;
    }
  if (n > 1)
    result -= result / n;
  return result;
}

Permutation AffineMap::permutation() const
{
  Permutation perm(p);
  for (std::uint32_t x = 0; x < p; ++x)
    perm[x] = apply(x);
  return perm;
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner)
{
  // mu1 (mu2 x + t2) + t1
  return AffineMap{outer.p, outer.mu * inner.mu % outer.p,
                   (outer.mu * inner.t + outer.t) % outer.p};
}

AffineMap inverse(const AffineMap& f)
{
  std::uint32_t mi = modular_inverse(f.mu, f.p);
  return AffineMap{f.p, mi, (f.p - mi * f.t % f.p) % f.p};
}

std::vector<AffineMap> affine_maps(std::size_t p)
{
  require_affine_prime(p);
  const auto q = static_cast<std::uint32_t>(p);
  std::vector<AffineMap> maps;
  for (std::uint32_t mu = 1; mu < q; ++mu)
    for (std::uint32_t t = 0; t < q; ++t)
      maps.push_back(AffineMap{q, mu, t});
  std::set<Permutation> perms;
  for (const auto& f : maps)
    perms.insert(f.permutation());
  if (perms.size() != maps.size())
    throw Error(ErrorCode::Internal, "affine maps are not distinct");
  for (const auto& f : maps)
    for (const auto& g : maps)
      if (!perms.count(product(f.permutation(), g.permutation())))
        throw Error(ErrorCode::Internal, "affine maps are not closed under composition");
  return maps;
}

bool PartitionOrder::operator()(const CycleType& a, const CycleType& b) const
{
  return partition_of(a) < partition_of(b);
}

CycleIndex cycle_index_formula(std::size_t p)
{
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const auto q = static_cast<std::uint32_t>(p);
  const Rational scale(1, BigInt(p) * (p - 1));
  CycleIndex index;
  index.degree = p;
  index.terms[CycleType{{1, q}}] += scale;
  for (std::uint32_t d = 2; d <= q - 1; ++d)
    if ((q - 1) % d == 0)
      index.terms[CycleType{{1, 1}, {d, (q - 1) / d}}] += scale * p * euler_phi(d);
  index.terms[CycleType{{q, 1}}] += scale * (p - 1);
  return index;
}

CycleIndex cycle_index_bruteforce(const std::vector<Permutation>& perms)
{
  if (perms.empty())
    throw Error(ErrorCode::InvalidArgument, "cycle index of an empty set");
  const auto m = perms.front().size();
  std::set<Permutation> members;
  for (const auto& s : perms) {
    if (s.size() != m || !is_bijection(s))
      throw Error(ErrorCode::InvalidArgument, "permutations of differing degree");
    members.insert(s);
  }
  for (const auto& a : members)
    for (const auto& b : members)
      if (!members.count(product(a, b)))
        throw Error(ErrorCode::InvalidArgument, "permutation set is not closed");
  CycleIndex index;
  index.degree = m;
  const Rational weight(1, members.size());
  for (const auto& s : members)
    index.terms[cycle_type(s)] += weight;
  return index;
}

Rational evaluate_cycle_index(const CycleIndex& index, const Rational& value)
{
  Rational total = 0;
  for (const auto& [type, coeff] : index.terms) {
    Rational term = coeff;
    for (auto [len, count] : type)
      for (std::uint32_t i = 0; i < count; ++i)
        term *= value;
    total += term;
  }
  return total;
}

Rational coefficient_sum(const CycleIndex& index)
{
  Rational total = 0;
  for (const auto& [type, coeff] : index.terms)
    total += coeff;
  return total;
}

std::uint64_t itp_count_formula(std::size_t p)
{
  if (p == 2 || !is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
  Rational half = evaluate_cycle_index(cycle_index_formula(p), 2) / 2;
  if (denominator(half) != 1)
    throw Error(ErrorCode::Internal, "P(2,...,2) is not an even integer");
  return numerator(half).convert_to<std::uint64_t>();
}

std::uint64_t subset_orbit_count(std::size_t p, OrbitMethod method)
{
  const std::size_t limit = method == OrbitMethod::CycleUnion ? 23 : 13;
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > limit)
    throw Error(ErrorCode::OrderTooLarge, "orbit count limited to p <= " + std::to_string(limit));
  const auto q = static_cast<std::uint32_t>(p);
  std::uint64_t fixed_total = 0, maps = 0;
  for (std::uint32_t mu = 1; mu < q; ++mu)
    for (std::uint32_t t = 0; t < q; ++t) {
      AffineMap f{q, mu, t};
      ++maps;
      if (method == OrbitMethod::CycleUnion) {
        fixed_total += std::uint64_t{1} << cycle_count(f.permutation());
        continue;
      }
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << p); ++s) {
        std::uint64_t image = 0;
        for (std::uint32_t x = 0; x < q; ++x)
          if (s >> x & 1)
            image |= std::uint64_t{1} << f.apply(x);
        fixed_total += image == s;
      }
    }
  if (fixed_total % maps != 0)
    throw Error(ErrorCode::Internal, "Burnside average is not integral");
  return fixed_total / maps;
}

std::string cycle_index_text(const CycleIndex& index)
{
  BigInt lcd = 1;
  for (const auto& [type, coeff] : index.terms)
    lcd = boost::multiprecision::lcm(lcd, denominator(coeff));
  std::string body;
  for (const auto& [type, coeff] : index.terms) {
    Rational scaled = coeff * lcd;
    if (!body.empty())
      body += " + ";
    std::string mono;
    for (auto it = type.begin(); it != type.end(); ++it) {
      if (!mono.empty())
        mono += ' ';
      mono += "x" + std::to_string(it->first);
      if (it->second > 1)
        mono += "^" + std::to_string(it->second);
    }
    if (scaled != 1)
      body += scaled.str() + " ";
    body += mono;
  }
  return "(1/" + lcd.str() + ")(" + body + ")";
}

} // namespace nrt
