#include "nrt/zn_b.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "nrt/affine_burnside.hpp"
#include "nrt/error.hpp"

namespace nrt {

namespace {

std::uint64_t full_mask(std::size_t n)
{
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_modulus(std::size_t n)
{
  if (n == 0 || n > kMaxModulus)
    throw Error(ErrorCode::InvalidArgument,
                "modulus must lie in 1.." + std::to_string(kMaxModulus));
}

/// mask is closed under adding d (mod n).
bool union_of_cosets(std::uint64_t mask, std::size_t n, std::size_t d)
{
  for (std::size_t b = 0; b < n; ++b)
    if ((mask >> b & 1) && !(mask >> ((b + d) % n) & 1))
      return false;
  return true;
}

} // namespace

SubsetB SubsetB::from_members(std::size_t n, const std::vector<std::uint32_t>& members)
{
  check_modulus(n);
  std::uint64_t mask = 0;
  for (auto m : members) {
    if (m >= n)
      throw Error(ErrorCode::InvalidArgument,
                  "subset member " + std::to_string(m) + " is not below " + std::to_string(n), m);
    mask |= std::uint64_t{1} << m;
  }
  return from_mask(n, mask);
}

SubsetB SubsetB::from_mask(std::size_t n, std::uint64_t mask)
{
  check_modulus(n);
  if (mask & 1)
    throw Error(ErrorCode::InvalidArgument, "0 cannot belong to B", 0);
  if (mask & ~full_mask(n))
    throw Error(ErrorCode::InvalidArgument, "subset has members outside Z_n");
  return SubsetB(n, mask);
}

SubsetB SubsetB::parse(std::size_t n, std::string_view text)
{
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '{' && c != '}')
      s += c;
  if (s == "∅")
    s.clear();
  std::vector<std::uint32_t> members;
  std::size_t start = 0;
  while (start < s.size()) {
    auto end = s.find(',', start);
    if (end == std::string::npos)
      end = s.size();
    auto tok = s.substr(start, end - start);
    if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::Parse, "bad subset member '" + tok + "'");
    members.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    start = end + 1;
  }
  return from_members(n, members);
}

std::size_t SubsetB::size() const noexcept
{
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::uint32_t> SubsetB::members() const
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 1; i < n_; ++i)
    if (mask_ >> i & 1)
      out.push_back(i);
  return out;
}

std::uint64_t SubsetB::complement_mask() const noexcept
{
  return full_mask(n_) & ~mask_;
}

std::string SubsetB::text() const
{
  std::string out = "{";
  for (auto m : members()) {
    if (out.size() > 1)
      out += ',';
    out += std::to_string(m);
  }
  return out + "}";
}

std::strong_ordering operator<=>(const SubsetB& a, const SubsetB& b)
{
  if (auto c = a.n_ <=> b.n_; c != 0)
    return c;
  if (auto c = a.size() <=> b.size(); c != 0)
    return c;
  auto ma = a.members(), mb = b.members();
  return ma <=> mb;
}

RightLoop znb_right_loop(const SubsetB& b)
{
  const auto n = b.modulus();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = static_cast<Element>(b.contains(static_cast<std::uint32_t>(y))
                                                ? (y + n - x) % n
                                                : (x + y) % n);
  return validate_right_loop(n, std::move(table));
}

CosetsPtr dihedral_reflection_cosets(std::size_t n)
{
  auto g = dihedral_group(n);
  // Index n is x in the canonical dihedral order.
  std::vector<Element> gens{static_cast<Element>(n)};
  return make_cosets(generated_subgroup(g, gens));
}

Transversal transversal_from_subset(const CosetsPtr& cosets, const SubsetB& b)
{
  const auto n = b.modulus();
  const auto& g = cosets->subgroup.parent();
  if (g.kind() != GroupKind::Dihedral || g.parameter() != n || cosets->subgroup.order() != 2 ||
      !cosets->subgroup.contains(static_cast<Element>(n)))
    throw Error(ErrorCode::InvalidArgument, "cosets are not those of {1,x} in dihedral:" +
                                              std::to_string(n));
  std::vector<Element> reps(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Element r = b.contains(i) ? static_cast<Element>(n + i) : i;
    reps[cosets->coset_of[r]] = r;
  }
  return Transversal(cosets, std::move(reps));
}

Transversal transversal_from_subset(const SubsetB& b)
{
  if (b.modulus() < 2)
    throw Error(ErrorCode::InvalidArgument, "dihedral transversals need n >= 2");
  return transversal_from_subset(dihedral_reflection_cosets(b.modulus()), b);
}

std::vector<std::uint32_t> criterion_left_nonsingular(const SubsetB& b)
{
  const auto n = b.modulus();
  std::vector<std::uint32_t> out{0};
  for (std::uint32_t i = 1; i < n; ++i) {
    std::size_t step = n % 2 == 1 ? i : (2 * i) % n;
    // <step> in Z_n is generated by gcd(step, n); <0> = {0} gives d = n.
    std::size_t d = std::gcd(step, n);
    if (union_of_cosets(b.mask(), n, d) && union_of_cosets(b.complement_mask(), n, d))
      out.push_back(i);
  }
  return out;
}

LoopCensus loop_transversal_census(std::size_t n, std::uint64_t cap)
{
  check_modulus(n);
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "census needs n >= 2");
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  if (n - 1 >= 63 || count > cap)
    throw Error(ErrorCode::EnumerationTooLarge, "2^" + std::to_string(n - 1) +
                                                  " subsets exceed the enumeration cap " +
                                                  std::to_string(cap));
  LoopCensus census;
  census.n = n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    auto b = SubsetB::from_mask(n, bits << 1);
    auto loop = znb_right_loop(b);
    if (left_nonsingular_elements(loop).size() == n)
      census.witnesses.push_back(b);
  }
  std::sort(census.witnesses.begin(), census.witnesses.end());
  return census;
}

std::vector<SubsetB> xb_family(std::size_t p, const SubsetB& b)
{
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (b.modulus() != p)
    throw Error(ErrorCode::InvalidArgument, "subset modulus differs from p");
  if (b.empty())
    return {b};
  std::set<SubsetB> family;
  for (std::size_t mu = 1; mu < p; ++mu)
    for (std::size_t u = 0; u < p; ++u) {
      std::uint64_t pre = 0;
      for (std::size_t x = 0; x < p; ++x)
        if (b.contains(static_cast<std::uint32_t>((mu * x + u) % p)))
          pre |= std::uint64_t{1} << x;
      std::uint64_t c = b.contains(static_cast<std::uint32_t>(u)) ? full_mask(p) & ~pre : pre;
      family.insert(SubsetB::from_mask(p, c));
    }
  return {family.begin(), family.end()};
}

std::vector<std::vector<SubsetB>> xb_partition(std::size_t p)
{
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p - 1 >= 31)
    throw Error(ErrorCode::EnumerationTooLarge, "too many subsets to partition");
  std::vector<SubsetB> all;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (p - 1)); ++bits)
    all.push_back(SubsetB::from_mask(p, bits << 1));
  std::sort(all.begin(), all.end());
  std::set<SubsetB> placed;
  std::vector<std::vector<SubsetB>> out;
  for (const auto& b : all) {
    if (placed.count(b))
      continue;
    auto fam = xb_family(p, b);
    placed.insert(fam.begin(), fam.end());
    out.push_back(std::move(fam));
  }
  return out;
}

} // namespace nrt
