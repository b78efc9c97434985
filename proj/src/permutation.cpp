#include "nrt/permutation.hpp"

#include <map>
#include <numeric>

#include "nrt/error.hpp"

namespace nrt {

const char* error_code_name(ErrorCode code) noexcept
{
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::Parse: return "Parse";
  case ErrorCode::NotSubgroup: return "NotSubgroup";
  case ErrorCode::NotNormal: return "NotNormal";
  case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
  case ErrorCode::NotIdentity: return "NotIdentity";
  case ErrorCode::ColumnNotBijective: return "ColumnNotBijective";
  case ErrorCode::NotLeftNonsingular: return "NotLeftNonsingular";
  case ErrorCode::OrderTooLarge: return "OrderTooLarge";
  case ErrorCode::NotPrime: return "NotPrime";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Permutation identity_permutation(std::size_t degree)
{
  Permutation p(degree);
  std::iota(p.begin(), p.end(), Element{0});
  return p;
}

Permutation product(const Permutation& f, const Permutation& g)
{
  if (f.size() != g.size())
    throw Error(ErrorCode::InvalidArgument, "permutation degrees differ");
  Permutation r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    r[i] = f[g[i]];
  return r;
}

Permutation inverse(const Permutation& f)
{
  Permutation r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    r[f[i]] = static_cast<Element>(i);
  return r;
}

bool is_identity(const Permutation& f)
{
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != i)
      return false;
  return true;
}

bool is_bijection(std::span<const Element> images)
{
  std::vector<char> seen(images.size(), 0);
  for (Element v : images) {
    if (v >= images.size() || seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

CycleType cycle_type(const Permutation& f)
{
  std::map<std::uint32_t, std::uint32_t> counts;
  std::vector<char> done(f.size(), 0);
  for (std::size_t start = 0; start < f.size(); ++start) {
    if (done[start])
      continue;
    std::uint32_t len = 0;
    for (std::size_t i = start; !done[i]; i = f[i]) {
      done[i] = 1;
      ++len;
    }
    ++counts[len];
  }
  return CycleType(counts.begin(), counts.end());
}

std::size_t cycle_count(const Permutation& f)
{
  std::size_t total = 0;
  for (auto [len, count] : cycle_type(f))
    total += count;
  return total;
}

} // namespace nrt
