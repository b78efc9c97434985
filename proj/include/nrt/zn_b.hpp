#ifndef NRT_ZN_B_HPP
#define NRT_ZN_B_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nrt/right_loop.hpp"
#include "nrt/transversal.hpp"

namespace nrt {

/// Largest modulus a SubsetB bitmask can hold.
inline constexpr std::size_t kMaxModulus = 63;

/// A subset B of Z_n \ {0}, stored as a bitmask (bit i <=> i ∈ B).
class SubsetB {
public:
  /// Throws Error(InvalidArgument) if n is out of range, a member is >= n,
  /// or 0 is a member.
  static SubsetB from_members(std::size_t n, const std::vector<std::uint32_t>& members);
  static SubsetB from_mask(std::size_t n, std::uint64_t mask);
  /// "1,3,5"; an empty string, "{}" or "∅" gives the empty set.
  static SubsetB parse(std::size_t n, std::string_view text);

  std::size_t modulus() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(std::uint32_t i) const noexcept { return i < n_ && (mask_ >> i & 1); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  std::vector<std::uint32_t> members() const;
  /// Z_n \ B as a mask; always contains 0.
  std::uint64_t complement_mask() const noexcept;
  /// "{1,3,5}", "{}" when empty.
  std::string text() const;

  /// Size first, then members lexicographically.
  friend std::strong_ordering operator<=>(const SubsetB& a, const SubsetB& b);
  friend bool operator==(const SubsetB& a, const SubsetB& b) noexcept
  { return a.n_ == b.n_ && a.mask_ == b.mask_; }

private:
  SubsetB(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
  std::size_t n_;
  std::uint64_t mask_;
};

/// x∘y = x+y if y ∉ B, y−x if y ∈ B (mod n).
RightLoop znb_right_loop(const SubsetB& b);

/// Right cosets of H = {1, x} in dihedral:n; coset i is {y^i, xy^i}.
CosetsPtr dihedral_reflection_cosets(std::size_t n);

/// T_B: rep xy^i for i ∈ B, y^i otherwise. Needs n >= 2.
Transversal transversal_from_subset(const SubsetB& b);
Transversal transversal_from_subset(const CosetsPtr& cosets, const SubsetB& b);

/// Left non-singular residues from the coset criterion alone: i != 0
/// qualifies iff B and its complement are unions of cosets of <i> (n odd)
/// or of <2i> (n even).
std::vector<std::uint32_t> criterion_left_nonsingular(const SubsetB& b);

struct LoopCensus {
  std::size_t n = 0;
  /// Subsets B whose Z_n^B is a loop, in SubsetB order.
  std::vector<SubsetB> witnesses;
};

/// Scans all 2^(n-1) subsets. Throws Error(EnumerationTooLarge) above cap.
LoopCensus loop_transversal_census(std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);

/**
 * The family X_B for a prime p: over all maps f(x) = mu*x + u,
 * C = f^{-1}(B) when u ∉ B and its complement in Z_p when u ∈ B.
 * X_{} = {{}}. Sorted, duplicates removed. Throws Error(NotPrime).
 */
std::vector<SubsetB> xb_family(std::size_t p, const SubsetB& b);

/// All distinct families X_B, ordered by their least member.
std::vector<std::vector<SubsetB>> xb_partition(std::size_t p);

} // namespace nrt

#endif // NRT_ZN_B_HPP
