#ifndef NRT_TRANSVERSAL_HPP
#define NRT_TRANSVERSAL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nrt/finite_group.hpp"
#include "nrt/right_loop.hpp"

namespace nrt {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

using CosetsPtr = std::shared_ptr<const CosetDecomposition>;

/// A normalized right transversal: reps[i] lies in coset i, reps[0] = 0.
class Transversal {
public:
  /// Throws Error(InvalidArgument) if reps violate the transversal invariants.
  Transversal(CosetsPtr cosets, std::vector<Element> reps);

  const CosetsPtr& cosets() const noexcept { return cosets_; }
  const Subgroup& subgroup() const noexcept { return cosets_->subgroup; }
  const FiniteGroup& group() const noexcept { return cosets_->subgroup.parent(); }
  const std::vector<Element>& reps() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }

  friend bool operator==(const Transversal& a, const Transversal& b)
  { return a.reps_ == b.reps_ && a.cosets_ == b.cosets_; }
  friend bool operator<(const Transversal& a, const Transversal& b)
  { return a.reps_ < b.reps_; }

private:
  CosetsPtr cosets_;
  std::vector<Element> reps_;
};

CosetsPtr make_cosets(const Subgroup& h);

/// |H|^([G:H]-1), or nullopt when that overflows 64 bits.
std::optional<std::uint64_t> transversal_count(const CosetDecomposition& cosets);

/**
 * Calls `visit` for every transversal in lexicographic order of the rep
 * choices (coset 1 most significant, members in increasing index).
 * Throws Error(EnumerationTooLarge) before visiting anything when the count
 * exceeds `cap`.
 */
void for_each_transversal(const CosetsPtr& cosets, std::uint64_t cap,
                          const std::function<void(const Transversal&)>& visit);

std::vector<Transversal> enumerate_transversals(const Subgroup& h,
                                                std::uint64_t cap = kDefaultEnumerationCap);

/// table[i][j] = the position k with reps[k] ∈ H·reps[i]·reps[j].
RightLoop induced_right_loop(const Transversal& t);

/// i ↦ position of the rep in H·reps[i]·g. A right action of G.
Permutation chi_action(const Transversal& t, Element g);

struct ProjectedTransversal {
  Transversal transversal;
  /// position_map[i] = position in the projected transversal of the image
  /// of reps[i]; an isomorphism of the induced right loops.
  Permutation position_map;
};

/// Image of t under G → G/N. Needs N normal in G and contained in H, with
/// q = quotient(N).
ProjectedTransversal project_transversal(const Transversal& t, const Subgroup& n,
                                         const Quotient& q);

/// Comma-separated rep names, e.g. "I,(1,2,3),(1,3,2)".
std::string transversal_text(const Transversal& t);

/// Parses transversal_text output (commas inside parentheses are kept).
Transversal parse_transversal(const CosetsPtr& cosets, std::string_view text);

} // namespace nrt

#endif // NRT_TRANSVERSAL_HPP
