#ifndef NRT_FINITE_GROUP_HPP
#define NRT_FINITE_GROUP_HPP

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nrt/permutation.hpp"

namespace nrt {

enum class GroupKind { Cyclic, Dihedral, Symmetric, Alternating, Table, Quotient };

/**
 * A finite group given by its multiplication. Elements are the indices
 * 0..order-1 and index 0 is always the identity.
 *
 * Small groups keep a dense Cayley table. Permutation groups above
 * kDenseLimit elements multiply through their permutation realization
 * instead, which keeps sym:8 (40320 elements) usable without a 6 GB table.
 * Values are immutable after construction.
 */
class FiniteGroup {
public:
  static constexpr std::size_t kDenseLimit = 1024;

  /// Builds from a row-major Cayley table (table[a*n+b] = a·b). Relabels so
  /// the identity sits at index 0, then runs validate(). Names are optional.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::vector<std::string> names = {},
                                GroupKind kind = GroupKind::Table,
                                std::size_t parameter = 0);

  /// Builds from a list of permutations closed under composition, with the
  /// identity first. Multiplication is a·b = a∘b (apply b first).
  static FiniteGroup from_permutations(std::vector<Permutation> elements,
                                       std::vector<std::string> names,
                                       GroupKind kind, std::size_t parameter);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const
  {
    if (!table_.empty())
      return table_[static_cast<std::size_t>(a) * order_ + b];
    return mul_by_permutation(a, b);
  }

  Element inv(Element a) const { return inverse_[a]; }

  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find_name(std::string_view text) const;

  GroupKind kind() const noexcept { return kind_; }

  /// n for cyclic/dihedral, k for sym/alt, 0 otherwise.
  std::size_t parameter() const noexcept { return parameter_; }

  /// Degree of the permutation realization (0 when there is none).
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& permutation(Element a) const { return perms_[a]; }
  std::optional<Element> find_permutation(const Permutation& p) const;

  /// Row-major Cayley table; materialized on demand for large groups.
  std::vector<Element> table() const;

  /// Latin square, identity, associativity and inverse checks over all
  /// index triples. Throws Error(InvalidArgument) with a witness.
  void validate() const;

private:
  FiniteGroup() = default;
  Element mul_by_permutation(Element a, Element b) const;
  void compute_inverses();

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  GroupKind kind_ = GroupKind::Table;
  std::size_t parameter_ = 0;

  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::unordered_map<std::uint64_t, Element> perm_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A verified subgroup: members sorted, closed under the parent's product.
class Subgroup {
public:
  /// Throws Error(NotSubgroup) when members are not a subgroup of g.
  Subgroup(GroupPtr g, std::vector<Element> members);

  const GroupPtr& group() const noexcept { return group_; }
  const FiniteGroup& parent() const noexcept { return *group_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element a) const { return a < in_.size() && in_[a]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b)
  { return a.group_ == b.group_ && a.members_ == b.members_; }

private:
  friend struct SubgroupAccess;
  struct Unchecked {};
  Subgroup(GroupPtr g, std::vector<Element> members, Unchecked);

  GroupPtr group_;
  std::vector<Element> members_;
  std::vector<char> in_;
};

/// Right cosets Hg. Coset 0 is H; the rest are ordered by smallest member.
struct CosetDecomposition {
  Subgroup subgroup;
  std::vector<std::vector<Element>> cosets;
  std::vector<std::uint32_t> coset_of;

  std::size_t index() const noexcept { return cosets.size(); }
};

struct Quotient {
  GroupPtr group;
  /// projection[g] = index of the coset Ng in the quotient group.
  std::vector<Element> projection;
  Subgroup kernel;
};

// Constructors for the named families.
GroupPtr cyclic_group(std::size_t n);
/// Elements ordered 1, y, ..., y^{n-1}, x, xy, ..., xy^{n-1}; xyx = y^{-1}.
GroupPtr dihedral_group(std::size_t n);
GroupPtr symmetric_group(std::size_t k);
GroupPtr alternating_group(std::size_t k);

/// Parses a descriptor: cyclic:n, dihedral:n, sym:k, alt:k or file:<path>.
GroupPtr build_named_group(std::string_view descriptor);

/// Cayley-table text format: line 1 is n, then n rows of n 0-based indices,
/// then an optional `names: ...` line. Diagnostics carry line and column.
GroupPtr parse_cayley_table(std::istream& in);
GroupPtr load_cayley_table(const std::string& path);

/// Resolves one element written as a name, a cycle (sym/alt), a word in
/// x and y (dihedral) or a bare index (table groups).
Element parse_element(const FiniteGroup& g, std::string_view text);

/// Splits a `;`-separated generator list and resolves each entry.
std::vector<Element> parse_generators(const FiniteGroup& g, std::string_view text);

/// Renders a permutation of {0..k-1} in 1-based cycle notation, "I" for
/// the identity.
std::string cycle_notation(const Permutation& p);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup generated_subgroup(const GroupPtr& g, std::span<const Element> gens);
CosetDecomposition right_cosets(const Subgroup& h);
Subgroup core(const Subgroup& h);
bool is_normal(const Subgroup& h);

/// Throws Error(NotNormal) unless n is normal.
Quotient quotient(const Subgroup& n);

Subgroup center(const GroupPtr& g);
Subgroup commutator_subgroup(const Subgroup& h);
/// Ascending central series reaches G.
bool is_nilpotent(const GroupPtr& g);
/// Derived series reaches the trivial group.
bool is_solvable(const GroupPtr& g);

std::uint64_t element_order(const FiniteGroup& g, Element a);

} // namespace nrt

#endif // NRT_FINITE_GROUP_HPP
