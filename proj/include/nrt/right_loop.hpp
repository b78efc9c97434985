#ifndef NRT_RIGHT_LOOP_HPP
#define NRT_RIGHT_LOOP_HPP

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "nrt/finite_group.hpp"
#include "nrt/permutation.hpp"

namespace nrt {

/**
 * A right loop stored as its operation table, table[x*n+y] = x∘y.
 *
 * Index 0 is a two-sided identity and every right translation
 * R_y: x ↦ x∘y (a column of the table) is a bijection. Left translations
 * L_a: y ↦ a∘y (rows) need not be.
 */
class RightLoop {
public:
  /// Validates and wraps a table; see validate_right_loop.
  static RightLoop from_table(std::size_t order, std::vector<Element> table,
                              std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }

  Element op(Element x, Element y) const
  { return table_[static_cast<std::size_t>(x) * order_ + y]; }

  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> row(Element x) const
  { return std::span<const Element>(table_).subspan(x * order_, order_); }

  /// Display names, one per element; defaults to decimal indices.
  const std::vector<std::string>& names() const noexcept { return names_; }

  Permutation right_translation(Element y) const;
  /// Row map y ↦ a∘y. Not a permutation unless a is left non-singular.
  std::vector<Element> left_translation(Element a) const;

  friend bool operator==(const RightLoop& a, const RightLoop& b)
  { return a.order_ == b.order_ && a.table_ == b.table_; }

private:
  friend RightLoop validate_right_loop(std::size_t, std::vector<Element>,
                                       std::vector<std::string>);
  RightLoop() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> names_;
};

/// Throws Error(NotIdentity) or Error(ColumnNotBijective); both name the
/// offending index as witness.
RightLoop validate_right_loop(std::size_t order, std::vector<Element> table,
                              std::vector<std::string> names = {});

/// The multiplication table of a group, viewed as a right loop.
RightLoop loop_from_group(const FiniteGroup& g);

/// Elements a whose row map is a bijection; always contains 0.
std::vector<Element> left_nonsingular_elements(const RightLoop& loop);

struct StructureFlags {
  bool is_loop = false;
  bool is_group = false;
};

StructureFlags structure_flags(const RightLoop& loop);

bool is_associative(const RightLoop& loop);

/// Permutation group on {0..degree-1}, closed by work-queue fixpoint.
class PermutationGroup {
public:
  static PermutationGroup generate(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  /// Sorted; the identity is first.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool contains(const Permutation& p) const;

  /// Cayley table of the group (a·b = a∘b, apply b first).
  GroupPtr as_finite_group() const;

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

struct Torsion {
  /// G_S, generated by R_{x∘y}^{-1} R_y R_x over all x, y.
  PermutationGroup torsion;
  /// G_S S = <G_S ∪ {R_s}>.
  PermutationGroup envelope;
};

/**
 * The group torsion of a right loop.
 *
 * For a transversal S, χ_S is a right action: χ_S(g1 g2) applies χ_S(g1)
 * first. Since χ_S(x) = R_x on S, the torsion element coming from
 * x y (x∘y)^{-1} is the permutation that applies R_x, then R_y, then
 * R_{x∘y}^{-1}.
 */
Torsion group_torsion(const RightLoop& loop);

/// Text matrix format shared with Cayley tables, validated as a right loop.
RightLoop parse_right_loop(std::istream& in);

} // namespace nrt

#endif // NRT_RIGHT_LOOP_HPP
