#ifndef NRT_ISOTOPY_HPP
#define NRT_ISOTOPY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nrt/permutation.hpp"
#include "nrt/right_loop.hpp"

namespace nrt {

/// Bijections with alpha(x) ∘' beta(y) = gamma(x ∘ y) for all x, y.
struct IsotopyWitness {
  Permutation alpha;
  Permutation beta;
  Permutation gamma;

  friend bool operator==(const IsotopyWitness&, const IsotopyWitness&) = default;
  friend auto operator<=>(const IsotopyWitness&, const IsotopyWitness&) = default;
};

/// Table-level check of the isotopy identity; tables need not be valid
/// right loops.
bool satisfies_isotopy(std::size_t order, std::span<const Element> from,
                       std::span<const Element> to, const IsotopyWitness& w);
bool satisfies_isomorphism(std::size_t order, std::span<const Element> from,
                           std::span<const Element> to, const Permutation& f);

bool verify_isotopy(const RightLoop& from, const RightLoop& to, const IsotopyWitness& w);
bool verify_isomorphism(const RightLoop& from, const RightLoop& to, const Permutation& f);

/// Some f with f(x∘y) = f(x)∘'f(y), or nullopt. f(0) = 0 always.
std::optional<Permutation> are_isomorphic(const RightLoop& a, const RightLoop& b);

/// Every isomorphism a → b (all automorphisms when a == b).
std::vector<Permutation> all_isomorphisms(const RightLoop& a, const RightLoop& b);

struct PrincipalIsotope {
  /// x ∘' y = R_b^{-1}(x) ∘ L_a^{-1}(y), relabeled so a∘b sits at index 0.
  RightLoop loop;
  /// Transposition swapping 0 and a∘b: loop index = relabel[unrelabeled index].
  Permutation relabel;
  Element a = 0;
  Element b = 0;
};

/// Throws Error(NotLeftNonsingular) if a is not left non-singular.
PrincipalIsotope principal_isotope(const RightLoop& loop, Element a, Element b);

/// A verified witness (alpha, beta, gamma) from `a` to `b`, or nullopt.
std::optional<IsotopyWitness> are_isotopic(const RightLoop& a, const RightLoop& b);

inline constexpr std::size_t kOracleMaxOrder = 7;

/**
 * Independent exhaustive check, kept apart from the principal-isotope
 * route. Runs over every alpha and every value of beta(0); gamma is then
 * forced by y = 0 and beta by the x with alpha(x) = 0, and the candidate is
 * tested on all pairs. Throws Error(OrderTooLarge) above kOracleMaxOrder.
 */
bool brute_force_isotopy_oracle(const RightLoop& a, const RightLoop& b);

enum class Relation { Isomorphism, Isotopy };

const char* relation_name(Relation r) noexcept;

struct ClassPartition {
  Relation relation = Relation::Isotopy;
  /// Member item indices per class, each sorted; classes ordered by their
  /// smallest member.
  std::vector<std::vector<std::size_t>> classes;
  /// Per class: the member whose table is lexicographically least.
  std::vector<std::size_t> representatives;
  /// class_of[item] = class position.
  std::vector<std::size_t> class_of;
};

struct ClassifyOptions {
  unsigned jobs = 1;
};

/// Partition by the chosen relation. Items are pre-bucketed on invariants
/// of the relation, then merged by pairwise tests through a union-find.
ClassPartition classify(std::span<const RightLoop> items, Relation relation,
                        ClassifyOptions options = {});

inline constexpr std::size_t kAutotopyMaxOrder = 8;

struct AutotopyGroup {
  /// U(S), sorted.
  std::vector<IsotopyWitness> autotopies;
  std::size_t u_size = 0;
  std::size_t a1_size = 0;  ///< alpha(0) = 0
  std::size_t a2_size = 0;  ///< beta(0) = 0
  std::size_t aut_size = 0; ///< alpha = beta = gamma
};

/// All autotopies, built from isomorphisms onto principal isotopes.
/// Throws Error(OrderTooLarge) above kAutotopyMaxOrder.
AutotopyGroup autotopy_group(const RightLoop& loop);

bool is_autotopy(const RightLoop& loop, const IsotopyWitness& w);

IsotopyWitness compose(const IsotopyWitness& outer, const IsotopyWitness& inner);
IsotopyWitness inverse(const IsotopyWitness& w);

enum class Side { Right, Left };

/**
 * Right: eta(x∘y)∘c = eta(x)∘(eta(y)∘c).
 * Left:  c∘eta(x∘y) = (c∘eta(x))∘eta(y); needs c left non-singular,
 * otherwise throws Error(NotLeftNonsingular).
 */
bool pseudo_automorphism_check(const RightLoop& loop, const Permutation& eta, Element c,
                               Side side);

/// (eta, R_c eta, R_c eta) for Right, (L_c eta, eta, L_c eta) for Left.
IsotopyWitness pseudo_automorphism_autotopy(const RightLoop& loop, const Permutation& eta,
                                            Element c, Side side);

/// Aut(L) acts transitively on the non-identity elements.
bool has_transitive_automorphism_group(const RightLoop& loop);

} // namespace nrt

#endif // NRT_ISOTOPY_HPP
