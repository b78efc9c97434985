#ifndef NRT_PERMUTATION_HPP
#define NRT_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace nrt {

using Element = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image array.
using Permutation = std::vector<Element>;

/// Sorted (cycle length, multiplicity) pairs, ascending by length.
using CycleType = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Permutation identity_permutation(std::size_t degree);

/// Composition f∘g: apply g first, then f.
Permutation product(const Permutation& f, const Permutation& g);

Permutation inverse(const Permutation& f);

bool is_identity(const Permutation& f);

/// True iff `images` hits every value of 0..size-1 exactly once.
bool is_bijection(std::span<const Element> images);

CycleType cycle_type(const Permutation& f);

std::size_t cycle_count(const Permutation& f);

} // namespace nrt

#endif // NRT_PERMUTATION_HPP
