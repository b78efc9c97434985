#ifndef NRT_REPORT_HPP
#define NRT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "nrt/affine_burnside.hpp"
#include "nrt/isotopy.hpp"
#include "nrt/transversal.hpp"
#include "nrt/zn_b.hpp"

namespace nrt {

enum class Format { Table, Json, Csv };

std::string group_kind_name(GroupKind kind);

/// Tables above this order are left out of text and JSON group output.
inline constexpr std::size_t kRenderTableLimit = 64;

std::string render_group(const FiniteGroup& g, Format format);
std::string render_subgroup(const Subgroup& h, Format format);
std::string render_transversals(const std::vector<Transversal>& ts, Format format);
std::string render_loop(const RightLoop& loop, Format format);

/// Right loops with display labels and their partition.
struct ClassifiedSet {
  std::vector<RightLoop> loops;
  std::vector<std::string> labels;
  ClassPartition partition;
};

/**
 * JSON: {relation, items, class_count, classes: [{id, size, is_loop,
 * n_left_nonsingular, representative, representative_table, members}]},
 * members as item ids. CSV: class_id,size,is_loop,n_left_nonsingular.
 */
std::string render_partition(const ClassifiedSet& set, Format format);

std::string render_census(const LoopCensus& census, Format format);
/// JSON: {n, families: [{size, members: [[...], ...]}]}.
std::string render_families(std::size_t p, const std::vector<std::vector<SubsetB>>& families,
                            Format format);

/// JSON: {p, terms: [{type: [[len, count], ...], num, den}]}.
std::string render_cycle_index(std::size_t p, const CycleIndex& index, Format format);

nlohmann::ordered_json subset_json(const SubsetB& b);

} // namespace nrt

#endif // NRT_REPORT_HPP
