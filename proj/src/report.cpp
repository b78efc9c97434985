#include "nrt/report.hpp"

#include <algorithm>
#include <sstream>

namespace nrt {

using json = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dump(const json& j)
{
  return j.dump(2) + "\n";
}

std::string matrix_text(std::size_t n, const std::vector<std::string>& cells)
{
  std::size_t width = 1;
  for (const auto& c : cells)
    width = std::max(width, c.size());
  std::string out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto& s = cells[r * n + c];
      out += std::string(width - s.size() + (c ? 1 : 0), ' ') + s;
    }
    out += '\n';
  }
  return out;
}

json rows_json(std::size_t n, std::span<const Element> table)
{
  json rows = json::array();
  for (std::size_t r = 0; r < n; ++r)
    rows.push_back(std::vector<Element>(table.begin() + r * n, table.begin() + (r + 1) * n));
  return rows;
}

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? sep : "") + items[i];
  return out;
}

std::vector<std::string> member_names(const Subgroup& h)
{
  std::vector<std::string> out;
  for (Element m : h.members())
    out.push_back(h.parent().name(m));
  return out;
}

} // namespace

std::string group_kind_name(GroupKind kind)
{
  switch (kind) {
  case GroupKind::Cyclic:
    return "cyclic";
  case GroupKind::Dihedral:
    return "dihedral";
  case GroupKind::Symmetric:
    return "symmetric";
  case GroupKind::Alternating:
    return "alternating";
  case GroupKind::Table:
    return "table";
  case GroupKind::Quotient:
    return "quotient";
  }
  return "unknown";
}

std::string render_group(const FiniteGroup& g, Format format)
{
  const auto n = g.order();
  switch (format) {
  case Format::Json: {
    json j{{"order", n}, {"kind", group_kind_name(g.kind())}, {"names", g.names()}};
    if (n <= kRenderTableLimit)
      j["table"] = rows_json(n, g.table());
    return dump(j);
  }
  case Format::Csv: {
    std::string out = "index,name,order\n";
    for (Element a = 0; a < n; ++a)
      out += std::to_string(a) + "," + csv_field(g.name(a)) + "," +
             std::to_string(element_order(g, a)) + "\n";
    return out;
  }
  case Format::Table:
    break;
  }
  std::string out = "order " + std::to_string(n) + ", " + group_kind_name(g.kind()) + "\n";
  out += "elements: " + join(g.names(), " ") + "\n";
  if (n <= kRenderTableLimit) {
    std::vector<std::string> cells;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        cells.push_back(g.name(g.mul(a, b)));
    out += matrix_text(n, cells);
  } else {
    out += "(table omitted above order " + std::to_string(kRenderTableLimit) + ")\n";
  }
  return out;
}

std::string render_subgroup(const Subgroup& h, Format format)
{
  const auto& g = h.parent();
  auto c = core(h);
  auto cosets = right_cosets(h);
  const bool normal = is_normal(h);
  auto count = transversal_count(cosets);
  std::vector<std::vector<std::string>> coset_names;
  for (const auto& cs : cosets.cosets) {
    coset_names.emplace_back();
    for (Element e : cs)
      coset_names.back().push_back(g.name(e));
  }
  switch (format) {
  case Format::Json: {
    json j{{"order", h.order()},
           {"index", cosets.index()},
           {"members", member_names(h)},
           {"normal", normal},
           {"core", member_names(c)},
           {"cosets", coset_names}};
    j["transversal_count"] = count ? json(*count) : json(nullptr);
    return dump(j);
  }
  case Format::Csv: {
    std::string out = "coset,members\n";
    for (std::size_t i = 0; i < coset_names.size(); ++i)
      out += std::to_string(i) + "," + csv_field(join(coset_names[i], " ")) + "\n";
    return out;
  }
  case Format::Table:
    break;
  }
  std::string out = "subgroup order " + std::to_string(h.order()) + ", index " +
                    std::to_string(cosets.index()) + ", normal " + (normal ? "yes" : "no") + "\n";
  out += "members: " + join(member_names(h), " ") + "\n";
  out += "core: " + join(member_names(c), " ") + "\n";
  out += "transversals: " + (count ? std::to_string(*count) : std::string("> 2^64")) + "\n";
  for (std::size_t i = 0; i < coset_names.size(); ++i)
    out += "coset " + std::to_string(i) + ": " + join(coset_names[i], " ") + "\n";
  return out;
}

std::string render_transversals(const std::vector<Transversal>& ts, Format format)
{
  switch (format) {
  case Format::Json: {
    json list = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::vector<std::string> reps;
      for (Element r : ts[i].reps())
        reps.push_back(ts[i].group().name(r));
      auto flags = structure_flags(induced_right_loop(ts[i]));
      list.push_back(json{{"id", i}, {"reps", reps}, {"is_loop", flags.is_loop}});
    }
    return dump(json{{"count", ts.size()}, {"transversals", list}});
  }
  case Format::Csv: {
    std::string out = "id,reps,is_loop\n";
    for (std::size_t i = 0; i < ts.size(); ++i)
      out += std::to_string(i) + "," + csv_field(transversal_text(ts[i])) + "," +
             (structure_flags(induced_right_loop(ts[i])).is_loop ? "true" : "false") + "\n";
    return out;
  }
  case Format::Table:
    break;
  }
  std::string out = std::to_string(ts.size()) + " transversals\n";
  for (std::size_t i = 0; i < ts.size(); ++i)
    out += std::to_string(i) + ": " + transversal_text(ts[i]) +
           (structure_flags(induced_right_loop(ts[i])).is_loop ? "  [loop]" : "") + "\n";
  return out;
}

std::string render_loop(const RightLoop& loop, Format format)
{
  const auto n = loop.order();
  auto flags = structure_flags(loop);
  auto lns = left_nonsingular_elements(loop);
  switch (format) {
  case Format::Json:
    return dump(json{{"order", n},
                     {"table", rows_json(n, loop.table())},
                     {"names", loop.names()},
                     {"flags", json{{"is_loop", flags.is_loop}, {"is_group", flags.is_group}}},
                     {"left_nonsingular", lns}});
  case Format::Csv: {
    std::string out = "x,y,product\n";
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        out += std::to_string(x) + "," + std::to_string(y) + "," +
               std::to_string(loop.op(x, y)) + "\n";
    return out;
  }
  case Format::Table:
    break;
  }
  // The matrix format read back by parse_right_loop.
  std::string out = std::to_string(n) + "\n";
  std::vector<std::string> cells;
  for (Element v : loop.table())
    cells.push_back(std::to_string(v));
  out += matrix_text(n, cells);
  out += "names: " + join(loop.names(), " ") + "\n";
  return out;
}

std::string render_partition(const ClassifiedSet& set, Format format)
{
  const auto& part = set.partition;
  struct Row {
    std::size_t size;
    bool is_loop;
    std::size_t lns;
  };
  std::vector<Row> rows;
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    const auto& rep = set.loops[part.representatives[c]];
    rows.push_back(Row{part.classes[c].size(), structure_flags(rep).is_loop,
                       left_nonsingular_elements(rep).size()});
  }
  switch (format) {
  case Format::Json: {
    json classes = json::array();
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
      const auto rep = part.representatives[c];
      classes.push_back(json{{"id", c},
                             {"size", rows[c].size},
                             {"is_loop", rows[c].is_loop},
                             {"n_left_nonsingular", rows[c].lns},
                             {"representative", rep},
                             {"representative_label", set.labels[rep]},
                             {"representative_table",
                              rows_json(set.loops[rep].order(), set.loops[rep].table())},
                             {"members", part.classes[c]}});
    }
    json items = json::array();
    for (std::size_t i = 0; i < set.loops.size(); ++i)
      items.push_back(json{{"id", i}, {"label", set.labels[i]}});
    return dump(json{{"relation", relation_name(part.relation)},
                     {"class_count", part.classes.size()},
                     {"items", items},
                     {"classes", classes}});
  }
  case Format::Csv: {
    std::string out = "class_id,size,is_loop,n_left_nonsingular\n";
    for (std::size_t c = 0; c < rows.size(); ++c)
      out += std::to_string(c) + "," + std::to_string(rows[c].size) + "," +
             (rows[c].is_loop ? "true" : "false") + "," + std::to_string(rows[c].lns) + "\n";
    return out;
  }
  case Format::Table:
    break;
  }
  std::string out = std::to_string(part.classes.size()) + " " +
                    (part.relation == Relation::Isotopy ? "isotopy" : "isomorphism") +
                    " classes over " + std::to_string(set.loops.size()) + " items\n";
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    out += "class " + std::to_string(c) + ": size " + std::to_string(rows[c].size) +
           (rows[c].is_loop ? ", loop" : ", not a loop") + ", " + std::to_string(rows[c].lns) +
           " left non-singular, representative " +
           set.labels[part.representatives[c]] + "\n";
    std::vector<std::string> ids;
    for (auto m : part.classes[c])
      ids.push_back(std::to_string(m));
    out += "  members: " + join(ids, " ") + "\n";
  }
  return out;
}

json subset_json(const SubsetB& b)
{
  return json(b.members());
}

std::string render_census(const LoopCensus& census, Format format)
{
  switch (format) {
  case Format::Json: {
    json w = json::array();
    for (const auto& b : census.witnesses)
      w.push_back(subset_json(b));
    return dump(json{{"n", census.n}, {"count", census.witnesses.size()}, {"witnesses", w}});
  }
  case Format::Csv: {
    std::string out = "witness\n";
    for (const auto& b : census.witnesses)
      out += csv_field(b.text()) + "\n";
    return out;
  }
  case Format::Table:
    break;
  }
  std::string out = "n = " + std::to_string(census.n) + ": " +
                    std::to_string(census.witnesses.size()) + " loop transversals\n";
  for (const auto& b : census.witnesses)
    out += "  B = " + b.text() + "\n";
  return out;
}

std::string render_families(std::size_t p, const std::vector<std::vector<SubsetB>>& families,
                            Format format)
{
  switch (format) {
  case Format::Json: {
    json fams = json::array();
    for (const auto& f : families) {
      json members = json::array();
      for (const auto& b : f)
        members.push_back(subset_json(b));
      fams.push_back(json{{"size", f.size()}, {"members", members}});
    }
    return dump(json{{"n", p}, {"families", fams}});
  }
  case Format::Csv: {
    std::string out = "family,size,members\n";
    for (std::size_t i = 0; i < families.size(); ++i) {
      std::vector<std::string> texts;
      for (const auto& b : families[i])
        texts.push_back(b.text());
      out += std::to_string(i) + "," + std::to_string(families[i].size()) + "," +
             csv_field(join(texts, " ")) + "\n";
    }
    return out;
  }
  case Format::Table:
    break;
  }
  std::string out = std::to_string(families.size()) + " families for p = " + std::to_string(p) +
                    "\n";
  for (const auto& f : families) {
    std::vector<std::string> texts;
    for (const auto& b : f)
      texts.push_back(b.text());
    out += "{" + join(texts, ", ") + "}\n";
  }
  return out;
}

std::string render_cycle_index(std::size_t p, const CycleIndex& index, Format format)
{
  switch (format) {
  case Format::Json: {
    json terms = json::array();
    for (const auto& [type, coeff] : index.terms) {
      json t = json::array();
      for (auto [len, count] : type)
        t.push_back(json::array({len, count}));
      terms.push_back(json{{"type", t},
                           {"num", numerator(coeff).convert_to<std::int64_t>()},
                           {"den", denominator(coeff).convert_to<std::int64_t>()}});
    }
    return dump(json{{"p", p}, {"terms", terms}});
  }
  case Format::Csv: {
    std::string out = "type,num,den\n";
    for (const auto& [type, coeff] : index.terms) {
      std::vector<std::string> parts;
      for (auto [len, count] : type)
        parts.push_back(std::to_string(len) + "^" + std::to_string(count));
      out += join(parts, " ") + "," + numerator(coeff).str() + "," + denominator(coeff).str() +
             "\n";
    }
    return out;
  }
  case Format::Table:
    break;
  }
  return cycle_index_text(index) + "\n";
}

} // namespace nrt
