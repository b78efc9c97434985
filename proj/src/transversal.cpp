#include "nrt/transversal.hpp"

#include <algorithm>

#include "nrt/error.hpp"

namespace nrt {

Transversal::Transversal(CosetsPtr cosets, std::vector<Element> reps)
  : cosets_(std::move(cosets)), reps_(std::move(reps))
{
  if (!cosets_)
    throw Error(ErrorCode::InvalidArgument, "null coset decomposition");
  if (reps_.size() != cosets_->index())
    throw Error(ErrorCode::InvalidArgument, "transversal needs one rep per coset");
  if (reps_.empty() || reps_[0] != 0)
    throw Error(ErrorCode::InvalidArgument, "transversal must pin the identity at position 0");
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (reps_[i] >= cosets_->coset_of.size() || cosets_->coset_of[reps_[i]] != i)
      throw Error(ErrorCode::InvalidArgument,
                  "rep at position " + std::to_string(i) + " is not in coset " +
                    std::to_string(i),
                  static_cast<std::uint32_t>(i));
  }
}

CosetsPtr make_cosets(const Subgroup& h)
{
  return std::make_shared<const CosetDecomposition>(right_cosets(h));
}

std::optional<std::uint64_t> transversal_count(const CosetDecomposition& cosets)
{
  const std::uint64_t h = cosets.subgroup.order();
  std::uint64_t total = 1;
  for (std::size_t i = 1; i < cosets.index(); ++i) {
    if (total > UINT64_MAX / h)
      return std::nullopt;
    total *= h;
  }
  return total;
}

void for_each_transversal(const CosetsPtr& cosets, std::uint64_t cap,
                          const std::function<void(const Transversal&)>& visit)
{
  auto count = transversal_count(*cosets);
  if (!count || *count > cap)
    throw Error(ErrorCode::EnumerationTooLarge,
                "transversal count " + (count ? std::to_string(*count) : std::string("> 2^64")) +
                  " exceeds the enumeration cap " + std::to_string(cap));
  const std::size_t m = cosets->index();
  const std::size_t h = cosets->subgroup.order();
  std::vector<std::size_t> choice(m, 0);
  std::vector<Element> reps(m, 0);
  for (;;) {
    for (std::size_t i = 1; i < m; ++i)
      reps[i] = cosets->cosets[i][choice[i]];
    visit(Transversal(cosets, reps));
    // Odometer with the last coset varying fastest.
    std::size_t i = m;
    while (i > 1) {
      --i;
      if (++choice[i] < h)
        break;
      choice[i] = 0;
      if (i == 1)
        return;
    }
    if (m <= 1)
      return;
  }
}

std::vector<Transversal> enumerate_transversals(const Subgroup& h, std::uint64_t cap)
{
  std::vector<Transversal> out;
  for_each_transversal(make_cosets(h), cap, [&](const Transversal& t) { out.push_back(t); });
  return out;
}

RightLoop induced_right_loop(const Transversal& t)
{
  const auto& g = t.group();
  const auto& coset_of = t.cosets()->coset_of;
  const auto n = t.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = coset_of[g.mul(t.reps()[i], t.reps()[j])];
  std::vector<std::string> names;
  names.reserve(n);
  for (Element r : t.reps())
    names.push_back(g.name(r));
  return validate_right_loop(n, std::move(table), std::move(names));
}

Permutation chi_action(const Transversal& t, Element g)
{
  if (g >= t.group().order())
    throw Error(ErrorCode::InvalidArgument, "element index out of range", g);
  Permutation p(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    p[i] = t.cosets()->coset_of[t.group().mul(t.reps()[i], g)];
  return p;
}

ProjectedTransversal project_transversal(const Transversal& t, const Subgroup& n,
                                         const Quotient& q)
{
  const auto& h = t.subgroup();
  if (n.group() != h.group())
    throw Error(ErrorCode::InvalidArgument, "N and H live in different groups");
  for (Element m : n.members())
    if (!h.contains(m))
      throw Error(ErrorCode::InvalidArgument, "N is not contained in H", m);
  if (!is_normal(n))
    throw Error(ErrorCode::NotNormal, "N is not normal in G");
  if (q.projection.size() != h.parent().order() || !(q.kernel == n))
    throw Error(ErrorCode::InvalidArgument, "quotient data does not match N");

  std::vector<Element> image;
  for (Element m : h.members())
    image.push_back(q.projection[m]);
  Subgroup hq(q.group, image);
  auto cosets = make_cosets(hq);
  std::vector<Element> reps(cosets->index(), 0);
  Permutation position_map(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    Element r = q.projection[t.reps()[i]];
    auto pos = cosets->coset_of[r];
    position_map[i] = pos;
    reps[pos] = r;
  }
  return ProjectedTransversal{Transversal(std::move(cosets), std::move(reps)),
                              std::move(position_map)};
}

std::string transversal_text(const Transversal& t)
{
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      out += ',';
    out += t.group().name(t.reps()[i]);
  }
  return out;
}

Transversal parse_transversal(const CosetsPtr& cosets, std::string_view text)
{
  const auto& g = cosets->subgroup.parent();
  std::vector<Element> elements;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : ',';
    if (c == '(')
      ++depth;
    else if (c == ')')
      --depth;
    else if (c == ',' && depth == 0) {
      elements.push_back(parse_element(g, text.substr(start, i - start)));
      start = i + 1;
    }
  }
  std::vector<Element> reps(cosets->index(), 0);
  std::vector<char> filled(cosets->index(), 0);
  for (Element e : elements) {
    auto pos = cosets->coset_of[e];
    if (filled[pos])
      throw Error(ErrorCode::InvalidArgument, "two elements share a right coset", e);
    filled[pos] = 1;
    reps[pos] = e;
  }
  if (elements.size() != cosets->index())
    throw Error(ErrorCode::InvalidArgument, "transversal needs one element per coset");
  return Transversal(cosets, std::move(reps));
}

} // namespace nrt
