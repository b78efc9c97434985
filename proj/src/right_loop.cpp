#include "nrt/right_loop.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nrt/error.hpp"

namespace nrt {

RightLoop RightLoop::from_table(std::size_t order, std::vector<Element> table,
                                std::vector<std::string> names)
{
  return validate_right_loop(order, std::move(table), std::move(names));
}

Permutation RightLoop::right_translation(Element y) const
{
  Permutation p(order_);
  for (Element x = 0; x < order_; ++x)
    p[x] = op(x, y);
  return p;
}

std::vector<Element> RightLoop::left_translation(Element a) const
{
  auto r = row(a);
  return {r.begin(), r.end()};
}

RightLoop validate_right_loop(std::size_t order, std::vector<Element> table,
                              std::vector<std::string> names)
{
  if (order == 0)
    throw Error(ErrorCode::InvalidArgument, "right loop order must be positive");
  if (table.size() != order * order)
    throw Error(ErrorCode::InvalidArgument, "table size is not order*order");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= order)
      throw Error(ErrorCode::InvalidArgument, "table entry out of range at row " +
                                                std::to_string(i / order) + ", column " +
                                                std::to_string(i % order));
  if (!names.empty() && names.size() != order)
    throw Error(ErrorCode::InvalidArgument, "names count differs from order");
  for (Element a = 0; a < order; ++a) {
    if (table[a] != a)
      throw Error(ErrorCode::NotIdentity,
                  "row 0 is not the identity at column " + std::to_string(a), a);
    if (table[a * order] != a)
      throw Error(ErrorCode::NotIdentity,
                  "column 0 is not the identity at row " + std::to_string(a), a);
  }
  std::vector<char> seen(order);
  for (Element y = 0; y < order; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element x = 0; x < order; ++x) {
      Element v = table[x * order + y];
      if (seen[v])
        throw Error(ErrorCode::ColumnNotBijective,
                    "right translation by " + std::to_string(y) + " is not a bijection", y);
      seen[v] = 1;
    }
  }
  RightLoop loop;
  loop.order_ = order;
  loop.table_ = std::move(table);
  if (names.empty())
    for (std::size_t i = 0; i < order; ++i)
      names.push_back(std::to_string(i));
  loop.names_ = std::move(names);
  return loop;
}

RightLoop loop_from_group(const FiniteGroup& g)
{
  return validate_right_loop(g.order(), g.table(), g.names());
}

std::vector<Element> left_nonsingular_elements(const RightLoop& loop)
{
  std::vector<Element> out;
  for (Element a = 0; a < loop.order(); ++a)
    if (is_bijection(loop.row(a)))
      out.push_back(a);
  return out;
}

bool is_associative(const RightLoop& loop)
{
  const auto n = loop.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element ab = loop.op(a, b);
      for (Element c = 0; c < n; ++c)
        if (loop.op(ab, c) != loop.op(a, loop.op(b, c)))
          return false;
    }
  return true;
}

StructureFlags structure_flags(const RightLoop& loop)
{
  StructureFlags f;
  f.is_loop = left_nonsingular_elements(loop).size() == loop.order();
  f.is_group = f.is_loop && is_associative(loop);
  return f;
}

// PermutationGroup ----------------------------------------------------------

PermutationGroup PermutationGroup::generate(std::size_t degree,
                                            std::vector<Permutation> generators)
{
  for (const auto& g : generators)
    if (g.size() != degree || !is_bijection(g))
      throw Error(ErrorCode::InvalidArgument, "generator is not a permutation of the degree");
  std::set<Permutation> distinct;
  std::vector<Permutation> gens;
  for (auto& g : generators)
    if (!is_identity(g) && distinct.insert(g).second)
      gens.push_back(g);

  PermutationGroup pg;
  pg.degree_ = degree;
  std::set<Permutation> seen{identity_permutation(degree)};
  std::vector<Permutation> queue{identity_permutation(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Permutation p = product(g, queue[i]);
      if (seen.insert(p).second)
        queue.push_back(std::move(p));
    }
  pg.elements_.assign(seen.begin(), seen.end());
  pg.generators_ = std::move(gens);
  return pg;
}

bool PermutationGroup::contains(const Permutation& p) const
{
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

GroupPtr PermutationGroup::as_finite_group() const
{
  const auto n = elements_.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(cycle_notation(elements_[a]));
    for (std::size_t b = 0; b < n; ++b) {
      auto p = product(elements_[a], elements_[b]);
      auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
      table[a * n + b] = static_cast<Element>(it - elements_.begin());
    }
  }
  return std::make_shared<const FiniteGroup>(
    FiniteGroup::from_table(n, std::move(table), std::move(names)));
}

Torsion group_torsion(const RightLoop& loop)
{
  const auto n = loop.order();
  std::vector<Permutation> right(n), right_inv(n);
  for (Element y = 0; y < n; ++y) {
    right[y] = loop.right_translation(y);
    right_inv[y] = inverse(right[y]);
  }
  std::set<Permutation> gens;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      // R_x first, then R_y, then R_{x∘y}^{-1}.
      Permutation t = product(right_inv[loop.op(x, y)], product(right[y], right[x]));
      if (!is_identity(t))
        gens.insert(std::move(t));
    }
  std::vector<Permutation> torsion_gens(gens.begin(), gens.end());
  std::vector<Permutation> envelope_gens = torsion_gens;
  envelope_gens.insert(envelope_gens.end(), right.begin(), right.end());
  return Torsion{PermutationGroup::generate(n, std::move(torsion_gens)),
                 PermutationGroup::generate(n, std::move(envelope_gens))};
}

RightLoop parse_right_loop(std::istream& in)
{
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        return true;
    }
    return false;
  };
  auto diag = [&](std::size_t col, const std::string& what) {
    return Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ", column " +
                                     std::to_string(col) + ": " + what);
  };
  if (!next_line())
    throw Error(ErrorCode::Parse, "empty table");
  std::size_t n = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> n) || n == 0)
      throw diag(1, "expected a positive order");
  }
  std::vector<Element> table;
  for (std::size_t row = 0; row < n; ++row) {
    if (!next_line())
      throw Error(ErrorCode::Parse, "expected " + std::to_string(n) + " rows");
    std::istringstream ls(line);
    std::string tok;
    std::size_t col = 0;
    while (ls >> tok) {
      ++col;
      if (col > n)
        throw diag(col, "too many entries");
      if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
        throw diag(col, "entry '" + tok + "' is not an index");
      auto v = std::stoul(tok);
      if (v >= n)
        throw diag(col, "entry out of range");
      table.push_back(static_cast<Element>(v));
    }
    if (col != n)
      throw diag(col + 1, "row has " + std::to_string(col) + " entries");
  }
  std::vector<std::string> names;
  if (next_line()) {
    if (line.rfind("names:", 0) != 0)
      throw diag(1, "unexpected trailing content");
    std::istringstream ls(line.substr(6));
    std::string tok;
    while (ls >> tok)
      names.push_back(tok);
    if (names.size() != n)
      throw diag(7, "names count differs from order");
  }
  return validate_right_loop(n, std::move(table), std::move(names));
}

} // namespace nrt
