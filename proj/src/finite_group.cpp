#include "nrt/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "nrt/error.hpp"

namespace nrt {

struct SubgroupAccess {
  static Subgroup make(GroupPtr g, std::vector<Element> members)
  { return Subgroup(std::move(g), std::move(members), Subgroup::Unchecked{}); }
};

namespace {

std::uint64_t pack(const Permutation& p)
{
  std::uint64_t key = 0;
  for (Element v : p)
    key = (key << 4) | v;
  return key;
}

std::string index_name(std::size_t i) { return std::to_string(i); }

} // namespace

// FiniteGroup ---------------------------------------------------------------

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table,
                                    std::vector<std::string> names, GroupKind kind,
                                    std::size_t parameter)
{
  if (order == 0)
    throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  if (table.size() != order * order)
    throw Error(ErrorCode::InvalidArgument, "table size is not order*order");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= order)
      throw Error(ErrorCode::InvalidArgument,
                  "entry " + std::to_string(table[i]) + " at row " +
                    std::to_string(i / order) + ", column " + std::to_string(i % order) +
                    " is out of range");
  if (!names.empty() && names.size() != order)
    throw Error(ErrorCode::InvalidArgument, "names count differs from order");

  // Locate a two-sided identity and swap it to index 0.
  std::optional<Element> e;
  for (Element a = 0; a < order && !e; ++a) {
    bool ok = true;
    for (Element b = 0; b < order && ok; ++b)
      ok = table[a * order + b] == b && table[b * order + a] == b;
    if (ok)
      e = a;
  }
  if (!e)
    throw Error(ErrorCode::InvalidArgument, "table has no identity element");
  if (*e != 0) {
    auto sigma = [&](Element a) -> Element { return a == 0 ? *e : (a == *e ? 0 : a); };
    std::vector<Element> relabeled(order * order);
    for (Element a = 0; a < order; ++a)
      for (Element b = 0; b < order; ++b)
        relabeled[sigma(a) * order + sigma(b)] = sigma(table[a * order + b]);
    table = std::move(relabeled);
    if (!names.empty())
      std::swap(names[0], names[*e]);
  }

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.kind_ = kind;
  g.parameter_ = parameter;
  if (names.empty()) {
    names.reserve(order);
    for (std::size_t i = 0; i < order; ++i)
      names.push_back(index_name(i));
  }
  g.names_ = std::move(names);
  g.validate();
  g.compute_inverses();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Permutation> elements,
                                           std::vector<std::string> names,
                                           GroupKind kind, std::size_t parameter)
{
  if (elements.empty() || !is_identity(elements.front()))
    throw Error(ErrorCode::InvalidArgument, "first permutation must be the identity");
  std::size_t degree = elements.front().size();
  if (degree > 16)
    throw Error(ErrorCode::InvalidArgument, "permutation degree above 16");
  if (names.size() != elements.size())
    throw Error(ErrorCode::InvalidArgument, "names count differs from order");

  FiniteGroup g;
  g.order_ = elements.size();
  g.kind_ = kind;
  g.parameter_ = parameter;
  g.degree_ = degree;
  g.names_ = std::move(names);
  g.perms_ = std::move(elements);
  for (std::size_t i = 0; i < g.perms_.size(); ++i) {
    if (g.perms_[i].size() != degree)
      throw Error(ErrorCode::InvalidArgument, "permutation degrees differ");
    g.perm_index_.emplace(pack(g.perms_[i]), static_cast<Element>(i));
  }
  if (g.perm_index_.size() != g.order_)
    throw Error(ErrorCode::InvalidArgument, "duplicate permutations");

  if (g.order_ <= kDenseLimit) {
    g.table_.resize(g.order_ * g.order_);
    for (Element a = 0; a < g.order_; ++a)
      for (Element b = 0; b < g.order_; ++b)
        g.table_[a * g.order_ + b] = g.mul_by_permutation(a, b);
  }
  g.compute_inverses();
  return g;
}

Element FiniteGroup::mul_by_permutation(Element a, Element b) const
{
  auto it = perm_index_.find(pack(product(perms_[a], perms_[b])));
  if (it == perm_index_.end())
    throw Error(ErrorCode::InvalidArgument, "permutation set is not closed");
  return it->second;
}

void FiniteGroup::compute_inverses()
{
  inverse_.assign(order_, 0);
  if (!perms_.empty()) {
    for (Element a = 0; a < order_; ++a) {
      auto it = perm_index_.find(pack(nrt::inverse(perms_[a])));
      if (it == perm_index_.end())
        throw Error(ErrorCode::InvalidArgument, "permutation set lacks an inverse");
      inverse_[a] = it->second;
    }
    return;
  }
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
}

std::optional<Element> FiniteGroup::find_name(std::string_view text) const
{
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == text)
      return static_cast<Element>(i);
  return std::nullopt;
}

std::optional<Element> FiniteGroup::find_permutation(const Permutation& p) const
{
  if (p.size() != degree_)
    return std::nullopt;
  auto it = perm_index_.find(pack(p));
  if (it == perm_index_.end())
    return std::nullopt;
  return it->second;
}

std::vector<Element> FiniteGroup::table() const
{
  if (!table_.empty())
    return table_;
  std::vector<Element> t(order_ * order_);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      t[a * order_ + b] = mul(a, b);
  return t;
}

void FiniteGroup::validate() const
{
  const std::size_t n = order_;
  auto fail = [](const std::string& what, Element witness) {
    throw Error(ErrorCode::InvalidArgument, what, witness);
  };
  std::vector<char> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      Element v = mul(a, b);
      if (seen[v])
        fail("row " + std::to_string(a) + " repeats entry " + std::to_string(v), a);
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      Element v = mul(b, a);
      if (seen[v])
        fail("column " + std::to_string(a) + " repeats entry " + std::to_string(v), a);
      seen[v] = 1;
    }
    if (mul(0, a) != a || mul(a, 0) != a)
      fail("index 0 is not the identity at " + std::to_string(a), a);
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element ab = mul(a, b);
      for (Element c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          fail("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                 "," + std::to_string(c) + ")",
               a);
    }
  // Latin rows already give right inverses; check they are two-sided.
  for (Element a = 0; a < n; ++a) {
    Element b = 0;
    while (mul(a, b) != 0)
      ++b;
    if (mul(b, a) != 0)
      fail("element " + std::to_string(a) + " has no two-sided inverse", a);
  }
}

// Named groups --------------------------------------------------------------

GroupPtr cyclic_group(std::size_t n)
{
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "cyclic:n needs n >= 1");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = static_cast<Element>((a + b) % n);
  return std::make_shared<const FiniteGroup>(
    FiniteGroup::from_table(n, std::move(t), {}, GroupKind::Cyclic, n));
}

GroupPtr dihedral_group(std::size_t n)
{
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "dihedral:n needs n >= 2");
  const std::size_t order = 2 * n;
  // index i < n is y^i, index n+i is x y^i.
  auto make = [n](bool refl, std::size_t power) -> Element {
    return static_cast<Element>((refl ? n : 0) + power % n);
  };
  std::vector<Element> t(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      bool ra = a >= n, rb = b >= n;
      std::size_t i = a % n, j = b % n;
      Element v;
      if (!ra && !rb)
        v = make(false, i + j);          // y^i y^j
      else if (!ra && rb)
        v = make(true, j + n - i);       // y^i x y^j = x y^{j-i}
      else if (ra && !rb)
        v = make(true, i + j);           // x y^i y^j
      else
        v = make(false, j + n - i);      // x y^i x y^j = y^{j-i}
      t[a * order + b] = v;
    }
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < n; ++i) {
    std::string y = i == 0 ? "" : (i == 1 ? "y" : "y^" + std::to_string(i));
    names[i] = i == 0 ? "1" : y;
    names[n + i] = "x" + y;
  }
  return std::make_shared<const FiniteGroup>(
    FiniteGroup::from_table(order, std::move(t), std::move(names), GroupKind::Dihedral, n));
}

std::string cycle_notation(const Permutation& p)
{
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == s)
      continue;
    out += '(';
    for (std::size_t i = s; !done[i]; i = p[i]) {
      done[i] = 1;
      if (i != s)
        out += ',';
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "I" : out;
}

namespace {

bool is_even(const Permutation& p)
{
  return (p.size() - cycle_count(p)) % 2 == 0;
}

GroupPtr permutation_family(std::size_t k, bool even_only)
{
  const char* label = even_only ? "alt" : "sym";
  if (k < 1 || k > 8)
    throw Error(ErrorCode::InvalidArgument, std::string(label) + ":k needs 1 <= k <= 8");
  std::vector<Permutation> perms;
  std::vector<std::string> names;
  Permutation p = identity_permutation(k);
  do {
    if (!even_only || is_even(p)) {
      perms.push_back(p);
      names.push_back(cycle_notation(p));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(
    std::move(perms), std::move(names),
    even_only ? GroupKind::Alternating : GroupKind::Symmetric, k));
}

std::size_t parse_size(std::string_view text, std::string_view what)
{
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::Parse, "malformed " + std::string(what) + ": '" +
                                    std::string(text) + "'");
  return std::stoul(std::string(text));
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

GroupPtr symmetric_group(std::size_t k) { return permutation_family(k, false); }
GroupPtr alternating_group(std::size_t k) { return permutation_family(k, true); }

GroupPtr build_named_group(std::string_view descriptor)
{
  descriptor = trim(descriptor);
  auto colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::Parse, "group descriptor '" + std::string(descriptor) +
                                    "' lacks ':' (expected cyclic:n, dihedral:n, "
                                    "sym:k, alt:k or file:<path>)");
  auto family = descriptor.substr(0, colon);
  auto arg = descriptor.substr(colon + 1);
  if (family == "file")
    return load_cayley_table(std::string(arg));
  std::size_t n = parse_size(arg, "group size");
  if (family == "cyclic")
    return cyclic_group(n);
  if (family == "dihedral")
    return dihedral_group(n);
  if (family == "sym")
    return symmetric_group(n);
  if (family == "alt")
    return alternating_group(n);
  throw Error(ErrorCode::Parse, "unknown group family '" + std::string(family) + "'");
}

GroupPtr parse_cayley_table(std::istream& in)
{
  std::string line;
  std::size_t line_no = 0;
  auto diag = [&](std::size_t col, const std::string& what) {
    return Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ", column " +
                                     std::to_string(col) + ": " + what);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!trim(line).empty())
        return true;
    }
    return false;
  };
  if (!next_line())
    throw Error(ErrorCode::Parse, "empty Cayley table");
  std::size_t n;
  {
    std::istringstream ls(line);
    std::string tok, extra;
    ls >> tok;
    if (ls >> extra)
      throw diag(2, "expected a single order on the first line");
    try {
      n = parse_size(tok, "order");
    } catch (const Error&) {
      throw diag(1, "order '" + tok + "' is not a positive integer");
    }
    if (n == 0)
      throw diag(1, "order must be positive");
  }
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (!next_line())
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no + 1) +
                                      ": expected " + std::to_string(n) + " rows, got " +
                                      std::to_string(row));
    std::istringstream ls(line);
    std::string tok;
    std::size_t col = 0;
    while (ls >> tok) {
      ++col;
      if (col > n)
        throw diag(col, "row has more than " + std::to_string(n) + " entries");
      std::size_t v;
      try {
        v = parse_size(tok, "entry");
      } catch (const Error&) {
        throw diag(col, "entry '" + tok + "' is not a non-negative integer");
      }
      if (v >= n)
        throw diag(col, "entry " + tok + " is out of range 0.." + std::to_string(n - 1));
      table.push_back(static_cast<Element>(v));
    }
    if (col < n)
      throw diag(col + 1, "row has only " + std::to_string(col) + " entries");
  }
  std::vector<std::string> names;
  if (next_line()) {
    auto body = trim(line);
    if (body.rfind("names:", 0) != 0)
      throw diag(1, "unexpected trailing content (only a 'names:' line is allowed)");
    std::istringstream ls{std::string(body.substr(6))};
    std::string tok;
    while (ls >> tok)
      names.push_back(tok);
    if (names.size() != n)
      throw diag(7, "names line has " + std::to_string(names.size()) + " names, expected " +
                      std::to_string(n));
    if (next_line())
      throw diag(1, "unexpected content after the names line");
  }
  try {
    return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(n, std::move(table), std::move(names)));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("invalid group table: ") + e.what(),
                e.witness());
  }
}

GroupPtr load_cayley_table(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Parse, "cannot open Cayley table file '" + path + "'");
  return parse_cayley_table(in);
}

// Element parsing -----------------------------------------------------------

namespace {

Element parse_cycles(const FiniteGroup& g, std::string_view text)
{
  const std::size_t k = g.degree();
  Permutation acc = identity_permutation(k);
  std::size_t i = 0;
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::Parse, "cannot parse permutation '" + std::string(text) +
                                     "': " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw bad("expected '('");
    auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw bad("unbalanced parentheses");
    std::vector<Element> points;
    std::string body(text.substr(i + 1, close - i - 1));
    std::istringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto t = trim(tok);
      if (t.empty())
        continue;
      std::size_t v = parse_size(t, "point");
      if (v < 1 || v > k)
        throw bad("point " + std::string(t) + " outside 1.." + std::to_string(k));
      points.push_back(static_cast<Element>(v - 1));
    }
    Permutation c = identity_permutation(k);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (std::count(points.begin(), points.end(), points[j]) > 1)
        throw bad("repeated point in a cycle");
      c[points[j]] = points[(j + 1) % points.size()];
    }
    acc = product(acc, c);
    i = close + 1;
  }
  auto idx = g.find_permutation(acc);
  if (!idx)
    throw Error(ErrorCode::Parse, "permutation '" + std::string(text) +
                                    "' is not an element of this group");
  return *idx;
}

Element parse_dihedral_word(const FiniteGroup& g, std::string_view text)
{
  const long n = static_cast<long>(g.parameter());
  Element acc = 0;
  std::size_t i = 0;
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::Parse, "cannot parse dihedral word '" + std::string(text) +
                                     "': " + why);
  };
  bool any = false;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    Element letter;
    if (c == 'x')
      letter = static_cast<Element>(n);
    else if (c == 'y')
      letter = 1;
    else if (c == '1' || c == 'e')
      letter = 0;
    else
      throw bad(std::string("unexpected character '") + c + "'");
    ++i;
    long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw bad("missing exponent");
      power = static_cast<long>(parse_size(text.substr(start, i - start), "exponent"));
      if (neg)
        power = -power;
    }
    long order = letter == 0 ? 1 : (letter == 1 ? n : 2);
    long e = ((power % order) + order) % order;
    for (long r = 0; r < e; ++r)
      acc = g.mul(acc, letter);
    any = true;
  }
  if (!any)
    throw bad("empty word");
  return acc;
}

} // namespace

Element parse_element(const FiniteGroup& g, std::string_view text)
{
  text = trim(text);
  if (auto named = g.find_name(text))
    return *named;
  switch (g.kind()) {
  case GroupKind::Symmetric:
  case GroupKind::Alternating:
    if (text == "()" || text == "e" || text == "1")
      return 0;
    return parse_cycles(g, text);
  case GroupKind::Dihedral:
    return parse_dihedral_word(g, text);
  case GroupKind::Cyclic:
  case GroupKind::Table:
  case GroupKind::Quotient: {
    std::size_t v = parse_size(text, "element");
    if (v >= g.order())
      throw Error(ErrorCode::Parse, "element index " + std::string(text) + " out of range");
    return static_cast<Element>(v);
  }
  }
  throw Error(ErrorCode::Parse, "unknown element '" + std::string(text) + "'");
}

std::vector<Element> parse_generators(const FiniteGroup& g, std::string_view text)
{
  std::vector<Element> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto tok = trim(text.substr(start, end - start));
    if (!tok.empty())
      gens.push_back(parse_element(g, tok));
    start = end + 1;
  }
  return gens;
}

// Subgroups -----------------------------------------------------------------

Subgroup::Subgroup(GroupPtr g, std::vector<Element> members, Unchecked)
  : group_(std::move(g)), members_(std::move(members)), in_(group_->order(), 0)
{
  for (Element m : members_)
    in_[m] = 1;
}

Subgroup::Subgroup(GroupPtr g, std::vector<Element> members)
  : group_(std::move(g))
{
  if (!group_)
    throw Error(ErrorCode::InvalidArgument, "null group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto n = group_->order();
  if (members.empty() || members.front() != 0)
    throw Error(ErrorCode::NotSubgroup, "subgroup must contain the identity");
  if (members.back() >= n)
    throw Error(ErrorCode::NotSubgroup, "subgroup member out of range", members.back());
  in_.assign(n, 0);
  for (Element m : members)
    in_[m] = 1;
  if (n % members.size() != 0)
    throw Error(ErrorCode::NotSubgroup, "subset size does not divide the group order");
  for (Element a : members)
    for (Element b : members)
      if (!in_[group_->mul(a, b)])
        throw Error(ErrorCode::NotSubgroup, "subset not closed under multiplication", a);
  members_ = std::move(members);
}

Subgroup trivial_subgroup(const GroupPtr& g) { return SubgroupAccess::make(g, {0}); }

Subgroup whole_group(const GroupPtr& g)
{
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), Element{0});
  return SubgroupAccess::make(g, std::move(all));
}

Subgroup generated_subgroup(const GroupPtr& g, std::span<const Element> gens)
{
  const auto n = g->order();
  std::vector<char> in(n, 0);
  std::vector<Element> members{0};
  in[0] = 1;
  std::vector<Element> generators;
  for (Element s : gens) {
    if (s >= n)
      throw Error(ErrorCode::InvalidArgument, "generator index out of range", s);
    if (s != 0)
      generators.push_back(s);
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : generators) {
      Element p = g->mul(members[i], s);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return SubgroupAccess::make(g, std::move(members));
}

CosetDecomposition right_cosets(const Subgroup& h)
{
  const auto& g = h.parent();
  const auto n = g.order();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  CosetDecomposition d{h, {}, std::vector<std::uint32_t>(n, unset)};
  for (Element x = 0; x < n; ++x) {
    if (d.coset_of[x] != unset)
      continue;
    auto id = static_cast<std::uint32_t>(d.cosets.size());
    std::vector<Element> coset;
    coset.reserve(h.order());
    for (Element m : h.members()) {
      Element y = g.mul(m, x);
      d.coset_of[y] = id;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    d.cosets.push_back(std::move(coset));
  }
  return d;
}

Subgroup core(const Subgroup& h)
{
  const auto& g = h.parent();
  std::vector<Element> kept;
  for (Element k : h.members()) {
    bool ok = true;
    for (Element x = 0; x < g.order() && ok; ++x)
      ok = h.contains(g.mul(g.mul(g.inv(x), k), x));
    if (ok)
      kept.push_back(k);
  }
  return SubgroupAccess::make(h.group(), std::move(kept));
}

bool is_normal(const Subgroup& h) { return core(h).order() == h.order(); }

Quotient quotient(const Subgroup& n)
{
  if (!is_normal(n))
    throw Error(ErrorCode::NotNormal, "quotient needs a normal subgroup");
  const auto& g = n.parent();
  auto cosets = right_cosets(n);
  const auto m = cosets.index();
  std::vector<Element> table(m * m);
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = "[" + g.name(cosets.cosets[i].front()) + "]";
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = cosets.coset_of[g.mul(cosets.cosets[i].front(), cosets.cosets[j].front())];
  }
  auto q = std::make_shared<const FiniteGroup>(
    FiniteGroup::from_table(m, std::move(table), std::move(names), GroupKind::Quotient, 0));
  std::vector<Element> projection(cosets.coset_of.begin(), cosets.coset_of.end());
  return Quotient{std::move(q), std::move(projection), n};
}

Subgroup center(const GroupPtr& g)
{
  std::vector<Element> z;
  for (Element a = 0; a < g->order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g->order() && central; ++b)
      central = g->mul(a, b) == g->mul(b, a);
    if (central)
      z.push_back(a);
  }
  return SubgroupAccess::make(g, std::move(z));
}

Subgroup commutator_subgroup(const Subgroup& h)
{
  const auto& g = h.parent();
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> comms;
  for (Element a : h.members())
    for (Element b : h.members()) {
      Element c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(h.group(), comms);
}

bool is_nilpotent(const GroupPtr& g)
{
  // Z_{i+1} = { a : [a, b] in Z_i for all b }.
  std::vector<char> z(g->order(), 0);
  z[0] = 1;
  std::size_t size = 1;
  for (;;) {
    std::vector<char> next(g->order(), 0);
    std::size_t next_size = 0;
    for (Element a = 0; a < g->order(); ++a) {
      bool ok = true;
      for (Element b = 0; b < g->order() && ok; ++b)
        ok = z[g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b))];
      if (ok) {
        next[a] = 1;
        ++next_size;
      }
    }
    if (next_size == g->order())
      return true;
    if (next_size == size)
      return false;
    z = std::move(next);
    size = next_size;
  }
}

bool is_solvable(const GroupPtr& g)
{
  Subgroup h = whole_group(g);
  while (h.order() > 1) {
    Subgroup next = commutator_subgroup(h);
    if (next.order() == h.order())
      return false;
    h = std::move(next);
  }
  return true;
}

std::uint64_t element_order(const FiniteGroup& g, Element a)
{
  std::uint64_t k = 1;
  for (Element p = a; p != 0; p = g.mul(p, a))
    ++k;
  return k;
}

} // namespace nrt
