#include "nrt/isotopy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nrt/error.hpp"

namespace nrt {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

/// Per-element isomorphism invariants: each is preserved by any f with
/// f(x∘y) = f(x)∘'f(y).
std::vector<std::vector<std::uint32_t>> element_invariants(const RightLoop& loop)
{
  const auto n = loop.order();
  std::vector<std::vector<std::uint32_t>> keys(n);
  for (Element x = 0; x < n; ++x) {
    auto& k = keys[x];
    auto row = loop.row(x);
    std::vector<char> hit(n, 0);
    std::uint32_t image = 0;
    for (Element v : row)
      if (!hit[v]) {
        hit[v] = 1;
        ++image;
      }
    k.push_back(x == 0 ? 1 : 0);
    k.push_back(image);
    for (auto [len, count] : cycle_type(loop.right_translation(x))) {
      k.push_back(len);
      k.push_back(count);
    }
    k.push_back(0xffffffffu);
    if (image == n)
      for (auto [len, count] : cycle_type(Permutation(row.begin(), row.end()))) {
        k.push_back(len);
        k.push_back(count);
      }
    k.push_back(0xffffffffu);
    std::uint32_t commuting = 0;
    for (Element y = 0; y < n; ++y)
      commuting += loop.op(x, y) == loop.op(y, x);
    k.push_back(commuting);
    k.push_back(loop.op(x, x) == 0);
  }
  return keys;
}

class IsoSearch {
public:
  IsoSearch(const RightLoop& a, const RightLoop& b) : a_(a), b_(b), n_(a.order())
  {
    auto ka = element_invariants(a);
    auto kb = element_invariants(b);
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    cls_a_.resize(n_);
    cls_b_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      cls_a_[i] = ids.emplace(ka[i], static_cast<std::uint32_t>(ids.size())).first->second;
    for (std::size_t i = 0; i < n_; ++i)
      cls_b_[i] = ids.emplace(kb[i], static_cast<std::uint32_t>(ids.size())).first->second;
    auto sa = cls_a_, sb = cls_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    compatible_ = sa == sb;
    f_.assign(n_, kUnset);
    finv_.assign(n_, kUnset);
  }

  /// Calls on_solution for each isomorphism; stops when it returns false.
  template <typename F>
  void run(F&& on_solution)
  {
    if (!compatible_)
      return;
    if (!assign(0, 0))
      return;
    stop_ = false;
    search(on_solution);
  }

private:
  template <typename F>
  void search(F& on_solution)
  {
    Element x = 0;
    while (x < n_ && f_[x] != kUnset)
      ++x;
    if (x == n_) {
      if (!on_solution(f_))
        stop_ = true;
      return;
    }
    for (Element y = 0; y < n_ && !stop_; ++y) {
      if (finv_[y] != kUnset || cls_a_[x] != cls_b_[y])
        continue;
      std::size_t mark = trail_.size();
      if (assign(x, y))
        search(on_solution);
      undo(mark);
    }
  }

  bool assign(Element x, Element y)
  {
    pending_.clear();
    pending_.emplace_back(x, y);
    while (!pending_.empty()) {
      auto [s, t] = pending_.back();
      pending_.pop_back();
      if (f_[s] == t)
        continue;
      if (f_[s] != kUnset || finv_[t] != kUnset || cls_a_[s] != cls_b_[t])
        return false;
      f_[s] = t;
      finv_[t] = s;
      trail_.push_back(s);
      for (Element u : trail_) {
        Element fu = f_[u];
        pending_.emplace_back(a_.op(s, u), b_.op(t, fu));
        pending_.emplace_back(a_.op(u, s), b_.op(fu, t));
      }
    }
    return true;
  }

  void undo(std::size_t mark)
  {
    while (trail_.size() > mark) {
      Element s = trail_.back();
      trail_.pop_back();
      finv_[f_[s]] = kUnset;
      f_[s] = kUnset;
    }
  }

  const RightLoop& a_;
  const RightLoop& b_;
  std::size_t n_;
  std::vector<std::uint32_t> cls_a_, cls_b_;
  bool compatible_ = false;
  bool stop_ = false;
  std::vector<Element> f_, finv_, trail_;
  std::vector<std::pair<Element, Element>> pending_;
};

std::vector<std::uint32_t> sorted_row_images(const RightLoop& loop)
{
  std::vector<std::uint32_t> sizes;
  std::vector<char> hit(loop.order());
  for (Element x = 0; x < loop.order(); ++x) {
    std::fill(hit.begin(), hit.end(), 0);
    std::uint32_t image = 0;
    for (Element v : loop.row(x))
      if (!hit[v]) {
        hit[v] = 1;
        ++image;
      }
    sizes.push_back(image);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

} // namespace

// Verification --------------------------------------------------------------

bool satisfies_isotopy(std::size_t order, std::span<const Element> from,
                       std::span<const Element> to, const IsotopyWitness& w)
{
  if (from.size() != order * order || to.size() != order * order)
    return false;
  if (w.alpha.size() != order || w.beta.size() != order || w.gamma.size() != order)
    return false;
  if (!is_bijection(w.alpha) || !is_bijection(w.beta) || !is_bijection(w.gamma))
    return false;
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      Element lhs = to[w.alpha[x] * order + w.beta[y]];
      Element v = from[x * order + y];
      if (v >= order || lhs != w.gamma[v])
        return false;
    }
  return true;
}

bool satisfies_isomorphism(std::size_t order, std::span<const Element> from,
                           std::span<const Element> to, const Permutation& f)
{
  return satisfies_isotopy(order, from, to, IsotopyWitness{f, f, f});
}

bool verify_isotopy(const RightLoop& from, const RightLoop& to, const IsotopyWitness& w)
{
  return from.order() == to.order() &&
         satisfies_isotopy(from.order(), from.table(), to.table(), w);
}

bool verify_isomorphism(const RightLoop& from, const RightLoop& to, const Permutation& f)
{
  return verify_isotopy(from, to, IsotopyWitness{f, f, f});
}

// Isomorphism ---------------------------------------------------------------

std::optional<Permutation> are_isomorphic(const RightLoop& a, const RightLoop& b)
{
  if (a.order() != b.order())
    return std::nullopt;
  std::optional<Permutation> found;
  IsoSearch(a, b).run([&](const std::vector<Element>& f) {
    found = f;
    return false;
  });
  if (found && !verify_isomorphism(a, b, *found))
    throw Error(ErrorCode::Internal, "isomorphism search produced an invalid map");
  return found;
}

std::vector<Permutation> all_isomorphisms(const RightLoop& a, const RightLoop& b)
{
  std::vector<Permutation> out;
  if (a.order() != b.order())
    return out;
  IsoSearch(a, b).run([&](const std::vector<Element>& f) {
    if (!verify_isomorphism(a, b, f))
      throw Error(ErrorCode::Internal, "isomorphism search produced an invalid map");
    out.push_back(f);
    return true;
  });
  return out;
}

// Isotopy -------------------------------------------------------------------

PrincipalIsotope principal_isotope(const RightLoop& loop, Element a, Element b)
{
  const auto n = loop.order();
  if (a >= n || b >= n)
    throw Error(ErrorCode::InvalidArgument, "principal isotope index out of range");
  auto row = loop.row(a);
  if (!is_bijection(row))
    throw Error(ErrorCode::NotLeftNonsingular,
                "element " + std::to_string(a) + " is not left non-singular", a);
  Permutation rb_inv = inverse(loop.right_translation(b));
  Permutation la_inv = inverse(Permutation(row.begin(), row.end()));
  Element e = loop.op(a, b);
  Permutation sigma = identity_permutation(n);
  std::swap(sigma[0], sigma[e]);

  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      table[sigma[x] * n + sigma[y]] = sigma[loop.op(rb_inv[x], la_inv[y])];
  std::vector<std::string> names(n);
  for (Element x = 0; x < n; ++x)
    names[sigma[x]] = loop.names()[x];
  return PrincipalIsotope{validate_right_loop(n, std::move(table), std::move(names)),
                          std::move(sigma), a, b};
}

namespace {

/// With P = principal_isotope(L, a, b) and f: M → P an isomorphism,
/// (R_b^{-1} σ f, L_a^{-1} σ f, σ f) is an isotopy M → L.
IsotopyWitness isotopy_through_isotope(const RightLoop& loop, const PrincipalIsotope& p,
                                       const Permutation& f)
{
  Permutation rb_inv = inverse(loop.right_translation(p.b));
  auto row = loop.row(p.a);
  Permutation la_inv = inverse(Permutation(row.begin(), row.end()));
  Permutation sf = product(p.relabel, f);
  return IsotopyWitness{product(rb_inv, sf), product(la_inv, sf), sf};
}

} // namespace

std::optional<IsotopyWitness> are_isotopic(const RightLoop& a, const RightLoop& b)
{
  if (a.order() != b.order())
    return std::nullopt;
  auto lns_a = left_nonsingular_elements(a);
  if (lns_a.size() != left_nonsingular_elements(b).size() ||
      sorted_row_images(a) != sorted_row_images(b))
    return std::nullopt;
  for (Element x : lns_a)
    for (Element y = 0; y < a.order(); ++y) {
      auto p = principal_isotope(a, x, y);
      auto f = are_isomorphic(b, p.loop);
      if (!f)
        continue;
      IsotopyWitness w = inverse(isotopy_through_isotope(a, p, *f));
      if (!verify_isotopy(a, b, w))
        throw Error(ErrorCode::Internal, "composed isotopy witness failed verification");
      return w;
    }
  return std::nullopt;
}

bool brute_force_isotopy_oracle(const RightLoop& a, const RightLoop& b)
{
  const auto n = a.order();
  if (n > kOracleMaxOrder || b.order() > kOracleMaxOrder)
    throw Error(ErrorCode::OrderTooLarge, "isotopy oracle is limited to order " +
                                            std::to_string(kOracleMaxOrder));
  if (n != b.order())
    return false;
  Permutation alpha = identity_permutation(n);
  Permutation beta(n), gamma(n);
  std::vector<char> seen(n);
  auto bijective = [&](const Permutation& p) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element v : p) {
      if (seen[v])
        return false;
      seen[v] = 1;
    }
    return true;
  };
  do {
    Element x0 = static_cast<Element>(std::find(alpha.begin(), alpha.end(), 0) - alpha.begin());
    for (Element c = 0; c < n; ++c) {
      // y = 0 forces gamma(x) = alpha(x) ∘' beta(0).
      for (Element x = 0; x < n; ++x)
        gamma[x] = b.op(alpha[x], c);
      if (!bijective(gamma))
        continue;
      // alpha(x0) = 0 forces beta(y) = gamma(x0 ∘ y).
      for (Element y = 0; y < n; ++y)
        beta[y] = gamma[a.op(x0, y)];
      if (!bijective(beta))
        continue;
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x)
        for (Element y = 0; y < n && ok; ++y)
          ok = b.op(alpha[x], beta[y]) == gamma[a.op(x, y)];
      if (ok)
        return true;
    }
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return false;
}

// Autotopies ----------------------------------------------------------------

IsotopyWitness compose(const IsotopyWitness& outer, const IsotopyWitness& inner)
{
  return IsotopyWitness{product(outer.alpha, inner.alpha), product(outer.beta, inner.beta),
                        product(outer.gamma, inner.gamma)};
}

IsotopyWitness inverse(const IsotopyWitness& w)
{
  return IsotopyWitness{inverse(w.alpha), inverse(w.beta), inverse(w.gamma)};
}

bool is_autotopy(const RightLoop& loop, const IsotopyWitness& w)
{
  return verify_isotopy(loop, loop, w);
}

AutotopyGroup autotopy_group(const RightLoop& loop)
{
  const auto n = loop.order();
  if (n > kAutotopyMaxOrder)
    throw Error(ErrorCode::OrderTooLarge, "autotopy enumeration is limited to order " +
                                            std::to_string(kAutotopyMaxOrder));
  std::set<IsotopyWitness> found;
  for (Element a : left_nonsingular_elements(loop))
    for (Element b = 0; b < n; ++b) {
      auto p = principal_isotope(loop, a, b);
      for (const auto& f : all_isomorphisms(loop, p.loop)) {
        auto w = isotopy_through_isotope(loop, p, f);
        if (!is_autotopy(loop, w))
          throw Error(ErrorCode::Internal, "derived autotopy failed verification");
        found.insert(std::move(w));
      }
    }
  AutotopyGroup g;
  g.autotopies.assign(found.begin(), found.end());
  g.u_size = g.autotopies.size();
  for (const auto& w : g.autotopies) {
    bool a1 = w.alpha[0] == 0, a2 = w.beta[0] == 0;
    g.a1_size += a1;
    g.a2_size += a2;
    g.aut_size += (w.alpha == w.beta && w.beta == w.gamma);
  }
  // Closure under componentwise composition. Large groups are checked on a
  // strided sample of about 2048 x 2048 products.
  const std::size_t stride = std::max<std::size_t>(1, g.u_size / 2048);
  for (std::size_t i = 0; i < g.u_size; i += stride)
    for (std::size_t j = 0; j < g.u_size; j += stride)
      if (!found.count(compose(g.autotopies[i], g.autotopies[j])))
        throw Error(ErrorCode::Internal, "autotopy set is not closed under composition");
  return g;
}

bool pseudo_automorphism_check(const RightLoop& loop, const Permutation& eta, Element c,
                               Side side)
{
  const auto n = loop.order();
  if (eta.size() != n || !is_bijection(eta) || c >= n)
    throw Error(ErrorCode::InvalidArgument, "eta must be a permutation and c an element");
  if (side == Side::Left && !is_bijection(loop.row(c)))
    throw Error(ErrorCode::NotLeftNonsingular,
                "left companion " + std::to_string(c) + " is not left non-singular", c);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element xy = eta[loop.op(x, y)];
      bool ok = side == Side::Right
                  ? loop.op(xy, c) == loop.op(eta[x], loop.op(eta[y], c))
                  : loop.op(c, xy) == loop.op(loop.op(c, eta[x]), eta[y]);
      if (!ok)
        return false;
    }
  return true;
}

IsotopyWitness pseudo_automorphism_autotopy(const RightLoop& loop, const Permutation& eta,
                                            Element c, Side side)
{
  if (side == Side::Right) {
    Permutation rc_eta = product(loop.right_translation(c), eta);
    return IsotopyWitness{eta, rc_eta, rc_eta};
  }
  Permutation lc_eta(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i)
    lc_eta[i] = loop.op(c, eta[i]);
  return IsotopyWitness{lc_eta, eta, lc_eta};
}

bool has_transitive_automorphism_group(const RightLoop& loop)
{
  const auto n = loop.order();
  if (n <= 2)
    return true;
  std::vector<char> orbit(n, 0);
  for (const auto& f : all_isomorphisms(loop, loop))
    orbit[f[1]] = 1;
  return std::all_of(orbit.begin() + 1, orbit.end(), [](char c) { return c != 0; });
}

const char* relation_name(Relation r) noexcept
{
  return r == Relation::Isomorphism ? "iso" : "isotopy";
}

} // namespace nrt
