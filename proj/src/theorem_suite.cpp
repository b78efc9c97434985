#include "nrt/theorem_suite.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include "nrt/affine_burnside.hpp"
#include "nrt/error.hpp"
#include "nrt/isotopy.hpp"
#include "nrt/zn_b.hpp"

namespace nrt {

using json = nlohmann::ordered_json;

namespace {

CatalogEntry entry(std::string label, std::string group, std::string subgroup,
                   CatalogEntry::Expected expected = {})
{
  return CatalogEntry{std::move(label), std::move(group), std::move(subgroup), expected};
}

/// Everything the checks need about one (G, H), computed once.
struct Analysis {
  const CatalogEntry* source = nullptr;
  GroupPtr g;
  std::unique_ptr<Subgroup> h;
  std::unique_ptr<Subgroup> core;
  CosetsPtr cosets;
  std::vector<Transversal> transversals;
  std::vector<RightLoop> loops;
  ClassPartition itp;
  std::optional<ClassPartition> iso;
  bool normal = false;
  std::size_t loop_count = 0;
};

class Suite {
public:
  Suite(const std::vector<CatalogEntry>& catalog, const SuiteOptions& options)
    : catalog_(catalog), options_(options)
  {}

  std::vector<CheckReport> run();

private:
  Analysis& analysis(const CatalogEntry& e);
  const ClassPartition& iso_partition(Analysis& a);
  std::vector<const CatalogEntry*> dihedral_entries();
  std::optional<std::size_t> dihedral_prime(const CatalogEntry& e);

  CheckReport catalog_facts(const CatalogEntry& e);
  CheckReport lns_count_invariance(const CatalogEntry& e);
  CheckReport loop_preservation(const CatalogEntry& e);
  CheckReport quotient_invariance(const CatalogEntry& e);
  CheckReport corefree_single_class(const CatalogEntry& e);
  CheckReport nilpotent_normality(const CatalogEntry& e);
  CheckReport coprime_solvable_normality(const CatalogEntry& e);
  CheckReport squarefree_normality(const CatalogEntry& e);
  CheckReport pseudo_automorphism_autotopy_check(const CatalogEntry& e);
  CheckReport transitive_aut_isomorphic(const CatalogEntry& e);
  CheckReport dihedral_families(const CatalogEntry& e, std::size_t p);
  CheckReport dihedral_count(const CatalogEntry& e, std::size_t p);

  const std::vector<CatalogEntry>& catalog_;
  const SuiteOptions& options_;
  std::map<std::string, std::unique_ptr<Analysis>> cache_;
  std::vector<std::unique_ptr<CatalogEntry>> synthesized_;
};

CheckReport make_report(const std::string& check, const CatalogEntry& e)
{
  CheckReport r;
  r.check = check;
  r.label = e.label;
  return r;
}

void fail(CheckReport& r, std::string counterexample)
{
  r.verdict = Verdict::Fail;
  r.counterexample = std::move(counterexample);
}

std::string yes_no(bool b)
{
  return b ? "yes" : "no";
}

std::string rep_text(const Transversal& t)
{
  return "{" + transversal_text(t) + "}";
}

std::vector<RightLoop> distinct_loops(const std::vector<RightLoop>& loops)
{
  std::set<std::vector<Element>> seen;
  std::vector<RightLoop> out;
  for (const auto& l : loops)
    if (seen.emplace(l.table().begin(), l.table().end()).second)
      out.push_back(l);
  return out;
}

Analysis& Suite::analysis(const CatalogEntry& e)
{
  auto& slot = cache_[e.label + "\n" + e.group + "\n" + e.subgroup];
  if (slot)
    return *slot;
  auto a = std::make_unique<Analysis>();
  a->source = &e;
  a->g = build_named_group(e.group);
  auto gens = parse_generators(*a->g, e.subgroup);
  a->h = std::make_unique<Subgroup>(generated_subgroup(a->g, gens));
  a->core = std::make_unique<Subgroup>(core(*a->h));
  a->normal = is_normal(*a->h);
  a->cosets = make_cosets(*a->h);
  for_each_transversal(a->cosets, options_.cap, [&](const Transversal& t) {
    a->transversals.push_back(t);
    a->loops.push_back(induced_right_loop(t));
  });
  for (const auto& l : a->loops)
    a->loop_count += structure_flags(l).is_loop;
  a->itp = classify(a->loops, Relation::Isotopy, ClassifyOptions{options_.jobs});
  slot = std::move(a);
  return *slot;
}

const ClassPartition& Suite::iso_partition(Analysis& a)
{
  if (!a.iso)
    a.iso = classify(a.loops, Relation::Isomorphism, ClassifyOptions{options_.jobs});
  return *a.iso;
}

std::optional<std::size_t> Suite::dihedral_prime(const CatalogEntry& e)
{
  auto g = build_named_group(e.group);
  if (g->kind() != GroupKind::Dihedral)
    return std::nullopt;
  const auto n = g->parameter();
  if (n % 2 == 0 || !is_prime(n))
    return std::nullopt;
  auto gens = parse_generators(*g, e.subgroup);
  auto h = generated_subgroup(g, gens);
  if (h.members() != std::vector<Element>{0, static_cast<Element>(n)})
    return std::nullopt;
  return n;
}

std::vector<const CatalogEntry*> Suite::dihedral_entries()
{
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog_) {
    auto p = dihedral_prime(e);
    if (p && (!options_.p || *p == *options_.p))
      out.push_back(&e);
  }
  if (options_.p && out.empty()) {
    const auto p = *options_.p;
    if (p % 2 == 0 || !is_prime(p))
      throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
    synthesized_.push_back(std::make_unique<CatalogEntry>(
      entry("d" + std::to_string(2 * p) + "-reflection", "dihedral:" + std::to_string(p), "x")));
    out.push_back(synthesized_.back().get());
  }
  return out;
}

// Checks --------------------------------------------------------------------

CheckReport Suite::catalog_facts(const CatalogEntry& e)
{
  auto r = make_report("catalog-facts", e);
  auto& a = analysis(e);
  const auto& ex = e.expected;
  std::size_t iso_count = (ex.iso ? iso_partition(a).classes.size() : 0);
  r.witness = json{{"transversals", a.loops.size()},
                   {"normal", a.normal},
                   {"itp", a.itp.classes.size()},
                   {"loop_transversals", a.loop_count}};
  if (ex.iso)
    r.witness["iso"] = iso_count;
  std::ostringstream d;
  d << a.loops.size() << " NRTs, normal " << yes_no(a.normal) << ", |Itp| "
    << a.itp.classes.size();
  if (ex.iso)
    d << ", |Iso| " << iso_count;
  d << ", loop transversals " << a.loop_count;
  r.detail = d.str();
  std::vector<std::string> mismatches;
  if (ex.normal && *ex.normal != a.normal)
    mismatches.push_back("normal expected " + yes_no(*ex.normal));
  if (ex.itp && *ex.itp != a.itp.classes.size())
    mismatches.push_back("|Itp| expected " + std::to_string(*ex.itp) + ", computed " +
                         std::to_string(a.itp.classes.size()));
  if (ex.iso && *ex.iso != iso_count)
    mismatches.push_back("|Iso| expected " + std::to_string(*ex.iso) + ", computed " +
                         std::to_string(iso_count));
  if (ex.loop_transversals && *ex.loop_transversals != a.loop_count)
    mismatches.push_back("loop transversals expected " + std::to_string(*ex.loop_transversals) +
                         ", computed " + std::to_string(a.loop_count));
  if (!ex.normal && !ex.itp && !ex.iso && !ex.loop_transversals)
    r.verdict = Verdict::Vacuous;
  if (!mismatches.empty()) {
    std::string joined;
    for (const auto& m : mismatches)
      joined += (joined.empty() ? "" : "; ") + m;
    fail(r, joined);
  }
  return r;
}

CheckReport Suite::lns_count_invariance(const CatalogEntry& e)
{
  auto r = make_report("lns-count-invariance", e);
  auto& a = analysis(e);
  std::size_t pairs = 0;
  for (const auto& cls : a.itp.classes) {
    const auto& base = a.loops[cls.front()];
    auto lns_base = left_nonsingular_elements(base);
    for (std::size_t k = 1; k < cls.size() && r.verdict != Verdict::Fail; ++k) {
      const auto& other = a.loops[cls[k]];
      auto w = are_isotopic(base, other);
      ++pairs;
      // alpha(a) ∘' beta(y) = gamma(a ∘ y), so L'_{alpha(a)} = gamma L_a beta^{-1}.
      std::vector<Element> image;
      if (w)
        for (Element x : lns_base)
          image.push_back(w->alpha[x]);
      std::sort(image.begin(), image.end());
      if (!w || image != left_nonsingular_elements(other))
        fail(r, rep_text(a.transversals[cls.front()]) + " and " +
                  rep_text(a.transversals[cls[k]]) +
                  (w ? ": alpha does not carry left non-singular elements onto each other"
                     : ": same class but no isotopy found"));
    }
  }
  if (pairs == 0 && r.verdict != Verdict::Fail)
    r.verdict = Verdict::Vacuous;
  r.witness = json{{"classes", a.itp.classes.size()}, {"pairs_checked", pairs}};
  r.detail = std::to_string(pairs) + " isotopic pairs, alpha maps left non-singular sets onto each other";
  return r;
}

CheckReport Suite::loop_preservation(const CatalogEntry& e)
{
  auto r = make_report("loop-preservation", e);
  auto& a = analysis(e);
  std::size_t loop_classes = 0;
  for (const auto& cls : a.itp.classes) {
    std::size_t loops = 0;
    for (auto idx : cls)
      loops += structure_flags(a.loops[idx]).is_loop;
    loop_classes += loops > 0;
    if (loops != 0 && loops != cls.size())
      fail(r, "isotopy class of " + rep_text(a.transversals[cls.front()]) + " mixes " +
                std::to_string(loops) + " loops with " + std::to_string(cls.size() - loops) +
                " non-loops");
  }
  if (loop_classes == 0 && r.verdict != Verdict::Fail)
    r.verdict = Verdict::Vacuous;
  r.witness = json{{"classes", a.itp.classes.size()}, {"loop_classes", loop_classes}};
  r.detail = std::to_string(loop_classes) + " of " + std::to_string(a.itp.classes.size()) +
             " classes consist of loops";
  return r;
}

CheckReport Suite::quotient_invariance(const CatalogEntry& e)
{
  auto r = make_report("quotient-invariance", e);
  auto& a = analysis(e);
  auto q = quotient(*a.core);
  std::vector<Element> image;
  for (Element m : a.h->members())
    image.push_back(q.projection[m]);
  Subgroup hq(q.group, image);
  std::vector<RightLoop> qloops;
  std::map<std::vector<Element>, std::size_t> qindex;
  for_each_transversal(make_cosets(hq), options_.cap, [&](const Transversal& t) {
    qindex.emplace(t.reps(), qloops.size());
    qloops.push_back(induced_right_loop(t));
  });
  auto qitp = classify(qloops, Relation::Isotopy, ClassifyOptions{options_.jobs});

  std::vector<std::size_t> fibers(qloops.size(), 0);
  for (std::size_t i = 0; i < a.transversals.size() && r.verdict != Verdict::Fail; ++i) {
    auto proj = project_transversal(a.transversals[i], *a.core, q);
    auto it = qindex.find(proj.transversal.reps());
    if (it == qindex.end()) {
      fail(r, "projection of " + rep_text(a.transversals[i]) + " is not enumerated");
      break;
    }
    ++fibers[it->second];
    if (!verify_isomorphism(a.loops[i], qloops[it->second], proj.position_map))
      fail(r, "projection of " + rep_text(a.transversals[i]) + " is not an isomorphism");
  }
  const bool even_fibers =
    std::all_of(fibers.begin(), fibers.end(), [&](std::size_t f) { return f == fibers.front(); });
  if (r.verdict != Verdict::Fail && !even_fibers)
    fail(r, "projection fibers have unequal sizes");
  if (r.verdict != Verdict::Fail && qitp.classes.size() != a.itp.classes.size())
    fail(r, "|Itp(G,H)| = " + std::to_string(a.itp.classes.size()) + " but |Itp(G/N,H/N)| = " +
              std::to_string(qitp.classes.size()));
  r.witness = json{{"core_order", a.core->order()},
                   {"itp", a.itp.classes.size()},
                   {"itp_quotient", qitp.classes.size()},
                   {"transversals", a.loops.size()},
                   {"quotient_transversals", qloops.size()}};
  r.detail = "|N| = " + std::to_string(a.core->order()) + ", |Itp| " +
             std::to_string(a.itp.classes.size()) + " = " + std::to_string(qitp.classes.size());
  return r;
}

CheckReport Suite::corefree_single_class(const CatalogEntry& e)
{
  auto r = make_report("corefree-single-class", e);
  auto& a = analysis(e);
  r.witness = json{{"core_order", a.core->order()}, {"itp", a.itp.classes.size()}};
  // H = 1 is corefree with a single class, but it is normal; the statement
  // concerns proper non-trivial H.
  if (a.core->order() != 1 || a.h->order() == 1 || a.itp.classes.size() != 1) {
    r.verdict = Verdict::Vacuous;
    r.detail = "hypothesis fails: |core| " + std::to_string(a.core->order()) + ", |Itp| " +
               std::to_string(a.itp.classes.size());
    return r;
  }
  for (std::size_t i = 0; i < a.loops.size() && r.verdict != Verdict::Fail; ++i) {
    if (structure_flags(a.loops[i]).is_loop)
      fail(r, rep_text(a.transversals[i]) + " is a loop transversal");
    else if (generated_subgroup(a.g, a.transversals[i].reps()).order() != a.g->order())
      fail(r, rep_text(a.transversals[i]) + " does not generate G");
  }
  r.detail = "no loop transversal, every NRT generates G";
  return r;
}

namespace {

CheckReport normality_implication(CheckReport r, const Analysis& a, bool hypothesis,
                                  const std::string& hypothesis_text)
{
  const auto itp = a.itp.classes.size();
  r.witness = json{{"hypothesis", hypothesis}, {"itp", itp}, {"normal", a.normal}};
  if (!hypothesis) {
    r.verdict = Verdict::Vacuous;
    r.detail = "hypothesis fails: " + hypothesis_text;
    return r;
  }
  r.detail = hypothesis_text + ", |Itp| " + std::to_string(itp) + ", normal " + yes_no(a.normal);
  if (itp == 1 && !a.normal)
    fail(r, "|Itp| = 1 but H is not normal");
  return r;
}

bool squarefree(std::size_t n)
{
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0)
      return false;
  return true;
}

} // namespace

CheckReport Suite::nilpotent_normality(const CatalogEntry& e)
{
  auto& a = analysis(e);
  return normality_implication(make_report("nilpotent-normality", e), a, is_nilpotent(a.g),
                               "G nilpotent");
}

CheckReport Suite::coprime_solvable_normality(const CatalogEntry& e)
{
  auto& a = analysis(e);
  bool coprime = std::gcd(a.h->order(), a.cosets->index()) == 1;
  return normality_implication(make_report("coprime-solvable-normality", e), a,
                               coprime && is_solvable(a.g), "G solvable, gcd(|H|,[G:H]) = 1");
}

CheckReport Suite::squarefree_normality(const CatalogEntry& e)
{
  auto& a = analysis(e);
  return normality_implication(make_report("squarefree-normality", e), a,
                               squarefree(a.g->order()), "|G| square-free");
}

CheckReport Suite::pseudo_automorphism_autotopy_check(const CatalogEntry& e)
{
  auto r = make_report("pseudo-automorphism-autotopy", e);
  auto& a = analysis(e);
  if (a.cosets->index() > kAutotopyMaxOrder) {
    r.verdict = Verdict::Vacuous;
    r.detail = "index above " + std::to_string(kAutotopyMaxOrder);
    r.witness = json{{"index", a.cosets->index()}};
    return r;
  }
  auto loops = distinct_loops(a.loops);
  std::size_t autotopies = 0, eta_checked = 0;
  auto describe = [](const RightLoop& l) {
    std::string s = "loop table";
    for (Element v : l.table())
      s += " " + std::to_string(v);
    return s;
  };
  for (const auto& loop : loops) {
    if (r.verdict == Verdict::Fail)
      break;
    auto lns = left_nonsingular_elements(loop);
    for (const auto& w : autotopy_group(loop).autotopies) {
      ++autotopies;
      const bool a1 = w.alpha[0] == 0;
      const bool beta_gamma = w.beta == w.gamma;
      const bool right = pseudo_automorphism_check(loop, w.alpha, w.beta[0], Side::Right);
      const bool a2 = w.beta[0] == 0;
      const bool alpha_gamma = w.alpha == w.gamma;
      const bool left = pseudo_automorphism_check(loop, w.beta, w.alpha[0], Side::Left);
      if (a1 != beta_gamma || a1 != right) {
        fail(r, describe(loop) + ": right side disagrees for an autotopy with alpha(0) = " +
                  std::to_string(w.alpha[0]));
        break;
      }
      if (a2 != alpha_gamma || a2 != left) {
        fail(r, describe(loop) + ": left side disagrees for an autotopy with beta(0) = " +
                  std::to_string(w.beta[0]));
        break;
      }
    }
    // The equivalence with the constructed triples, over every permutation
    // at small order.
    const auto n = loop.order();
    if (n > 5 || r.verdict == Verdict::Fail)
      continue;
    Permutation eta = identity_permutation(n);
    do {
      for (Element c = 0; c < n && r.verdict != Verdict::Fail; ++c) {
        ++eta_checked;
        bool right = pseudo_automorphism_check(loop, eta, c, Side::Right);
        if (right != is_autotopy(loop, pseudo_automorphism_autotopy(loop, eta, c, Side::Right)))
          fail(r, describe(loop) + ": right pseudo-automorphism test disagrees with autotopy");
        if (std::binary_search(lns.begin(), lns.end(), c)) {
          bool left = pseudo_automorphism_check(loop, eta, c, Side::Left);
          if (left != is_autotopy(loop, pseudo_automorphism_autotopy(loop, eta, c, Side::Left)))
            fail(r, describe(loop) + ": left pseudo-automorphism test disagrees with autotopy");
        }
      }
    } while (r.verdict != Verdict::Fail && std::next_permutation(eta.begin(), eta.end()));
  }
  r.witness = json{{"loops", loops.size()},
                   {"autotopies", autotopies},
                   {"permutation_companion_pairs", eta_checked}};
  r.detail = std::to_string(loops.size()) + " loops, " + std::to_string(autotopies) +
             " autotopies, " + std::to_string(eta_checked) + " (eta, c) pairs";
  return r;
}

CheckReport Suite::transitive_aut_isomorphic(const CatalogEntry& e)
{
  auto r = make_report("transitive-aut-isomorphic", e);
  auto& a = analysis(e);
  const auto& iso = iso_partition(a);
  std::vector<char> transitive(iso.classes.size());
  for (std::size_t c = 0; c < iso.classes.size(); ++c)
    transitive[c] = has_transitive_automorphism_group(a.loops[iso.representatives[c]]);
  std::size_t pairs = 0;
  for (const auto& cls : a.itp.classes) {
    std::vector<std::size_t> members;
    for (auto idx : cls)
      if (transitive[iso.class_of[idx]])
        members.push_back(idx);
    if (members.size() < 2)
      continue;
    pairs += members.size() * (members.size() - 1) / 2;
    for (auto idx : members)
      if (iso.class_of[idx] != iso.class_of[members.front()] && r.verdict != Verdict::Fail)
        fail(r, rep_text(a.transversals[members.front()]) + " and " +
                  rep_text(a.transversals[idx]) +
                  " are isotopic with transitive automorphism groups but not isomorphic");
  }
  if (pairs == 0)
    r.verdict = Verdict::Vacuous;
  std::size_t transitive_classes =
    static_cast<std::size_t>(std::count(transitive.begin(), transitive.end(), 1));
  r.witness = json{{"iso_classes", iso.classes.size()},
                   {"transitive_iso_classes", transitive_classes},
                   {"isotopic_transitive_pairs", pairs}};
  r.detail = std::to_string(pairs) + " isotopic pairs with transitive Aut, " +
             std::to_string(transitive_classes) + " transitive iso classes";
  return r;
}

CheckReport Suite::dihedral_families(const CatalogEntry& e, std::size_t p)
{
  auto r = make_report("dihedral-families", e);
  auto cosets = dihedral_reflection_cosets(p);
  std::vector<SubsetB> subsets;
  std::vector<RightLoop> loops;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (p - 1)); ++bits) {
    auto b = SubsetB::from_mask(p, bits << 1);
    auto loop = znb_right_loop(b);
    if (!(induced_right_loop(transversal_from_subset(cosets, b)) == loop)) {
      fail(r, "T_B for B = " + b.text() + " does not induce Z_p^B");
      return r;
    }
    subsets.push_back(b);
    loops.push_back(std::move(loop));
  }
  auto part = classify(loops, Relation::Isotopy, ClassifyOptions{options_.jobs});
  for (std::size_t i = 0; i < subsets.size() && r.verdict != Verdict::Fail; ++i) {
    std::vector<SubsetB> isotopic;
    for (auto idx : part.classes[part.class_of[i]])
      isotopic.push_back(subsets[idx]);
    std::sort(isotopic.begin(), isotopic.end());
    auto family = xb_family(p, subsets[i]);
    if (family != isotopic)
      fail(r, "B = " + subsets[i].text() + ": X_B has " + std::to_string(family.size()) +
                " sets, isotopy class has " + std::to_string(isotopic.size()));
  }
  r.witness = json{{"p", p}, {"subsets", subsets.size()}, {"classes", part.classes.size()}};
  r.detail = "p = " + std::to_string(p) + ": " + std::to_string(subsets.size()) +
             " subsets, isotopy classes equal X_B families";
  return r;
}

CheckReport Suite::dihedral_count(const CatalogEntry& e, std::size_t p)
{
  auto r = make_report("dihedral-count", e);
  auto& a = analysis(e);
  const std::size_t direct = a.itp.classes.size();
  const std::size_t formula = itp_count_formula(p);
  const std::size_t families = xb_partition(p).size();
  std::optional<std::size_t> burnside;
  if (p <= 23)
    burnside = subset_orbit_count(p) / 2;
  r.witness = json{{"p", p}, {"direct", direct}, {"formula", formula}, {"families", families}};
  if (burnside)
    r.witness["burnside"] = *burnside;
  r.detail = "p = " + std::to_string(p) + ": " + std::to_string(direct) + " = " +
             std::to_string(formula) + " = " + std::to_string(families);
  if (burnside)
    r.detail += " = " + std::to_string(*burnside);
  if (direct != formula || families != formula || (burnside && *burnside != formula))
    fail(r, "counts disagree: direct " + std::to_string(direct) + ", formula " +
              std::to_string(formula) + ", families " + std::to_string(families));
  return r;
}

std::vector<CheckReport> Suite::run()
{
  std::vector<std::string> wanted;
  for (const auto& c : options_.checks)
    wanted.push_back(resolve_check_id(c));
  auto selected = [&](const std::string& id) {
    return wanted.empty() || std::find(wanted.begin(), wanted.end(), id) != wanted.end();
  };

  std::vector<CheckReport> out;
  using EntryCheck = CheckReport (Suite::*)(const CatalogEntry&);
  const std::vector<std::pair<std::string, EntryCheck>> per_entry{
    {"catalog-facts", &Suite::catalog_facts},
    {"lns-count-invariance", &Suite::lns_count_invariance},
    {"loop-preservation", &Suite::loop_preservation},
    {"quotient-invariance", &Suite::quotient_invariance},
    {"corefree-single-class", &Suite::corefree_single_class},
    {"nilpotent-normality", &Suite::nilpotent_normality},
    {"coprime-solvable-normality", &Suite::coprime_solvable_normality},
    {"squarefree-normality", &Suite::squarefree_normality},
    {"pseudo-automorphism-autotopy", &Suite::pseudo_automorphism_autotopy_check},
    {"transitive-aut-isomorphic", &Suite::transitive_aut_isomorphic},
  };
  for (const auto& [id, fn] : per_entry)
    if (selected(id))
      for (const auto& e : catalog_)
        out.push_back((this->*fn)(e));
  using DihedralCheck = CheckReport (Suite::*)(const CatalogEntry&, std::size_t);
  const std::vector<std::pair<std::string, DihedralCheck>> dihedral{
    {"dihedral-families", &Suite::dihedral_families},
    {"dihedral-count", &Suite::dihedral_count},
  };
  for (const auto& [id, fn] : dihedral)
    if (selected(id))
      for (const auto* e : dihedral_entries())
        out.push_back((this->*fn)(*e, *dihedral_prime(*e)));
  return out;
}

std::optional<bool> optional_bool(const json& j, const char* key)
{
  if (!j.contains(key) || j[key].is_null())
    return std::nullopt;
  if (!j[key].is_boolean())
    throw Error(ErrorCode::Parse, std::string("catalog field '") + key + "' must be a boolean");
  return j[key].get<bool>();
}

std::optional<std::size_t> optional_count(const json& j, const char* key)
{
  if (!j.contains(key) || j[key].is_null())
    return std::nullopt;
  if (!j[key].is_number_unsigned())
    throw Error(ErrorCode::Parse,
                std::string("catalog field '") + key + "' must be a non-negative integer");
  return j[key].get<std::size_t>();
}

} // namespace

std::vector<CatalogEntry> default_catalog()
{
  using Ex = CatalogEntry::Expected;
  return {
    entry("sym3-transposition", "sym:3", "(2,3)", Ex{false, 2, 3, 1}),
    entry("sym3-rotation", "sym:3", "(1,2,3)", Ex{true, 1, 1, 3}),
    entry("alt4-double-transposition", "alt:4", "(1,2)(3,4)", Ex{false, 2, 5, {}}),
    entry("d6-reflection", "dihedral:3", "x", Ex{false, 2, {}, 1}),
    entry("d8-reflection", "dihedral:4", "x", Ex{false, {}, {}, 2}),
    entry("d10-reflection", "dihedral:5", "x", Ex{false, 3, {}, 1}),
    entry("d12-reflection", "dihedral:6", "x", Ex{false, {}, {}, 2}),
    entry("d14-reflection", "dihedral:7", "x", Ex{false, 5, {}, 1}),
    entry("d12-central-rotation", "dihedral:6", "y^3", Ex{true, 1, 1, {}}),
    entry("d12-reflection-with-center", "dihedral:6", "x;y^3", Ex{false, 2, {}, {}}),
    entry("d10-rotations", "dihedral:5", "y", Ex{true, 1, 1, 5}),
    entry("cyclic6-order2", "cyclic:6", "3", Ex{true, 1, 1, 4}),
    entry("sym4-point-stabilizer", "sym:4", "(1,2);(1,2,3)", Ex{false, {}, {}, {}}),
  };
}

std::vector<CatalogEntry> parse_catalog(std::string_view json_text)
{
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorCode::Parse, std::string("catalog is not valid JSON: ") + ex.what());
  }
  if (!doc.is_array())
    throw Error(ErrorCode::Parse, "catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  for (const auto& item : doc) {
    if (!item.is_object())
      throw Error(ErrorCode::Parse, "catalog entries must be objects");
    for (const char* key : {"label", "group", "subgroup"})
      if (!item.contains(key) || !item[key].is_string())
        throw Error(ErrorCode::Parse, std::string("catalog entry needs a string '") + key + "'");
    CatalogEntry e{item["label"].get<std::string>(), item["group"].get<std::string>(),
                   item["subgroup"].get<std::string>(), {}};
    if (item.contains("expected")) {
      const auto& ex = item["expected"];
      if (!ex.is_object())
        throw Error(ErrorCode::Parse, "'expected' must be an object");
      e.expected.normal = optional_bool(ex, "normal");
      e.expected.itp = optional_count(ex, "itp");
      e.expected.iso = optional_count(ex, "iso");
      e.expected.loop_transversals = optional_count(ex, "loop_transversals");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::InvalidArgument, "cannot open catalog file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

const std::vector<CheckInfo>& check_catalog()
{
  static const std::vector<CheckInfo> checks{
    {"catalog-facts", "facts", "expected facts attached to catalog entries"},
    {"lns-count-invariance", "prop3.2", "isotopies biject left non-singular elements"},
    {"loop-preservation", "cor3.2", "a right loop isotopic to a loop is a loop"},
    {"quotient-invariance", "prop3.3", "|Itp(G,H)| = |Itp(G/N,H/N)| for N the core"},
    {"corefree-single-class", "prop3.5",
     "corefree H with one class: no loop transversal, every NRT generates G"},
    {"nilpotent-normality", "prop3.7", "G nilpotent and |Itp| = 1 imply H normal"},
    {"coprime-solvable-normality", "prop3.8",
     "G solvable, gcd(|H|,[G:H]) = 1 and |Itp| = 1 imply H normal"},
    {"squarefree-normality", "cor3.8", "|G| square-free and |Itp| = 1 imply H normal"},
    {"pseudo-automorphism-autotopy", "prop3.9",
     "pseudo-automorphisms correspond to autotopies with a fixed coordinate"},
    {"transitive-aut-isomorphic", "thm3.12",
     "isotopic right loops with transitive automorphism groups are isomorphic"},
    {"dihedral-families", "thm4.1", "isotopy classes of T_B in D_2p are the families X_B"},
    {"dihedral-count", "thm4.2", "|Itp(D_2p,{1,x})| = P(2,...,2)/2"},
  };
  return checks;
}

std::string resolve_check_id(std::string_view name)
{
  for (const auto& c : check_catalog())
    if (name == c.id || name == c.alias)
      return c.id;
  throw Error(ErrorCode::InvalidArgument, "unknown check '" + std::string(name) + "'");
}

const char* verdict_name(Verdict v) noexcept
{
  switch (v) {
  case Verdict::Pass:
    return "pass";
  case Verdict::Fail:
    return "fail";
  case Verdict::Vacuous:
    return "vacuous";
  }
  return "?";
}

std::vector<CheckReport> run_suite(const std::vector<CatalogEntry>& catalog,
                                   const SuiteOptions& options)
{
  return Suite(catalog, options).run();
}

bool any_failed(const std::vector<CheckReport>& reports) noexcept
{
  return std::any_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.verdict == Verdict::Fail; });
}

std::string suite_table(const std::vector<CheckReport>& reports)
{
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w)
      s.append(w - s.size(), ' ');
    return s;
  };
  std::size_t wc = 5, wl = 5;
  for (const auto& r : reports) {
    wc = std::max(wc, r.check.size());
    wl = std::max(wl, r.label.size());
  }
  std::string out = pad("check", wc) + "  " + pad("entry", wl) + "  verdict  detail\n";
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : reports) {
    ++counts[static_cast<int>(r.verdict)];
    out += pad(r.check, wc) + "  " + pad(r.label, wl) + "  " + pad(verdict_name(r.verdict), 7) +
           "  " + r.detail + "\n";
    if (r.verdict == Verdict::Fail)
      out += "  counterexample: " + r.counterexample + "\n";
  }
  out += std::to_string(counts[0]) + " pass, " + std::to_string(counts[1]) + " fail, " +
         std::to_string(counts[2]) + " vacuous\n";
  return out;
}

json suite_json(const std::vector<CheckReport>& reports)
{
  json arr = json::array();
  for (const auto& r : reports) {
    json j{{"check", r.check},
           {"label", r.label},
           {"verdict", verdict_name(r.verdict)},
           {"detail", r.detail},
           {"witness", r.witness}};
    if (r.verdict == Verdict::Fail)
      j["counterexample"] = r.counterexample;
    arr.push_back(std::move(j));
  }
  return arr;
}

} // namespace nrt
