#include "nrt/nrt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "nrt/affine_burnside.hpp"
#include "nrt/error.hpp"
#include "nrt/isotopy.hpp"
#include "nrt/report.hpp"
#include "nrt/theorem_suite.hpp"
#include "nrt/transversal.hpp"
#include "nrt/zn_b.hpp"

struct nrt_group {
  nrt::GroupPtr group;
};

struct nrt_subgroup {
  nrt::Subgroup subgroup;
};

struct nrt_loop {
  nrt::RightLoop loop;
};

struct nrt_partition {
  nrt::ClassifiedSet set;
};

namespace {

using nlohmann::ordered_json;

/// Largest prime for which `dihedral count` also runs the direct
/// classification of all 2^(p-1) transversals.
constexpr std::size_t kDirectCountMaxPrime = 11;

thread_local std::string last_error;
thread_local std::int64_t last_witness = -1;

nrt_status status_of(nrt::ErrorCode code)
{
  using nrt::ErrorCode;
  switch (code) {
  case ErrorCode::InvalidArgument:
    return NRT_ERR_INVALID_ARGUMENT;
  case ErrorCode::Parse:
    return NRT_ERR_PARSE;
  case ErrorCode::NotSubgroup:
    return NRT_ERR_NOT_SUBGROUP;
  case ErrorCode::NotNormal:
    return NRT_ERR_NOT_NORMAL;
  case ErrorCode::EnumerationTooLarge:
    return NRT_ERR_ENUMERATION_TOO_LARGE;
  case ErrorCode::NotIdentity:
    return NRT_ERR_NOT_IDENTITY;
  case ErrorCode::ColumnNotBijective:
    return NRT_ERR_COLUMN_NOT_BIJECTIVE;
  case ErrorCode::NotLeftNonsingular:
    return NRT_ERR_NOT_LEFT_NONSINGULAR;
  case ErrorCode::OrderTooLarge:
    return NRT_ERR_ORDER_TOO_LARGE;
  case ErrorCode::NotPrime:
    return NRT_ERR_NOT_PRIME;
  case ErrorCode::Internal:
    return NRT_ERR_INTERNAL;
  }
  return NRT_ERR_INTERNAL;
}

nrt_status set_error(nrt_status status, const std::string& message)
{
  last_error = message;
  return status;
}

template <typename F>
nrt_status guarded(F&& body)
{
  last_error.clear();
  last_witness = -1;
  try {
    body();
    return NRT_OK;
  } catch (const nrt::Error& e) {
    if (e.witness())
      last_witness = *e.witness();
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(NRT_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(NRT_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(NRT_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* what)
{
  if (!p)
    throw nrt::Error(nrt::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char* copy_string(const std::string& s)
{
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nrt::Format format_of(nrt_format f)
{
  switch (f) {
  case NRT_FORMAT_TABLE:
    return nrt::Format::Table;
  case NRT_FORMAT_JSON:
    return nrt::Format::Json;
  case NRT_FORMAT_CSV:
    return nrt::Format::Csv;
  }
  throw nrt::Error(nrt::ErrorCode::InvalidArgument, "unknown output format");
}

void require_odd_prime(std::size_t p)
{
  if (p % 2 == 0 || !nrt::is_prime(p))
    throw nrt::Error(nrt::ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
}

std::string dihedral_count(std::size_t p, nrt::Format format, std::uint64_t cap, unsigned jobs,
                           bool& consistent)
{
  require_odd_prime(p);
  const std::uint64_t formula = nrt::itp_count_formula(p);
  std::optional<std::uint64_t> burnside, direct;
  if (p <= 23)
    burnside = nrt::subset_orbit_count(p) / 2;
  std::size_t transversals = 0;
  if (p <= kDirectCountMaxPrime) {
    auto cosets = nrt::dihedral_reflection_cosets(p);
    std::vector<nrt::RightLoop> loops;
    nrt::for_each_transversal(cosets, cap, [&](const nrt::Transversal& t) {
      loops.push_back(nrt::induced_right_loop(t));
    });
    transversals = loops.size();
    direct = nrt::classify(loops, nrt::Relation::Isotopy, nrt::ClassifyOptions{jobs})
               .classes.size();
  }
  consistent = (!burnside || *burnside == formula) && (!direct || *direct == formula);

  if (format == nrt::Format::Json) {
    ordered_json j{{"p", p}, {"formula", formula}};
    j["burnside"] = burnside ? ordered_json(*burnside) : ordered_json(nullptr);
    j["direct"] = direct ? ordered_json(*direct) : ordered_json(nullptr);
    j["consistent"] = consistent;
    return j.dump(2) + "\n";
  }
  if (format == nrt::Format::Csv) {
    std::string out = "p,formula,burnside,direct,consistent\n";
    out += std::to_string(p) + "," + std::to_string(formula) + "," +
           (burnside ? std::to_string(*burnside) : "") + "," +
           (direct ? std::to_string(*direct) : "") + "," + (consistent ? "true" : "false") + "\n";
    return out;
  }
  std::string out = std::to_string(formula);
  if (burnside)
    out += " = " + std::to_string(*burnside);
  if (direct)
    out += " = " + std::to_string(*direct);
  out += "\n";
  out += "cycle index P(2,...,2)/2: " + std::to_string(formula) + "\n";
  out += "Burnside orbits/2: " +
         (burnside ? std::to_string(*burnside) : std::string("skipped (p > 23)")) + "\n";
  out += "direct classification: " +
         (direct ? std::to_string(*direct) + " classes over " + std::to_string(transversals) +
                     " transversals"
                 : "skipped (p > " + std::to_string(kDirectCountMaxPrime) + ")") +
         "\n";
  if (!consistent)
    out += "MISMATCH\n";
  return out;
}

} // namespace

extern "C" {

const char* nrt_status_name(nrt_status status)
{
  switch (status) {
  case NRT_OK:
    return "ok";
  case NRT_ERR_INVALID_ARGUMENT:
    return "invalid-argument";
  case NRT_ERR_PARSE:
    return "parse";
  case NRT_ERR_NOT_SUBGROUP:
    return "not-subgroup";
  case NRT_ERR_NOT_NORMAL:
    return "not-normal";
  case NRT_ERR_ENUMERATION_TOO_LARGE:
    return "enumeration-too-large";
  case NRT_ERR_NOT_IDENTITY:
    return "not-identity";
  case NRT_ERR_COLUMN_NOT_BIJECTIVE:
    return "column-not-bijective";
  case NRT_ERR_NOT_LEFT_NONSINGULAR:
    return "not-left-nonsingular";
  case NRT_ERR_ORDER_TOO_LARGE:
    return "order-too-large";
  case NRT_ERR_NOT_PRIME:
    return "not-prime";
  case NRT_ERR_INTERNAL:
    return "internal";
  case NRT_ERR_OUT_OF_MEMORY:
    return "out-of-memory";
  }
  return "unknown";
}

const char* nrt_last_error(void)
{
  return last_error.c_str();
}

int64_t nrt_last_error_witness(void)
{
  return last_witness;
}

void nrt_string_free(char* s)
{
  std::free(s);
}

// Groups --------------------------------------------------------------------

nrt_status nrt_group_create(const char* descriptor, nrt_group** out)
{
  return guarded([&] {
    require(descriptor, "descriptor");
    require(out, "out");
    *out = new nrt_group{nrt::build_named_group(descriptor)};
  });
}

void nrt_group_free(nrt_group* g)
{
  delete g;
}

size_t nrt_group_order(const nrt_group* g)
{
  return g ? g->group->order() : 0;
}

nrt_status nrt_group_multiply(const nrt_group* g, uint32_t a, uint32_t b, uint32_t* out)
{
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    if (a >= g->group->order() || b >= g->group->order())
      throw nrt::Error(nrt::ErrorCode::InvalidArgument, "element index out of range");
    *out = g->group->mul(a, b);
  });
}

nrt_status nrt_group_element_name(const nrt_group* g, uint32_t a, char** out)
{
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    if (a >= g->group->order())
      throw nrt::Error(nrt::ErrorCode::InvalidArgument, "element index out of range");
    *out = copy_string(g->group->name(a));
  });
}

nrt_status nrt_group_parse_element(const nrt_group* g, const char* text, uint32_t* out)
{
  return guarded([&] {
    require(g, "group");
    require(text, "text");
    require(out, "out");
    *out = nrt::parse_element(*g->group, text);
  });
}

nrt_status nrt_group_render(const nrt_group* g, nrt_format format, char** out)
{
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = copy_string(nrt::render_group(*g->group, format_of(format)));
  });
}

// Subgroups and transversals ------------------------------------------------

nrt_status nrt_subgroup_create(const nrt_group* g, const char* generators, nrt_subgroup** out)
{
  return guarded([&] {
    require(g, "group");
    require(generators, "generators");
    require(out, "out");
    auto gens = nrt::parse_generators(*g->group, generators);
    *out = new nrt_subgroup{nrt::generated_subgroup(g->group, gens)};
  });
}

void nrt_subgroup_free(nrt_subgroup* h)
{
  delete h;
}

size_t nrt_subgroup_order(const nrt_subgroup* h)
{
  return h ? h->subgroup.order() : 0;
}

size_t nrt_subgroup_index(const nrt_subgroup* h)
{
  return h ? h->subgroup.parent().order() / h->subgroup.order() : 0;
}

int nrt_subgroup_is_normal(const nrt_subgroup* h)
{
  return h && nrt::is_normal(h->subgroup) ? 1 : 0;
}

size_t nrt_subgroup_core_order(const nrt_subgroup* h)
{
  return h ? nrt::core(h->subgroup).order() : 0;
}

nrt_status nrt_subgroup_render(const nrt_subgroup* h, nrt_format format, char** out)
{
  return guarded([&] {
    require(h, "subgroup");
    require(out, "out");
    *out = copy_string(nrt::render_subgroup(h->subgroup, format_of(format)));
  });
}

nrt_status nrt_transversal_count(const nrt_subgroup* h, uint64_t* out)
{
  return guarded([&] {
    require(h, "subgroup");
    require(out, "out");
    auto count = nrt::transversal_count(nrt::right_cosets(h->subgroup));
    if (!count)
      throw nrt::Error(nrt::ErrorCode::EnumerationTooLarge, "transversal count exceeds 2^64");
    *out = *count;
  });
}

nrt_status nrt_transversals_render(const nrt_subgroup* h, uint64_t cap, nrt_format format,
                                   char** out)
{
  return guarded([&] {
    require(h, "subgroup");
    require(out, "out");
    auto ts = nrt::enumerate_transversals(h->subgroup, cap);
    *out = copy_string(nrt::render_transversals(ts, format_of(format)));
  });
}

// Right loops ---------------------------------------------------------------

nrt_status nrt_loop_from_table(size_t order, const uint32_t* table, nrt_loop** out)
{
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    std::vector<nrt::Element> t(table, table + order * order);
    *out = new nrt_loop{nrt::validate_right_loop(order, std::move(t))};
  });
}

nrt_status nrt_loop_parse(const char* text, nrt_loop** out)
{
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in(text);
    *out = new nrt_loop{nrt::parse_right_loop(in)};
  });
}

nrt_status nrt_loop_znb(size_t n, const char* subset, nrt_loop** out)
{
  return guarded([&] {
    require(subset, "subset");
    require(out, "out");
    *out = new nrt_loop{nrt::znb_right_loop(nrt::SubsetB::parse(n, subset))};
  });
}

nrt_status nrt_loop_from_transversal(const nrt_subgroup* h, const char* reps, nrt_loop** out)
{
  return guarded([&] {
    require(h, "subgroup");
    require(reps, "reps");
    require(out, "out");
    auto t = nrt::parse_transversal(nrt::make_cosets(h->subgroup), reps);
    *out = new nrt_loop{nrt::induced_right_loop(t)};
  });
}

void nrt_loop_free(nrt_loop* loop)
{
  delete loop;
}

size_t nrt_loop_order(const nrt_loop* loop)
{
  return loop ? loop->loop.order() : 0;
}

nrt_status nrt_loop_op(const nrt_loop* loop, uint32_t x, uint32_t y, uint32_t* out)
{
  return guarded([&] {
    require(loop, "loop");
    require(out, "out");
    if (x >= loop->loop.order() || y >= loop->loop.order())
      throw nrt::Error(nrt::ErrorCode::InvalidArgument, "element index out of range");
    *out = loop->loop.op(x, y);
  });
}

nrt_status nrt_loop_flags(const nrt_loop* loop, int* is_loop, int* is_group)
{
  return guarded([&] {
    require(loop, "loop");
    auto f = nrt::structure_flags(loop->loop);
    if (is_loop)
      *is_loop = f.is_loop;
    if (is_group)
      *is_group = f.is_group;
  });
}

nrt_status nrt_loop_left_nonsingular(const nrt_loop* loop, uint32_t* out, size_t capacity,
                                     size_t* count)
{
  return guarded([&] {
    require(loop, "loop");
    auto lns = nrt::left_nonsingular_elements(loop->loop);
    if (count)
      *count = lns.size();
    if (out)
      for (std::size_t i = 0; i < lns.size() && i < capacity; ++i)
        out[i] = lns[i];
  });
}

nrt_status nrt_loop_torsion_order(const nrt_loop* loop, uint64_t* out)
{
  return guarded([&] {
    require(loop, "loop");
    require(out, "out");
    *out = nrt::group_torsion(loop->loop).torsion.order();
  });
}

nrt_status nrt_loop_render(const nrt_loop* loop, nrt_format format, char** out)
{
  return guarded([&] {
    require(loop, "loop");
    require(out, "out");
    *out = copy_string(nrt::render_loop(loop->loop, format_of(format)));
  });
}

// Decisions -----------------------------------------------------------------

nrt_status nrt_are_isomorphic(const nrt_loop* a, const nrt_loop* b, int* result, uint32_t* map)
{
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(result, "result");
    auto f = nrt::are_isomorphic(a->loop, b->loop);
    *result = f.has_value();
    if (f && map)
      std::copy(f->begin(), f->end(), map);
  });
}

nrt_status nrt_are_isotopic(const nrt_loop* a, const nrt_loop* b, int* result, uint32_t* alpha,
                            uint32_t* beta, uint32_t* gamma)
{
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(result, "result");
    auto w = nrt::are_isotopic(a->loop, b->loop);
    *result = w.has_value();
    if (!w)
      return;
    if (alpha)
      std::copy(w->alpha.begin(), w->alpha.end(), alpha);
    if (beta)
      std::copy(w->beta.begin(), w->beta.end(), beta);
    if (gamma)
      std::copy(w->gamma.begin(), w->gamma.end(), gamma);
  });
}

nrt_status nrt_isotopy_oracle(const nrt_loop* a, const nrt_loop* b, int* result)
{
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(result, "result");
    *result = nrt::brute_force_isotopy_oracle(a->loop, b->loop);
  });
}

nrt_status nrt_verify_isotopy(const nrt_loop* a, const nrt_loop* b, const uint32_t* alpha,
                              const uint32_t* beta, const uint32_t* gamma, int* result)
{
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(alpha, "alpha");
    require(beta, "beta");
    require(gamma, "gamma");
    require(result, "result");
    const auto n = a->loop.order();
    nrt::IsotopyWitness w{nrt::Permutation(alpha, alpha + n), nrt::Permutation(beta, beta + n),
                          nrt::Permutation(gamma, gamma + n)};
    *result = nrt::verify_isotopy(a->loop, b->loop, w);
  });
}

nrt_status nrt_classify(const nrt_subgroup* h, nrt_relation relation, uint64_t cap,
                        unsigned jobs, nrt_partition** out)
{
  return guarded([&] {
    require(h, "subgroup");
    require(out, "out");
    if (relation != NRT_RELATION_ISOMORPHISM && relation != NRT_RELATION_ISOTOPY)
      throw nrt::Error(nrt::ErrorCode::InvalidArgument, "unknown relation");
    nrt::ClassifiedSet set;
    nrt::for_each_transversal(nrt::make_cosets(h->subgroup), cap,
                              [&](const nrt::Transversal& t) {
                                set.loops.push_back(nrt::induced_right_loop(t));
                                set.labels.push_back(nrt::transversal_text(t));
                              });
    set.partition = nrt::classify(set.loops,
                                  relation == NRT_RELATION_ISOTOPY ? nrt::Relation::Isotopy
                                                                   : nrt::Relation::Isomorphism,
                                  nrt::ClassifyOptions{jobs});
    *out = new nrt_partition{std::move(set)};
  });
}

void nrt_partition_free(nrt_partition* p)
{
  delete p;
}

size_t nrt_partition_class_count(const nrt_partition* p)
{
  return p ? p->set.partition.classes.size() : 0;
}

size_t nrt_partition_item_count(const nrt_partition* p)
{
  return p ? p->set.loops.size() : 0;
}

nrt_status nrt_partition_render(const nrt_partition* p, nrt_format format, char** out)
{
  return guarded([&] {
    require(p, "partition");
    require(out, "out");
    *out = copy_string(nrt::render_partition(p->set, format_of(format)));
  });
}

// Dihedral and counting -----------------------------------------------------

nrt_status nrt_dihedral_render(size_t n, nrt_dihedral_mode mode, nrt_format format,
                               uint64_t cap, unsigned jobs, char** out, int* consistent)
{
  return guarded([&] {
    require(out, "out");
    auto fmt = format_of(format);
    bool ok = true;
    switch (mode) {
    case NRT_DIHEDRAL_COUNT:
      *out = copy_string(dihedral_count(n, fmt, cap, jobs, ok));
      break;
    case NRT_DIHEDRAL_FAMILIES:
      require_odd_prime(n);
      *out = copy_string(nrt::render_families(n, nrt::xb_partition(n), fmt));
      break;
    case NRT_DIHEDRAL_CENSUS:
      *out = copy_string(nrt::render_census(nrt::loop_transversal_census(n, cap), fmt));
      break;
    default:
      throw nrt::Error(nrt::ErrorCode::InvalidArgument, "unknown dihedral mode");
    }
    if (consistent)
      *consistent = ok;
  });
}

nrt_status nrt_itp_count_formula(size_t p, uint64_t* out)
{
  return guarded([&] {
    require(out, "out");
    *out = nrt::itp_count_formula(p);
  });
}

nrt_status nrt_cycle_index_render(size_t p, nrt_format format, char** out)
{
  return guarded([&] {
    require(out, "out");
    auto index = nrt::cycle_index_formula(p);
    if (p <= nrt::kMaxAffinePrime) {
      std::vector<nrt::Permutation> perms;
      for (const auto& f : nrt::affine_maps(p))
        perms.push_back(f.permutation());
      if (!(nrt::cycle_index_bruteforce(perms) == index))
        throw nrt::Error(nrt::ErrorCode::Internal,
                         "closed-form cycle index disagrees with the enumeration");
    }
    *out = copy_string(nrt::render_cycle_index(p, index, format_of(format)));
  });
}

// Theorem suite -------------------------------------------------------------

nrt_status nrt_verify(const char* const* checks, size_t n_checks, const char* catalog_path,
                      size_t p, unsigned jobs, uint64_t cap, nrt_format format, char** out,
                      int* failed)
{
  return guarded([&] {
    require(out, "out");
    if (n_checks > 0)
      require(checks, "checks");
    nrt::SuiteOptions options;
    for (std::size_t i = 0; i < n_checks; ++i) {
      require(checks[i], "check id");
      options.checks.emplace_back(checks[i]);
    }
    if (p != 0)
      options.p = p;
    options.jobs = jobs;
    options.cap = cap;
    auto catalog = catalog_path ? nrt::load_catalog(catalog_path) : nrt::default_catalog();
    auto reports = nrt::run_suite(catalog, options);
    std::string text;
    switch (format_of(format)) {
    case nrt::Format::Json:
      text = nrt::suite_json(reports).dump(2) + "\n";
      break;
    case nrt::Format::Csv:
      text = "check,label,verdict,detail\n";
      for (const auto& r : reports)
        text += r.check + "," + r.label + "," + nrt::verdict_name(r.verdict) + ",\"" + r.detail +
                "\"\n";
      break;
    case nrt::Format::Table:
      text = nrt::suite_table(reports);
      break;
    }
    *out = copy_string(text);
    if (failed)
      *failed = nrt::any_failed(reports);
  });
}

nrt_status nrt_list_checks(char** out)
{
  return guarded([&] {
    require(out, "out");
    std::string text;
    for (const auto& c : nrt::check_catalog())
      text += c.id + " " + c.alias + " " + c.summary + "\n";
    *out = copy_string(text);
  });
}

} // extern "C"
