// Command-line front end. Talks to the library only through nrt.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrt/nrt.h"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kCapExceeded = 3, kInternal = 4 };

/// Thrown after a library call fails; carries the process exit code.
struct Failure {
  int code;
};

int exit_code_of(nrt_status s)
{
  switch (s) {
  case NRT_OK:
    return kOk;
  case NRT_ERR_ENUMERATION_TOO_LARGE:
    return kCapExceeded;
  case NRT_ERR_INTERNAL:
  case NRT_ERR_OUT_OF_MEMORY:
    return kInternal;
  default:
    return kBadInput;
  }
}

void check(nrt_status s)
{
  if (s == NRT_OK)
    return;
  std::cerr << "error (" << nrt_status_name(s) << "): " << nrt_last_error() << "\n";
  throw Failure{exit_code_of(s)};
}

class Output {
public:
  explicit Output(const std::string& path)
  {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        std::cerr << "error: cannot write " << path << "\n";
        throw Failure{kBadInput};
      }
    }
  }
  void write(char* text)
  {
    (file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout) << text;
    nrt_string_free(text);
  }

private:
  std::ofstream file_;
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Group = Handle<nrt_group, nrt_group_free>;
using SubgroupH = Handle<nrt_subgroup, nrt_subgroup_free>;
using Loop = Handle<nrt_loop, nrt_loop_free>;
using Partition = Handle<nrt_partition, nrt_partition_free>;

const std::map<std::string, nrt_format> kFormats{
  {"table", NRT_FORMAT_TABLE}, {"json", NRT_FORMAT_JSON}, {"csv", NRT_FORMAT_CSV}};

struct Common {
  std::string format = "table";
  std::string output;
  std::uint64_t cap = NRT_DEFAULT_CAP;
  unsigned jobs = 1;
};

void add_format(CLI::App* cmd, Common& c)
{
  cmd->add_option("--format", c.format, "Output format")
    ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("-o,--output", c.output, "Write output to a file instead of stdout");
}

void add_cap(CLI::App* cmd, Common& c)
{
  cmd->add_option("--cap", c.cap, "Largest number of transversals to enumerate")
    ->check(CLI::PositiveNumber);
}

void add_jobs(CLI::App* cmd, Common& c)
{
  cmd->add_option("--jobs", c.jobs, "Worker threads for classification")
    ->check(CLI::Range(1u, 256u));
}

void make_subgroup(const std::string& group, const std::string& subgroup, Group& g, SubgroupH& h)
{
  check(nrt_group_create(group.c_str(), &g.p));
  check(nrt_subgroup_create(g.p, subgroup.c_str(), &h.p));
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Normalized right transversals, their right loops, and isotopy classes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nrt 1.0.0");
  Common common;

  // group show
  std::string group_desc, subgroup_gens;
  bool have_subgroup = false;
  auto* group_cmd = app.add_subcommand("group", "Inspect a group");
  group_cmd->require_subcommand(1);
  auto* group_show = group_cmd->add_subcommand("show", "Print a group and optionally a subgroup");
  group_show->add_option("--group", group_desc, "cyclic:n | dihedral:n | sym:k | alt:k | file:path")
    ->required();
  auto* sub_opt = group_show->add_option("--subgroup", subgroup_gens,
                                         "Generators separated by ';'");
  add_format(group_show, common);

  // nrt enumerate
  auto* nrt_cmd = app.add_subcommand("nrt", "Normalized right transversals");
  nrt_cmd->require_subcommand(1);
  auto* enumerate = nrt_cmd->add_subcommand("enumerate", "List every transversal of H in G");
  enumerate->add_option("--group", group_desc)->required();
  enumerate->add_option("--subgroup", subgroup_gens)->required();
  add_format(enumerate, common);
  add_cap(enumerate, common);

  // classify
  std::string relation = "isotopy";
  auto* classify = app.add_subcommand("classify", "Classify T(G,H) by isomorphism or isotopy");
  classify->add_option("--group", group_desc)->required();
  classify->add_option("--subgroup", subgroup_gens)->required();
  classify->add_option("--relation", relation)->check(CLI::IsMember({"iso", "isotopy"}));
  add_format(classify, common);
  add_cap(classify, common);
  add_jobs(classify, common);

  // loop show
  std::size_t znb_n = 0;
  std::string subset_b, reps;
  auto* loop_cmd = app.add_subcommand("loop", "Right loops");
  loop_cmd->require_subcommand(1);
  auto* loop_show = loop_cmd->add_subcommand("show", "Print Z_n^B or the loop of a transversal");
  auto* znb_opt = loop_show->add_option("--n", znb_n, "Modulus of Z_n^B")->check(CLI::PositiveNumber);
  loop_show->add_option("--B", subset_b, "Subset B, e.g. 1,3,5")->needs(znb_opt);
  auto* loop_group = loop_show->add_option("--group", group_desc);
  loop_show->add_option("--subgroup", subgroup_gens)->needs(loop_group);
  auto* reps_opt = loop_show->add_option("--reps", reps, "Transversal, comma-separated names")
                     ->needs(loop_group);
  znb_opt->excludes(loop_group);
  add_format(loop_show, common);

  // dihedral
  std::size_t dihedral_p = 0, dihedral_n = 0;
  std::string mode;
  auto* dihedral = app.add_subcommand("dihedral", "Transversals of {1,x} in D_2n");
  auto* p_opt = dihedral->add_option("--p", dihedral_p, "Odd prime")->check(CLI::PositiveNumber);
  auto* n_opt = dihedral->add_option("--n", dihedral_n, "Modulus")->check(CLI::PositiveNumber);
  p_opt->excludes(n_opt);
  dihedral->add_option("mode", mode, "count | families | census")
    ->required()
    ->check(CLI::IsMember({"count", "families", "census"}));
  add_format(dihedral, common);
  add_cap(dihedral, common);
  add_jobs(dihedral, common);

  // cycle-index
  std::size_t ci_p = 0;
  auto* cycle_index = app.add_subcommand("cycle-index", "Cycle index of Aff(1,p)");
  cycle_index->add_option("--p", ci_p, "Prime")->required();
  add_format(cycle_index, common);

  // verify
  bool verify_all = false, list_checks = false;
  std::vector<std::string> check_ids;
  std::string catalog_path;
  std::size_t verify_p = 0;
  auto* verify = app.add_subcommand("verify", "Run the theorem checks over a catalog");
  auto* all_flag = verify->add_flag("--all", verify_all, "Run every check (the default)");
  auto* check_opt = verify->add_option("--check", check_ids, "Check id or alias; repeatable");
  all_flag->excludes(check_opt);
  verify->add_flag("--list", list_checks, "List check ids and aliases");
  verify->add_option("--p", verify_p, "Restrict the dihedral checks to D_2p")
    ->check(CLI::PositiveNumber);
  verify->add_option("--catalog", catalog_path, "JSON catalog file")->check(CLI::ExistingFile);
  add_format(verify, common);
  add_cap(verify, common);
  add_jobs(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    Output out(common.output);
    const nrt_format fmt = kFormats.at(common.format);
    char* text = nullptr;

    if (*group_show) {
      Group g;
      check(nrt_group_create(group_desc.c_str(), &g.p));
      have_subgroup = sub_opt->count() > 0;
      if (have_subgroup) {
        SubgroupH h;
        check(nrt_subgroup_create(g.p, subgroup_gens.c_str(), &h.p));
        if (fmt == NRT_FORMAT_TABLE) {
          check(nrt_group_render(g.p, fmt, &text));
          out.write(text);
        }
        check(nrt_subgroup_render(h.p, fmt, &text));
      } else {
        check(nrt_group_render(g.p, fmt, &text));
      }
      out.write(text);
    } else if (*enumerate) {
      Group g;
      SubgroupH h;
      make_subgroup(group_desc, subgroup_gens, g, h);
      check(nrt_transversals_render(h.p, common.cap, fmt, &text));
      out.write(text);
    } else if (*classify) {
      Group g;
      SubgroupH h;
      make_subgroup(group_desc, subgroup_gens, g, h);
      Partition part;
      check(nrt_classify(h.p, relation == "iso" ? NRT_RELATION_ISOMORPHISM : NRT_RELATION_ISOTOPY,
                         common.cap, common.jobs, &part.p));
      check(nrt_partition_render(part.p, fmt, &text));
      out.write(text);
    } else if (*loop_show) {
      Loop loop;
      if (znb_opt->count()) {
        check(nrt_loop_znb(znb_n, subset_b.c_str(), &loop.p));
      } else if (reps_opt->count()) {
        Group g;
        SubgroupH h;
        make_subgroup(group_desc, subgroup_gens, g, h);
        check(nrt_loop_from_transversal(h.p, reps.c_str(), &loop.p));
      } else {
        std::cerr << "error: loop show needs --n [--B] or --group --subgroup --reps\n";
        return kBadInput;
      }
      check(nrt_loop_render(loop.p, fmt, &text));
      out.write(text);
    } else if (*dihedral) {
      nrt_dihedral_mode m = mode == "count"      ? NRT_DIHEDRAL_COUNT
                            : mode == "families" ? NRT_DIHEDRAL_FAMILIES
                                                 : NRT_DIHEDRAL_CENSUS;
      std::size_t n = p_opt->count() ? dihedral_p : dihedral_n;
      if (n == 0) {
        std::cerr << "error: dihedral needs --p or --n\n";
        return kBadInput;
      }
      int consistent = 1;
      check(nrt_dihedral_render(n, m, fmt, common.cap, common.jobs, &text, &consistent));
      out.write(text);
      if (!consistent)
        return kCheckFailed;
    } else if (*cycle_index) {
      check(nrt_cycle_index_render(ci_p, fmt, &text));
      out.write(text);
    } else if (*verify) {
      if (list_checks) {
        check(nrt_list_checks(&text));
        out.write(text);
        return kOk;
      }
      std::vector<const char*> ids;
      for (const auto& id : check_ids)
        ids.push_back(id.c_str());
      int failed = 0;
      check(nrt_verify(ids.data(), ids.size(), catalog_path.empty() ? nullptr : catalog_path.c_str(),
                       verify_p, common.jobs, common.cap, fmt, &text, &failed));
      out.write(text);
      if (failed)
        return kCheckFailed;
    } else {
      std::cerr << app.help();
      return kBadInput;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kOk;
}
