// Command line front end: classify, census, sample, bounds, unlabeled.

#include "cayley/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cayley/errors.hpp"
#include "cayley/report_json.hpp"

namespace cayley {

namespace {

struct CommonOpts {
  std::string group;
  std::string mode = "digraph";
  std::string format = "json";
  std::string out_path;
  unsigned jobs = 0;
  unsigned limit = 0;
  bool force = false;
};

unsigned default_jobs_from_env() {
  if (const char* env = std::getenv("CAYLEY_CENSUS_JOBS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 1024) return static_cast<unsigned>(v);
  }
  return 0;
}

void write_output(const std::string& text, const CommonOpts& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open output file '" + o.out_path + "'");
  f << text;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_mode = true, bool with_census_opts = false) {
  cmd->add_option("--group", o.group, "group spec: comma-separated factors, e.g. 2,4")->required();
  if (with_mode)
    cmd->add_option("--mode", o.mode, "digraph or graph")
        ->check(CLI::IsMember({"digraph", "graph"}));
  cmd->add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out_path, "write output to file instead of stdout");
  if (with_census_opts) {
    cmd->add_option("--jobs", o.jobs, "worker count (default: CAYLEY_CENSUS_JOBS or hardware)");
    cmd->add_option("--limit", o.limit, "override the group-order guard");
    cmd->add_flag("--force", o.force, "run past the default guard (may take hours)");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley (di)graphs on finite abelian groups: automorphism census tools"};
  app.require_subcommand(1);

  CommonOpts classify_o, census_o, sample_o, unlabeled_o;
  std::string classify_set;
  std::uint64_t trials = 1000, seed = kDefaultSeed;
  unsigned bounds_n = 0, bounds_m = 0;
  std::string bounds_out, bounds_format = "json";

  CLI::App* c_classify = app.add_subcommand("classify", "classify one connection set");
  add_common(c_classify, classify_o);
  c_classify->add_option("--set", classify_set, "connection set: indices '1,3' or mask '0xA'")
      ->required();

  CLI::App* c_census = app.add_subcommand("census", "exhaustive census of all connection sets");
  add_common(c_census, census_o, true, true);

  CLI::App* c_sample = app.add_subcommand("sample", "uniform sampling census");
  add_common(c_sample, sample_o, true, true);
  c_sample->add_option("--trials", trials, "number of samples");
  c_sample->add_option("--seed", seed, "sampling seed (fixed default for reproducibility)");

  CLI::App* c_bounds = app.add_subcommand("bounds", "evaluate the bound exponents");
  c_bounds->add_option("--n", bounds_n, "group order")->required();
  c_bounds->add_option("--m", bounds_m, "number of elements of order <= 2")->required();
  c_bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"json", "text"}));
  c_bounds->add_option("--out", bounds_out);

  CLI::App* c_unlabeled = app.add_subcommand("unlabeled", "isomorphism-class census");
  add_common(c_unlabeled, unlabeled_o, true, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_classify) {
      AbelianGroup g = parse_group(classify_o.group);
      Bitset s = parse_connection_set(g, classify_set);
      Mode mode = parse_mode(classify_o.mode);
      if (mode == Mode::graph && !is_inverse_closed(g, s))
        throw InvalidInput("set not inverse-closed");
      GroupContext ctx(g);
      Classification c = classify(ctx, s, mode);
      write_output(classify_o.format == "text" ? classification_text(ctx, s, mode, c)
                                               : dump_json(classification_json(ctx, s, mode, c)),
                   classify_o, out);
      return 0;
    }
    if (*c_census) {
      AbelianGroup g = parse_group(census_o.group);
      Mode mode = parse_mode(census_o.mode);
      GroupContext ctx(g);
      CensusOptions opts;
      opts.jobs = census_o.jobs ? census_o.jobs : default_jobs_from_env();
      opts.limit = census_o.limit;
      opts.force = census_o.force;
      CensusReport rep = exact_census(ctx, mode, opts);
      std::string text = census_o.format == "csv"    ? census_csv(rep)
                         : census_o.format == "text" ? census_text(rep)
                                                     : dump_json(census_json(rep));
      write_output(text, census_o, out);
      if (!rep.violations.empty()) {
        err << "dichotomy violated; minimal offending subset mask 0x" << std::hex
            << rep.violations.front() << std::dec << "\n";
        return 1;
      }
      return 0;
    }
    if (*c_sample) {
      AbelianGroup g = parse_group(sample_o.group);
      Mode mode = parse_mode(sample_o.mode);
      ContextOptions copts;
      copts.subgroup_data = false;
      copts.automorphism_data = false;
      GroupContext ctx(g, copts);
      unsigned jobs = sample_o.jobs ? sample_o.jobs : default_jobs_from_env();
      SampleReport rep = sample_census(ctx, mode, trials, seed, jobs);
      write_output(sample_o.format == "csv" ? sample_csv(rep) : dump_json(sample_json(rep)),
                   sample_o, out);
      return 0;
    }
    if (*c_bounds) {
      CommonOpts o;
      o.format = bounds_format;
      o.out_path = bounds_out;
      write_output(dump_json(bounds_json(bounds_n, bounds_m)), o, out);
      return 0;
    }
    if (*c_unlabeled) {
      AbelianGroup g = parse_group(unlabeled_o.group);
      Mode mode = parse_mode(unlabeled_o.mode);
      GroupContext ctx(g);
      CensusOptions opts;
      opts.jobs = unlabeled_o.jobs ? unlabeled_o.jobs : default_jobs_from_env();
      opts.limit = unlabeled_o.limit;
      opts.force = unlabeled_o.force;
      UnlabeledReport rep = unlabeled_census(ctx, mode, opts);
      write_output(dump_json(unlabeled_json(rep)), unlabeled_o, out);
      return 0;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    err << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const CheckFailure& e) {
    err << "verified statement FAILED: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cayley
