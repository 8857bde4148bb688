#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "alcoved/commands.hpp"

using namespace alcoved;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

JobSpec load_spec(const std::string& path) {
  try {
    return parse_job_spec(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<size_t> parse_roots(const std::string& text) {
  std::vector<size_t> roots;
  if (text == "all") return roots;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      size_t used = 0;
      long v = std::stol(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      roots.push_back(static_cast<size_t>(v));
    } catch (const std::logic_error&) {
      throw InputError("bad root index '" + part + "'");
    }
  }
  if (roots.empty()) throw InputError("empty --roots list");
  return roots;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehrhart series of alcoved polytopes via alcove shellings"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string seed_text;
  std::string dot_path;
  long T = 0;
  bool json = false;
  int k = 2;
  int n = 0;
  std::string roots_text = "all";

  auto add_spec_flags = [&](CLI::App* sub) {
    sub->add_option("--spec", spec_path, "polytope job file (JSON)")->required();
    sub->add_option("--seed", seed_text, "seed point, e.g. 1/3,1/5");
    sub->add_flag("--json", json, "machine-readable output");
  };

  auto* ehrhart = app.add_subcommand("ehrhart", "print the Ehrhart series");
  add_spec_flags(ehrhart);
  ehrhart->add_option("--dot", dot_path, "write the dual graph as DOT");

  auto* verify = app.add_subcommand("verify", "compare the series with direct point counts");
  add_spec_flags(verify);
  auto* t_opt = verify->add_option("--T", T, "largest dilation")->check(CLI::NonNegativeNumber);

  auto* alcoves = app.add_subcommand("alcoves", "list alcoves, walls and BFS weights");
  add_spec_flags(alcoves);

  auto* dosp = app.add_subcommand("dosp", "count hypersimplicial DOSPs by winding number");
  dosp->add_option("--k", k, "block size")->required();
  dosp->add_option("--n", n, "ground set size")->required();
  dosp->add_flag("--json", json, "machine-readable output");

  auto* conj = app.add_subcommand("conjecture", "test the cover-label bijection on Delta(2,n)");
  conj->add_option("--n", n, "ground set size")->required();
  conj->add_option("--roots", roots_text, "'all' or a comma list of node indices");
  conj->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  CommandResult result;
  try {
    RunOptions opts;
    opts.json = json;
    if (!seed_text.empty()) opts.seed = parse_point(seed_text);
    if (!dot_path.empty()) opts.dot_path = dot_path;
    if (t_opt->count()) opts.T = T;

    if (*ehrhart) result = cmd_ehrhart(load_spec(spec_path), opts);
    else if (*verify) result = cmd_verify(load_spec(spec_path), opts);
    else if (*alcoves) result = cmd_alcoves(load_spec(spec_path), opts);
    else if (*dosp) result = cmd_dosp(k, n, json);
    else result = cmd_conjecture(n, parse_roots(roots_text), json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  std::cout << result.output;
  return result.exit_code;
}
