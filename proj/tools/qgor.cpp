#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "qgor/corpus.hpp"

namespace {

struct Cli {
  qgor::CommandOptions opts;
  std::string command;
};

void add_common(CLI::App* cmd, qgor::CommandOptions& o, bool needs_file = true) {
  auto* f = cmd->add_option("-f,--file", o.file, "session file");
  if (needs_file) f->required();
  cmd->add_option("--ring", o.ring, "ring name");
  cmd->add_option("--ideal", o.ideals, "ideal name (repeatable where two are needed)");
  cmd->add_option("--seq", o.seqs, "sequence name (repeatable for gcm)");
  cmd->add_flag("--json", o.json, "emit a canonical JSON report");
  cmd->add_option("--seed", o.seed, "random seed (default 0)");
  cmd->add_option("--tmax", o.t_max, "limit-closure chain cap (default 20)");
  cmd->add_option("--nmax", o.n_max, "socle-sequence cap (default 6)");
  cmd->add_option("--window", o.window, "stabilization window (default 2)");
  cmd->add_flag("--timings", o.timings, "report measured wall time (off keeps output byte-stable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qgor: quasi-Gorenstein analysis of standard-graded algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qgor::kToolName) + " " + qgor::kVersion);

  Cli cli;
  const std::vector<std::string> simple = {
      "gb",        "dim",       "colon",     "intersect", "saturate",      "hilbert", "mu",
      "socle",     "irreducible", "limit-closure", "sop",   "resolve",     "ext",     "canonical",
      "depth",     "qgcheck",   "buchsbaum", "gcm",       "deform",        "quotient-probe"};
  for (const auto& name : simple) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, cli.opts);
    if (name == "limit-closure") sub->add_option("--power", cli.opts.power, "compute {x^n}^lim (default 1)");
    if (name == "ext") sub->add_option("--index", cli.opts.index, "Ext index (default 1)");
    if (name == "resolve") sub->add_option("--length", cli.opts.length, "resolution length (default nvars+1)");
    if (name == "gcm") sub->add_option("--cap", cli.opts.cap, "exponent cap (default 8)");
    if (name == "deform") sub->add_option("--n", cli.opts.deform_n, "number of powers probed (default 3)");
    sub->callback([&cli, name] { cli.command = name; });
  }
  auto* corpus = app.add_subcommand("corpus", "run a directory of session files against sidecars");
  corpus->add_option("dir", cli.opts.dir, "corpus directory")->required();
  corpus->add_flag("--json", cli.opts.json, "emit a canonical JSON summary");
  corpus->add_option("--seed", cli.opts.seed, "random seed (default 0)");
  corpus->add_option("--tmax", cli.opts.t_max, "limit-closure chain cap");
  corpus->add_option("--nmax", cli.opts.n_max, "socle-sequence cap");
  corpus->add_option("--window", cli.opts.window, "stabilization window");
  corpus->add_option("--jobs", cli.opts.jobs, "worker pool size (informational; entries are independent)");
  corpus->callback([&cli] { cli.command = "corpus"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cli.command == "corpus") {
      qgor::CorpusSummary summary = qgor::run_corpus(cli.opts.dir, cli.opts);
      if (cli.opts.json)
        std::cout << summary.doc.dump(2) << "\n";
      else
        std::cout << summary.text;
      return summary.exit_code;
    }
    qgor::Session session = qgor::parse_session_file(cli.opts.file);
    qgor::CommandResult res = qgor::run_command(session, cli.command, cli.opts);
    if (res.exit_code != 0) {
      std::cerr << res.text;
      return res.exit_code;
    }
    if (cli.opts.json)
      std::cout << res.doc.dump(2) << "\n";
    else
      std::cout << res.text;
    return 0;
  } catch (const qgor::parse_error& e) {
    std::cerr << "parse error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return 1;
  } catch (const qgor::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const qgor::internal_error& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
