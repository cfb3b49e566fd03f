#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qgor/commands.hpp"

namespace qgor {

/// One expected-vs-actual comparison from a sidecar file.
struct CorpusCheck {
  std::string command;
  bool ok = false;
  std::string diff;
  Json report;
};

struct CorpusEntry {
  std::string file;
  std::vector<CorpusCheck> checks;
  bool ok = false;
  int exit_code = 0;  // worst exit code seen while running the entry
  std::string error;
};

struct CorpusSummary {
  std::vector<CorpusEntry> entries;
  bool all_ok = false;
  int exit_code = 0;  // 0 ok, 1 usage, 2 budget, 3 mismatch
  std::string text;
  Json doc;
};

namespace detail {

/// expected is a subset-match pattern: objects require each key to match
/// recursively, everything else must be exactly equal.
inline bool subset_match(const Json& expected, const Json& actual, std::string path, std::string& diff) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      diff = path + ": expected an object";
      return false;
    }
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      if (!actual.contains(it.key())) {
        diff = path + "." + it.key() + ": missing";
        return false;
      }
      if (!subset_match(it.value(), actual.at(it.key()), path + "." + it.key(), diff)) return false;
    }
    return true;
  }
  if (expected != actual) {
    diff = path + ": expected " + expected.dump() + ", got " + actual.dump();
    return false;
  }
  return true;
}

inline CommandOptions options_from_check(const Json& check, const CorpusSummary&, std::uint64_t entry_seed,
                                         const CommandOptions& base) {
  CommandOptions o = base;
  o.seed = entry_seed;
  if (check.contains("ring")) o.ring = check.at("ring").get<std::string>();
  if (check.contains("ideal")) o.ideals = {check.at("ideal").get<std::string>()};
  if (check.contains("ideals")) o.ideals = check.at("ideals").get<std::vector<std::string>>();
  if (check.contains("seq")) o.seqs = {check.at("seq").get<std::string>()};
  if (check.contains("seqs")) o.seqs = check.at("seqs").get<std::vector<std::string>>();
  if (check.contains("power")) o.power = check.at("power").get<int>();
  if (check.contains("index")) o.index = check.at("index").get<int>();
  if (check.contains("seed")) o.seed = check.at("seed").get<std::uint64_t>();
  return o;
}

inline CorpusEntry run_corpus_entry(const std::filesystem::path& qg_path, std::uint64_t entry_seed,
                                    const CommandOptions& base) {
  CorpusEntry entry;
  entry.file = qg_path.filename().string();
  std::filesystem::path sidecar = qg_path;
  sidecar.replace_extension(".expect.json");
  if (!std::filesystem::exists(sidecar)) {
    entry.exit_code = 1;
    entry.error = "missing sidecar " + sidecar.filename().string();
    return entry;
  }
  Json expectations;
  try {
    std::ifstream in(sidecar);
    in >> expectations;
  } catch (const std::exception& e) {
    entry.exit_code = 1;
    entry.error = std::string("bad sidecar: ") + e.what();
    return entry;
  }
  Session session;
  try {
    session = parse_session_file(qg_path.string());
  } catch (const parse_error& e) {
    entry.exit_code = 1;
    entry.error = "session parse error at " + std::to_string(e.line()) + ":" +
                  std::to_string(e.column()) + ": " + e.what();
    return entry;
  }
  entry.ok = true;
  for (const auto& check : expectations.at("checks")) {
    CorpusCheck c;
    c.command = check.at("command").get<std::string>();
    CommandOptions opts = options_from_check(check, {}, entry_seed, base);
    opts.file = entry.file;
    CommandResult res = run_command(session, c.command, opts);
    if (res.exit_code != 0) {
      c.ok = false;
      c.diff = "exit code " + std::to_string(res.exit_code) + ": " + res.text;
      entry.exit_code = std::max(entry.exit_code, res.exit_code);
    } else {
      c.report = res.doc;
      std::string diff;
      c.ok = subset_match(check.value("expect", Json::object()), res.doc.at("result"), "result", diff);
      c.diff = diff;
    }
    if (!c.ok) entry.ok = false;
    entry.checks.push_back(std::move(c));
  }
  return entry;
}

}  // namespace detail

/// Executes every session file in the directory against its sidecar of
/// expected values. Entries run on a worker pool; output is assembled in
/// file-name order and each entry derives its own seed from the global
/// one, so results are independent of scheduling.
inline CorpusSummary run_corpus(const std::string& dir, const CommandOptions& base) {
  CorpusSummary summary;
  std::filesystem::path root(dir);
  if (!std::filesystem::is_directory(root)) {
    summary.exit_code = 1;
    summary.text = "corpus directory not found: " + dir + "\n";
    return summary;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(root))
    if (e.path().extension() == ".qg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    summary.exit_code = 1;
    summary.text = "no session files (*.qg) in " + dir + "\n";
    return summary;
  }

  std::vector<std::future<CorpusEntry>> futures;
  for (const auto& f : files) {
    std::uint64_t entry_seed = mix_seed(base.seed, hash_string(f.filename().string()));
    futures.push_back(std::async(std::launch::async, [f, entry_seed, &base] {
      return detail::run_corpus_entry(f, entry_seed, base);
    }));
  }

  bool any_mismatch = false;
  int worst = 0;
  std::ostringstream out;
  Json jentries = Json::array();
  for (auto& fut : futures) {
    CorpusEntry entry = fut.get();
    if (!entry.error.empty()) {
      out << entry.file << ": ERROR " << entry.error << "\n";
      worst = std::max(worst, entry.exit_code);
    } else {
      for (const auto& c : entry.checks) {
        out << entry.file << " " << c.command << ": " << (c.ok ? "PASS" : "FAIL") << "\n";
        if (!c.ok) {
          any_mismatch = true;
          out << "    " << c.diff << "\n";
        }
      }
      worst = std::max(worst, entry.exit_code);
    }
    Json je;
    je["file"] = entry.file;
    je["ok"] = entry.ok && entry.error.empty();
    if (!entry.error.empty()) je["error"] = entry.error;
    Json jchecks = Json::array();
    for (const auto& c : entry.checks) {
      Json jc;
      jc["command"] = c.command;
      jc["ok"] = c.ok;
      if (!c.ok) jc["diff"] = c.diff;
      if (!c.report.is_null()) jc["report"] = c.report;
      jchecks.push_back(std::move(jc));
    }
    je["checks"] = std::move(jchecks);
    jentries.push_back(std::move(je));
    summary.entries.push_back(std::move(entry));
  }

  summary.all_ok = worst == 0 && !any_mismatch;
  for (const auto& e : summary.entries)
    if (!e.ok) summary.all_ok = false;
  if (worst == 1) {
    summary.exit_code = 1;
  } else if (worst == 2) {
    summary.exit_code = 2;
  } else if (!summary.all_ok) {
    summary.exit_code = 3;
  }
  out << (summary.all_ok ? "all checks passed" : "FAILURES present") << "\n";
  summary.text = out.str();

  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["seed"] = base.seed;
  doc["command"] = "corpus";
  doc["inputs"] = Json{{"dir", dir}};
  doc["result"] = Json{{"entries", jentries}, {"all_pass", summary.all_ok}};
  doc["budgets"] = Json{{"t_max", base.t_max}, {"n_max", base.n_max}, {"window", base.window}};
  doc["timings_ms"] = 0;
  summary.doc = std::move(doc);
  return summary;
}

}  // namespace qgor
