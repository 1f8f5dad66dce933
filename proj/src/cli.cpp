#include "bitrade/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "bitrade/canon.hpp"
#include "bitrade/enumerator.hpp"
#include "bitrade/io.hpp"
#include "bitrade/moves.hpp"
#include "bitrade/oracle.hpp"

namespace bitrade::cli {

void RunConfig::validate() const {
  if (max_size < 4) throw std::invalid_argument("--max-size must be >= 4");
  if (workers < 1) throw std::invalid_argument("--workers must be >= 1");
  if (split_depth < 0) {
    throw std::invalid_argument("--split-depth must be >= 0");
  }
  if (!checkpoint.empty() && emit == Emit::forms) {
    throw std::invalid_argument("--checkpoint only supports --emit counts");
  }
}

namespace {

namespace fs = std::filesystem;

// Distinguishes bad invocations (exit 2) from failures while running.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BitradeError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

TauTriple load_triple(const std::string& path) {
  BitradeText parsed = parse_bitrade(read_input(path));
  if (auto* t = std::get_if<TauTriple>(&parsed)) return std::move(*t);
  return from_pair(std::get<TradePair>(parsed));
}

void write_output(const std::string& path, const std::string& data,
                  std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw BitradeError("cannot write " + path);
  file << data;
  if (!file.flush()) throw BitradeError("write failed for " + path);
}

std::string format_report(const ValidationReport& r) {
  std::string out;
  auto axiom = [&out](const char* name, const AxiomCheck& c) {
    out += name;
    out += c.pass ? " pass" : " fail " + std::to_string(*c.witness);
    out += '\n';
  };
  axiom("T1", r.t1);
  axiom("T2", r.t2);
  axiom("T3", r.t3);
  out += std::string("T4 ") + (r.transitive ? "pass" : "fail") + "\n";
  out += "genus " + (r.genus ? std::to_string(*r.genus) : "undefined") + "\n";
  return out;
}

// Census entries as "size:count" tokens.
std::string counts_tokens(const CensusTable& table) {
  std::string out;
  for (const auto& [size, count] : table.counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(size) + ":" + std::to_string(count);
  }
  return out;
}

CensusTable parse_counts_tokens(std::string_view text) {
  CensusTable table;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const std::size_t colon = token.find(':');
    if (colon == std::string::npos) throw BitradeError("bad count " + token);
    table.add(std::stoi(token.substr(0, colon)),
              std::stoull(token.substr(colon + 1)));
  }
  return table;
}

// Task-file checkpointing: plan.txt holds the plan, done.txt one line per
// finished task. A resumed run skips every task listed in done.txt.
class Checkpoint {
 public:
  Checkpoint(const fs::path& dir, const RunConfig& config, std::ostream& log)
      : dir_(dir) {
    fs::create_directories(dir_);
    const fs::path plan_file = dir_ / "plan.txt";
    const std::string header = "plan " + std::to_string(config.max_size) +
                               " " + std::to_string(config.split_depth);
    if (fs::exists(plan_file)) {
      std::ifstream in(plan_file);
      std::string line;
      std::getline(in, line);
      if (line != header) {
        throw UsageError("checkpoint " + dir_.string() +
                         " was made with different settings (" + line + ")");
      }
      std::getline(in, line);
      if (line.rfind("prefix", 0) != 0) {
        throw BitradeError("corrupt checkpoint plan");
      }
      plan_.prefix = parse_counts_tokens(std::string_view(line).substr(6));
      while (std::getline(in, line)) {
        if (!line.empty()) plan_.tasks.push_back(SearchTask::parse(line));
      }
      load_done();
      log << "resuming from " << dir_.string() << ": " << done_.size() << "/"
          << plan_.tasks.size() << " tasks already done\n";
    } else {
      plan_ = split_tasks(config.max_size, config.split_depth);
      std::ofstream outp(plan_file, std::ios::trunc);
      outp << header << "\nprefix " << counts_tokens(plan_.prefix) << "\n";
      for (const SearchTask& t : plan_.tasks) outp << t.serialize() << "\n";
      if (!outp.flush()) throw BitradeError("cannot write checkpoint plan");
    }
    done_file_.open(dir_ / "done.txt", std::ios::app);
    if (!done_file_) throw BitradeError("cannot write checkpoint progress");
  }

  const TaskPlan& plan() const { return plan_; }

  std::vector<SearchTask> pending() const {
    std::vector<SearchTask> out;
    for (const SearchTask& t : plan_.tasks) {
      if (!done_.contains(t.id)) out.push_back(t);
    }
    return out;
  }

  const CensusTable& completed() const { return completed_; }

  void record(const SearchTask& task, const CensusTable& result) {
    done_file_ << task.id << "\t" << counts_tokens(result) << "\n";
    done_file_.flush();
  }

 private:
  void load_done() {
    std::ifstream in(dir_ / "done.txt", std::ios::binary);
    const std::string text{std::istreambuf_iterator<char>(in), {}};
    // Only newline-terminated records count; a torn final write is redone.
    std::size_t begin = 0;
    for (std::size_t nl; (nl = text.find('\n', begin)) != std::string::npos;
         begin = nl + 1) {
      const std::string line = text.substr(begin, nl - begin);
      const std::size_t tab = line.find('\t');
      if (tab == std::string::npos) continue;
      try {
        const int id = std::stoi(line.substr(0, tab));
        CensusTable counts = parse_counts_tokens(line.substr(tab + 1));
        if (done_.insert(id).second) completed_.merge(counts);
      } catch (const std::exception&) {
        continue;
      }
    }
    if (begin != text.size()) {
      std::ofstream trimmed(dir_ / "done.txt", std::ios::binary | std::ios::trunc);
      trimmed << text.substr(0, begin);
    }
  }

  fs::path dir_;
  TaskPlan plan_;
  std::set<int> done_;
  CensusTable completed_;
  std::ofstream done_file_;
};

std::string cmd_enumerate(const RunConfig& config, std::ostream& log) {
  config.validate();
  const bool forms = config.emit == Emit::forms;
  CensusTable census;
  if (config.checkpoint.empty()) {
    TaskPlan plan = split_tasks(config.max_size, config.split_depth, forms);
    log << "enumerate: max size " << config.max_size << ", "
        << plan.tasks.size() << " tasks on " << config.workers
        << " workers\n";
    census = plan.prefix;
    census.merge(run_tasks(plan.tasks, config.workers, forms));
  } else {
    Checkpoint checkpoint(config.checkpoint, config, log);
    const std::vector<SearchTask> pending = checkpoint.pending();
    log << "enumerate: max size " << config.max_size << ", " << pending.size()
        << " pending tasks on " << config.workers << " workers\n";
    census = checkpoint.plan().prefix;
    census.merge(checkpoint.completed());
    census.merge(run_tasks(
        pending, config.workers, false,
        [&](const SearchTask& t, const CensusTable& r) {
          checkpoint.record(t, r);
        }));
  }
  if (forms) {
    census.sort_forms();
    return census.format_forms();
  }
  return census.format_counts(config.max_size);
}

std::string cmd_oracle(const RunConfig& config) {
  if (config.max_size < 4) throw UsageError("--max-size must be >= 4");
  if (config.max_size > config.oracle_bound) {
    throw UsageError("--max-size exceeds the oracle bound " +
                     std::to_string(config.oracle_bound));
  }
  const bool forms = config.emit == Emit::forms;
  const CensusTable census =
      naive_enumerate(config.max_size, config.oracle_bound, forms);
  return forms ? census.format_forms() : census.format_counts(config.max_size);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spherical latin bitrades: conversion, slide moves, canonical "
               "forms and enumeration",
               "bitrade"};
  app.require_subcommand(1);

  RunConfig config;
  std::string input;
  std::string output;
  std::string emit = "counts";
  std::string to;
  int point = -1;
  int dir = 0;

  const std::map<std::string, Emit> emit_modes{{"counts", Emit::counts},
                                               {"forms", Emit::forms}};

  auto* enumerate = app.add_subcommand("enumerate",
                                       "Census of spherical bitrades by size");
  enumerate->add_option("--max-size", config.max_size, "Largest size")
      ->required();
  enumerate->add_option("--workers", config.workers, "Worker threads");
  enumerate->add_option("--split-depth", config.split_depth,
                        "Tree depth at which work is split into tasks");
  enumerate->add_option("--emit", emit, "counts or forms")
      ->check(CLI::IsMember({"counts", "forms"}));
  enumerate->add_option("--checkpoint", config.checkpoint,
                        "Directory for resumable task state");
  enumerate->add_option("--out", output, "Write data here instead of stdout");

  auto* oracle = app.add_subcommand(
      "oracle", "Census by brute-force expansion closure (small sizes)");
  oracle->add_option("--max-size", config.max_size, "Largest size")
      ->required();
  oracle->add_option("--bound", config.oracle_bound,
                     "Refuse sizes above this");
  oracle->add_option("--emit", emit, "counts or forms")
      ->check(CLI::IsMember({"counts", "forms"}));
  oracle->add_option("--out", output, "Write data here instead of stdout");

  auto add_file_command = [&](const std::string& name,
                              const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", input, ".tau or .trade file, - for stdin")
        ->required();
    sub->add_option("--out", output, "Write data here instead of stdout");
    return sub;
  };
  auto* validate_cmd = add_file_command("validate", "Check the axioms");
  auto* genus_cmd = add_file_command("genus", "Print the genus");
  auto* convert = add_file_command("convert", "Convert between formats");
  convert->add_option("--to", to, "tau or pair")
      ->required()
      ->check(CLI::IsMember({"tau", "pair"}));
  auto* inverse_cmd = add_file_command("inverse", "Print the inverse bitrade");
  auto* canon = add_file_command("canon", "Print the canonical code");
  auto* expand = add_file_command("expand", "Slide expansion");
  auto* contract = add_file_command("contract", "Slide contraction");
  for (auto* sub : {expand, contract}) {
    sub->add_option("--point", point, "Point")->required();
    sub->add_option("--dir", dir, "Direction 1, 2 or 3")
        ->required()
        ->check(CLI::Range(1, 3));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  config.emit = emit_modes.at(emit);

  try {
    std::string data;
    if (app.got_subcommand(enumerate)) {
      try {
        config.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      data = cmd_enumerate(config, err);
    } else if (app.got_subcommand(oracle)) {
      data = cmd_oracle(config);
    } else if (app.got_subcommand(validate_cmd)) {
      data = format_report(validate(load_triple(input)));
    } else if (app.got_subcommand(genus_cmd)) {
      const TauTriple t = load_triple(input);
      const ValidationReport report = validate(t);
      if (!report.is_bitrade()) {
        throw NotABitrade("input violates (T1)-(T3); run validate");
      }
      data = std::to_string(genus(t)) + "\n";
    } else if (app.got_subcommand(convert)) {
      BitradeText parsed = parse_bitrade(read_input(input));
      if (to == "tau") {
        data = format_tau(std::holds_alternative<TauTriple>(parsed)
                              ? std::get<TauTriple>(parsed)
                              : from_pair(std::get<TradePair>(parsed)));
      } else {
        data = format_trade(std::holds_alternative<TradePair>(parsed)
                                ? std::get<TradePair>(parsed)
                                : to_pair(std::get<TauTriple>(parsed)));
      }
    } else if (app.got_subcommand(inverse_cmd)) {
      data = format_tau(inverse(load_triple(input)));
    } else if (app.got_subcommand(canon)) {
      data = canonical_form(load_triple(input)).form.to_string() + "\n";
    } else if (app.got_subcommand(expand)) {
      data = format_tau(slide_expand(load_triple(input), {dir, point}));
    } else if (app.got_subcommand(contract)) {
      data = format_tau(slide_contract(load_triple(input), {dir, point}));
    }
    write_output(output, data, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace bitrade::cli
