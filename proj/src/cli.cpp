#include "dyck/cli.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyck/cat_engine.hpp"
#include "dyck/errors.hpp"
#include "dyck/oracle.hpp"
#include "dyck/succession.hpp"
#include "dyck/theta_tree.hpp"

namespace dyck::cli {

namespace {

bool require_n(const RunConfig& config, std::ostream& err) {
  if (config.n < 1) {
    err << "error: -n must be >= 1\n";
    return false;
  }
  return true;
}

int finish_output(std::ostream& out, std::ostream& err) {
  out.flush();
  if (!out) {
    err << "error: write failure\n";
    return exit_code::io;
  }
  return exit_code::ok;
}

std::string excerpt(const std::vector<DyckWord>& words, std::size_t max = 5) {
  std::string s;
  for (std::size_t j = 0; j < words.size() && j < max; ++j) {
    if (j) s += ' ';
    s += words[j].to_string();
  }
  if (words.size() > max) s += " ...";
  return s;
}

}  // namespace

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<Generator> loaded;
  if (config.resume) {
    std::ifstream in(*config.resume);
    if (!in) {
      err << "error: cannot read state file " << *config.resume << '\n';
      return exit_code::io;
    }
    std::stringstream text;
    text << in.rdbuf();
    try {
      loaded.emplace(Generator::restore(text.str()));
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return exit_code::usage;
    }
    if (config.n != 0 && config.n != loaded->n()) {
      err << "error: -n " << config.n << " does not match saved state n=" << loaded->n() << '\n';
      return exit_code::usage;
    }
  } else {
    if (!require_n(config, err)) return exit_code::usage;
    loaded.emplace(config.n);
  }
  Generator& gen = *loaded;

  std::string line;
  std::vector<std::uint8_t> scratch;
  std::uint64_t written = 0;
  while (!(config.limit && written >= *config.limit) && gen.step()) {
    gen.word().copy_logical(scratch);
    line.clear();
    render_into(scratch, config.format, line);
    line.push_back('\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    if (!out) break;
    ++written;
  }
  if (int rc = finish_output(out, err); rc != exit_code::ok) return rc;

  if (config.save_state) {
    std::ofstream state(*config.save_state);
    state << gen.snapshot();
    state.flush();
    if (!state) {
      err << "error: cannot write state file " << *config.save_state << '\n';
      return exit_code::io;
    }
  }
  return exit_code::ok;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!require_n(config, err)) return exit_code::usage;
  out << run_all(config.n).count << '\n';
  return finish_output(out, err);
}

int cmd_tree(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!require_n(config, err)) return exit_code::usage;
  try {
    const DnTree tree = build_tree(config.n, config.tree_cap);
    if (config.dot) {
      write_dot(out, tree);
    } else {
      write_indented(out, tree);
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return finish_output(out, err);
}

int cmd_labels(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!require_n(config, err)) return exit_code::usage;
  try {
    const LabelTree tree = build_label_tree(config.n, config.tree_cap);
    if (config.dot) {
      write_dot(out, tree);
    } else {
      write_indented(out, tree);
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return finish_output(out, err);
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!require_n(config, err)) return exit_code::usage;
  const int n = config.n;
  const int cap = std::min(config.oracle_cap, kOracleCap);
  if (n > cap) {
    err << "error: verify -n " << n << " exceeds oracle cap " << cap << '\n';
    return exit_code::usage;
  }

  auto oracle = std::async(std::launch::async, [n, cap] { return brute_enumerate(n, cap); });

  // One engine pass collects the stream and checks labels and the op3 runs.
  std::vector<DyckWord> stream;
  std::optional<std::string> invalid;
  std::optional<std::string> label_fault;
  Generator gen(n);
  while (gen.step()) {
    DyckWord w = gen.current();
    if (!invalid) {
      if (auto e = check(w.bits())) invalid = w.to_string() + ": " + e->what();
    }
    if (!label_fault && label_of(w) != gen.label()) {
      label_fault = w.to_string() + " carries " + to_string(gen.label()) + ", expected " +
                    to_string(label_of(w));
    }
    stream.push_back(std::move(w));
  }

  bool all_ok = true;
  auto report = [&](bool ok, const std::string& name, const std::string& detail) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) out << ": " << detail;
    out << '\n';
    all_ok = all_ok && ok;
  };

  {
    const WordSet expected = oracle.get();
    const DiffReport diff = compare(expected, stream);
    const bool count_ok = BigInt(stream.size()) == catalan(n);
    std::ostringstream detail;
    detail << stream.size() << " paths";
    if (invalid) detail << "; invalid word " << *invalid;
    if (!diff.duplicates.empty()) detail << "; duplicates " << excerpt(diff.duplicates);
    if (!diff.missing.empty()) detail << "; missing " << excerpt(diff.missing);
    if (!diff.unexpected.empty()) detail << "; unexpected " << excerpt(diff.unexpected);
    if (!count_ok) detail << "; Catalan(" << n << ") = " << catalan(n);
    report(diff.empty() && count_ok && !invalid, "engine stream equals brute-force set", detail.str());
  }

  {
    std::size_t index = 0;
    std::optional<std::string> first_diff;
    walk_preorder(n, [&](const DyckWord& w, int) {
      if (!first_diff && (index >= stream.size() || stream[index] != w)) {
        first_diff = "position " + std::to_string(index) + ": tree has " + w.to_string() +
                     ", engine has " +
                     (index < stream.size() ? stream[index].to_string() : std::string("<end>"));
      }
      ++index;
    });
    if (!first_diff && index != stream.size()) {
      first_diff = "engine emitted " + std::to_string(stream.size()) + " paths, tree has " +
                   std::to_string(index);
    }
    report(!first_diff, "engine order equals tree preorder", first_diff.value_or(""));
  }

  {
    const CorrespondenceReport corr = verify_correspondence(n);
    std::string detail = std::to_string(corr.nodes_checked) + " nodes";
    if (!corr.ok) detail += "; " + corr.detail;
    if (label_fault) detail += "; engine label " + *label_fault;
    report(corr.ok && !label_fault, "succession labels match the tree", detail);
  }

  {
    const int run = gen.max_op3_run();
    const bool ok = run <= 2 && (n < 4 || run == 2);
    report(ok, "consecutive op3 bound", "max run " + std::to_string(run));
  }

  out << "verify n=" << n << ": " << (all_ok ? "all checks passed" : "FAILED") << ", "
      << stream.size() << " paths\n";
  if (int rc = finish_output(out, err); rc != exit_code::ok) return rc;
  return all_ok ? exit_code::ok : exit_code::verification;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int lo = config.range_lo;
  int hi = config.range_hi;
  if (lo == 0 && hi == 0) lo = hi = config.n;
  if (lo < 1 || hi < lo) {
    err << "error: bench needs -n N or --range A..B with 1 <= A <= B\n";
    return exit_code::usage;
  }

  bool within_bound = true;
  for (int n = lo; n <= hi; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const RunSummary summary = run_all(n);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    const auto& c = summary.counters;
    const double per_path =
        static_cast<double>(c.actions()) / static_cast<double>(summary.count);
    nlohmann::ordered_json record;
    record["n"] = n;
    record["paths"] = summary.count;
    record["swaps"] = c.swaps;
    record["cursor_moves"] = c.cursor_moves;
    record["stack_ops"] = c.stack_ops();
    record["label_updates"] = c.label_updates;
    record["dispatch_tests"] = c.dispatch_tests;
    record["total_actions"] = c.actions();
    record["actions_per_path"] = per_path;
    record["max_consecutive_op3"] = summary.max_consecutive_op3;
    if (config.timing) record["wall_time"] = elapsed.count();
    out << record.dump() << '\n';

    if (per_path > config.bound) {
      err << "bound violated at n=" << n << ": " << per_path << " > " << config.bound << '\n';
      within_bound = false;
    }
  }
  if (int rc = finish_output(out, err); rc != exit_code::ok) return rc;
  return within_bound ? exit_code::ok : exit_code::bench_bound;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output) {
    file.open(*config.output);
    if (!file) {
      err << "error: cannot open " << *config.output << " for writing\n";
      return exit_code::io;
    }
    sink = &file;
  }
  switch (config.command) {
    case Command::gen:
      return cmd_gen(config, *sink, err);
    case Command::count:
      return cmd_count(config, *sink, err);
    case Command::tree:
      return cmd_tree(config, *sink, err);
    case Command::labels:
      return cmd_labels(config, *sink, err);
    case Command::verify:
      return cmd_verify(config, *sink, err);
    case Command::bench:
      return cmd_bench(config, *sink, err);
  }
  return exit_code::usage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive constant-amortized-time generation of Dyck paths", "dyckgen"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "bits";
  std::string range;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", config.output, "Write to this file instead of stdout");
  };

  auto* gen = app.add_subcommand("gen", "Stream every path of semilength n");
  gen->add_option("-n", config.n, "Semilength")->check(CLI::PositiveNumber);
  gen->add_option("--format", format, "bits | updown | coords")
      ->check(CLI::IsMember({"bits", "updown", "coords"}));
  gen->add_option("--limit", config.limit, "Stop after this many paths");
  gen->add_option("--save-state", config.save_state, "Write a resumable snapshot when stopping");
  gen->add_option("--resume", config.resume, "Continue from a snapshot file");
  add_output(gen);

  auto* count = app.add_subcommand("count", "Count the generated paths");
  count->add_option("-n", config.n, "Semilength")->required()->check(CLI::PositiveNumber);
  add_output(count);

  auto* tree = app.add_subcommand("tree", "Dump the generating tree of paths");
  tree->add_option("-n", config.n, "Semilength")->required()->check(CLI::PositiveNumber);
  tree->add_flag("--dot", config.dot, "Graphviz output");
  tree->add_option("--cap", config.tree_cap, "Largest n accepted");
  add_output(tree);

  auto* labels = app.add_subcommand("labels", "Dump the succession-rule label tree");
  labels->add_option("-n", config.n, "Semilength")->required()->check(CLI::PositiveNumber);
  labels->add_flag("--dot", config.dot, "Graphviz output");
  labels->add_option("--cap", config.tree_cap, "Largest n accepted");
  add_output(labels);

  auto* verify = app.add_subcommand("verify", "Cross-check the engine against independent references");
  verify->add_option("-n", config.n, "Semilength")->required()->check(CLI::PositiveNumber);
  verify->add_option("--cap", config.oracle_cap, "Largest n accepted (at most 16)");
  add_output(verify);

  auto* bench = app.add_subcommand("bench", "Count elementary actions per generated path");
  auto* bench_n = bench->add_option("-n", config.n, "Semilength")->check(CLI::PositiveNumber);
  auto* bench_range = bench->add_option("--range", range, "Inclusive range A..B");
  bench_n->excludes(bench_range);
  bench->add_option("--bound", config.bound, "Largest accepted actions per path");
  bool no_time = false;
  bench->add_flag("--no-time", no_time, "Omit wall_time for reproducible output");
  add_output(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::ok : exit_code::usage;
  }

  config.format = parse_format(format);
  config.timing = !no_time;
  if (*gen) {
    config.command = Command::gen;
    if (config.n == 0 && !config.resume) {
      err << "error: gen needs -n or --resume\n";
      return exit_code::usage;
    }
  } else if (*count) {
    config.command = Command::count;
  } else if (*tree) {
    config.command = Command::tree;
  } else if (*labels) {
    config.command = Command::labels;
  } else if (*verify) {
    config.command = Command::verify;
  } else {
    config.command = Command::bench;
    if (!range.empty()) {
      const auto dots = range.find("..");
      try {
        if (dots == std::string::npos) throw std::invalid_argument(range);
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo_text = range.substr(0, dots);
        const std::string hi_text = range.substr(dots + 2);
        config.range_lo = std::stoi(lo_text, &used_lo);
        config.range_hi = std::stoi(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size()) {
          throw std::invalid_argument(range);
        }
      } catch (const std::exception&) {
        err << "error: --range expects A..B, got '" << range << "'\n";
        return exit_code::usage;
      }
    } else if (config.n == 0) {
      err << "error: bench needs -n or --range\n";
      return exit_code::usage;
    }
  }
  return execute(config, out, err);
}

}  // namespace dyck::cli
