// episode-miner: mine closed strict episodes from a token file.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "episodes/corpus.hpp"
#include "episodes/emit.hpp"
#include "episodes/errors.hpp"
#include "episodes/miner.hpp"
#ifdef EPISODES_WITH_ORACLE
#include "episodes/oracle.hpp"
#endif

using namespace episodes;

namespace {

struct Options {
  std::string input;
  Position window = 0;
  std::uint64_t min_freq = 0;
  Measure measure = Measure::fixed;
  ClosureMode closure = ClosureMode::instance;
  std::optional<std::size_t> max_nodes;
  std::string emit = "f-closed";
  Format format = Format::text;
  std::string report;
  std::string out;
  CorpusOptions corpus;
  std::string stopwords;
  std::string measure_name = "fixed";
  std::string format_name = "text";
};

unsigned env_threads() {
  const char* v = std::getenv("EPISODE_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  try {
    return static_cast<unsigned>(std::stoul(v));
  } catch (const std::exception&) {
    throw ConfigError(std::string("EPISODE_THREADS must be a number, got '") + v + "'");
  }
}

void add_common(CLI::App& app, Options& o) {
  app.add_option("input", o.input, "Whitespace-separated token file")->required();
  app.add_option("--window", o.window, "Window size rho")->required();
  app.add_option("--min-freq", o.min_freq, "Frequency threshold sigma")->required();
  app.add_option("--measure", o.measure_name, "Frequency measure")
      ->check(CLI::IsMember({"fixed", "disjoint"}))
      ->capture_default_str();
  app.add_option("--max-nodes", o.max_nodes, "Largest episode size to mine");
  app.add_option("--format", o.format_name, "Output format")->check(CLI::IsMember({"text", "jsonl"}))->capture_default_str();
  app.add_option("--out", o.out, "Write episodes here instead of stdout");
  app.add_flag("--lowercase", o.corpus.lowercase, "Lowercase tokens");
  app.add_flag("--strip-punctuation", o.corpus.strip_punctuation, "Remove punctuation characters from tokens");
  app.add_option("--stopwords", o.stopwords, "Stop-word file, one token per line");
}

void resolve_names(Options& o) {
  o.measure = o.measure_name == "disjoint" ? Measure::disjoint : Measure::fixed;
  o.format = o.format_name == "jsonl" ? Format::jsonl : Format::text;
}

EventSequence load(Options& o) {
  if (!o.stopwords.empty()) o.corpus.stopword_file = o.stopwords;
  return load_sequence(o.input, o.corpus);
}

void write(const Options& o, const std::vector<EpisodeRecord>& records, const Alphabet& alphabet,
           std::string_view kind) {
  if (o.out.empty()) {
    emit(std::cout, records, alphabet, o.format, o.measure, kind);
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw IoError("cannot open " + o.out + " for writing");
  emit(f, records, alphabet, o.format, o.measure, kind);
}

void write_report(const std::string& path, const MiningResult& result, std::optional<std::size_t> cap) {
  std::map<std::size_t, std::size_t> f_closed, closed;
  std::map<std::size_t, double> ms;
  for (const auto& r : result.f_closed) ++f_closed[r.episode.size()];
  for (const auto& r : result.closed) ++closed[r.episode.size()];
  for (const auto& l : result.levels) ms[l.nodes] += l.elapsed_ms;
  std::size_t top = 0;
  for (const auto* m : {&f_closed, &closed}) {
    if (!m->empty()) top = std::max(top, m->rbegin()->first);
  }
  if (!ms.empty()) top = std::max(top, ms.rbegin()->first);
  if (cap) top = std::min(top, *cap);
  std::ofstream f(path);
  if (!f) throw IoError("cannot open report " + path);
  f << "size,f_closed,i_closed,runtime_ms\n";
  for (std::size_t n = 1; n <= top; ++n) f << n << ',' << f_closed[n] << ',' << closed[n] << ',' << ms[n] << '\n';
  if (!f) throw IoError("failed to write report " + path);
}

int run_mine(Options& o, const std::string& closure, const std::string& emit_kind) {
  resolve_names(o);
  o.closure = closure == "e" ? ClosureMode::edge : ClosureMode::instance;
  MiningConfig cfg;
  cfg.window = o.window;
  cfg.min_freq = o.min_freq;
  cfg.measure = o.measure;
  cfg.max_nodes = o.max_nodes;
  cfg.closure = o.closure;
  cfg.threads = env_threads();
  cfg.validate();

  const EventSequence s = load(o);
  const MiningResult result = mine(s, cfg);
  if (emit_kind == "f-closed") {
    write(o, result.f_closed, s.alphabet(), "f-closed");
  } else {
    write(o, result.closed, s.alphabet(), o.closure == ClosureMode::edge ? "e-closed" : "i-closed");
  }
  if (!o.report.empty()) write_report(o.report, result, o.max_nodes);
  return 0;
}

#ifdef EPISODES_WITH_ORACLE
int run_oracle(Options& o) {
  resolve_names(o);
  MiningConfig cfg;
  cfg.window = o.window;
  cfg.min_freq = o.min_freq;
  cfg.validate();
  const std::size_t cap = o.max_nodes.value_or(4);
  const EventSequence s = load(o);
  const auto universe = oracle::enumerate_episodes(s.alphabet().labels(), cap);
  std::vector<EpisodeRecord> records;
  for (auto& x : oracle::naive_fclosed(s, o.window, o.min_freq, o.measure, universe)) {
    records.push_back({x.episode, x.episode, x.freq});
  }
  sort_records(records);
  write(o, records, s.alphabet(), "f-closed");
  return 0;
}
#endif

}  // namespace

int report_errors(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const EmptySequenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int parse(CLI::App& app, int argc, char** argv) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  return -1;
}

int main(int argc, char** argv) {
  Options o;
#ifdef EPISODES_WITH_ORACLE
  // Hidden brute-force mode for fixture regeneration: `episode-miner oracle ...`.
  if (argc > 1 && std::string_view(argv[1]) == "oracle") {
    CLI::App app{"Brute-force f-closed episodes (tiny inputs only)"};
    add_common(app, o);
    if (const int rc = parse(app, argc - 1, argv + 1); rc >= 0) return rc;
    return report_errors([&] { return run_oracle(o); });
  }
#endif
  CLI::App app{"Mine frequency-closed strict episodes from an event sequence"};
  app.set_version_flag("--version", "episode-miner 0.1.0");
  std::string closure = "i";
  std::string emit_kind = "f-closed";
  add_common(app, o);
  app.add_option("--closure", closure, "i (instance) or e (edge only, experimental)")
      ->check(CLI::IsMember({"i", "e"}));
  app.add_option("--emit", emit_kind, "f-closed or i-closed")->check(CLI::IsMember({"f-closed", "i-closed"}));
  app.add_option("--report", o.report, "Per-size CSV report");
  if (const int rc = parse(app, argc, argv); rc >= 0) return rc;
  return report_errors([&] { return run_mine(o, closure, emit_kind); });
}
