#include "cusps/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "cusps/bounds.hpp"
#include "cusps/multiplicity.hpp"
#include "cusps/resolution.hpp"
#include "cusps/search.hpp"
#include "cusps/snc.hpp"

namespace cusps {
namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long parse_integer(const std::string& text, const std::string& what) {
  long long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last)
    throw usage_error(what + ": not an integer: '" + text + "'");
  return v;
}

// "N" or "LO..HI", inclusive.
std::pair<long long, long long> parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long long v = parse_integer(text, what);
    return {v, v};
  }
  return {parse_integer(text.substr(0, dots), what),
          parse_integer(text.substr(dots + 2), what)};
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// key = value lines, # comments, ranges as "lo..hi"; mirrors the
// enumerate flags.  Flags given on the command line override the file.
void apply_config_file(const std::string& path, SearchSpec& spec, std::string& format,
                       std::string& output_path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trimmed(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw usage_error(where + ": expected key = value");
    const std::string key = trimmed(stripped.substr(0, eq));
    std::string value = trimmed(stripped.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (value.empty()) throw usage_error(where + ": empty value for '" + key + "'");

    if (key == "e" || key == "a" || key == "b") {
      const auto [lo, hi] = parse_range(value, where + ": " + key);
      if (key == "e") {
        spec.e_lo = lo;
        spec.e_hi = hi;
      } else if (key == "a") {
        spec.a_lo = lo;
        spec.a_hi = hi;
      } else {
        spec.b_lo = lo;
        spec.b_hi = hi;
      }
    } else if (key == "genus") {
      spec.genus = parse_integer(value, where + ": genus");
    } else if (key == "max_delta_per_cusp") {
      spec.max_delta_per_cusp = parse_integer(value, where + ": max_delta_per_cusp");
    } else if (key == "require_bmy") {
      if (value == "true")
        spec.require_bmy = true;
      else if (value == "false")
        spec.require_bmy = false;
      else
        throw usage_error(where + ": require_bmy must be true or false");
    } else if (key == "threads") {
      spec.threads = static_cast<int>(parse_integer(value, where + ": threads"));
    } else if (key == "format") {
      format = value;
    } else if (key == "output") {
      output_path = value;
    } else {
      throw usage_error(where + ": unknown key '" + key + "'");
    }
  }
}

struct EnumerateArgs {
  std::string e_text, a_text, b_text;
  long long genus = 0;
  long long max_delta = 0;
  bool require_bmy = false;
  int threads = 1;
  std::string format;
  std::string output_path;
  std::string config_path;
  std::string checkpoint_path;
};

int run_enumerate(const CLI::App& cmd, const EnumerateArgs& arg, std::ostream& out) {
  SearchSpec spec;
  std::string format = "jsonl";
  std::string output_path;

  if (cmd.count("--config")) apply_config_file(arg.config_path, spec, format, output_path);
  if (cmd.count("--e")) std::tie(spec.e_lo, spec.e_hi) = parse_range(arg.e_text, "--e");
  if (cmd.count("--a")) std::tie(spec.a_lo, spec.a_hi) = parse_range(arg.a_text, "--a");
  if (cmd.count("--b")) std::tie(spec.b_lo, spec.b_hi) = parse_range(arg.b_text, "--b");
  if (cmd.count("--genus")) spec.genus = arg.genus;
  if (cmd.count("--max-delta-per-cusp")) spec.max_delta_per_cusp = arg.max_delta;
  if (arg.require_bmy) spec.require_bmy = true;
  if (cmd.count("--threads")) spec.threads = arg.threads;
  if (cmd.count("--format")) format = arg.format;
  if (cmd.count("--output")) output_path = arg.output_path;

  if (format != "jsonl" && format != "csv")
    throw usage_error("--format must be jsonl or csv, got '" + format + "'");

  bool resuming = false;
  if (!arg.checkpoint_path.empty()) {
    std::ifstream ck(arg.checkpoint_path);
    std::string last;
    if (ck && std::getline(ck, last) && !trimmed(last).empty()) {
      spec.resume_after = trimmed(last);
      resuming = true;
    }
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!output_path.empty()) {
    file.open(output_path, resuming ? std::ios::out | std::ios::app
                                    : std::ios::out | std::ios::trunc);
    if (!file) throw std::domain_error("cannot open output file: " + output_path);
    sink = &file;
  }
  const std::string sink_name = output_path.empty() ? "standard output" : output_path;

  if (format == "csv" && !resuming) *sink << csv_header() << "\n";

  const bool csv = format == "csv";
  bool write_failed = false;
  enumerate_configs(spec, [&](const CensusRecord& rec) {
    *sink << (csv ? to_csv(rec) : to_jsonl(rec)) << "\n";
    if (!*sink) {
      write_failed = true;
      return false;
    }
    if (!arg.checkpoint_path.empty()) {
      std::ofstream ck(arg.checkpoint_path, std::ios::trunc);
      ck << rec.key() << "\n";
      if (!ck) {
        write_failed = true;
        return false;
      }
    }
    return true;
  });
  sink->flush();
  if (write_failed || !*sink) throw std::domain_error("write failed: " + sink_name);
  return 0;
}

nlohmann::json read_json_input(const std::string& path, std::istream& fallback_in) {
  try {
    if (path == "-") return nlohmann::json::parse(fallback_in);
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot read graph file: " + path);
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw std::domain_error("invalid JSON in " + (path == "-" ? "standard input" : path) +
                            ": " + ex.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact machinery for cuspidal curves on Hirzebruch surfaces"};
  app.name("cusps");
  app.require_subcommand(1);

  std::string genus_key;
  auto* genus_cmd = app.add_subcommand("genus", "genus of a cuspidal configuration");
  genus_cmd->add_option("config", genus_key, "canonical key, e.g. \"0,2,3|[2],[2]\"")
      ->required();

  std::string delta_seq;
  auto* delta_cmd = app.add_subcommand("delta", "delta invariant of a multiplicity sequence");
  delta_cmd->add_option("sequence", delta_seq, "notation, e.g. \"[3_2]\" or \"[3,3,1,1,1]\"")
      ->required();

  std::string resolve_key;
  auto* resolve_cmd =
      app.add_subcommand("resolve", "resolution lattice and dual graph of a configuration");
  resolve_cmd->add_option("config", resolve_key, "canonical key")->required();

  std::string classify_path;
  auto* classify_cmd =
      app.add_subcommand("classify", "rods, twigs, forks and barks of an SNC graph");
  classify_cmd
      ->add_option("graph", classify_path,
                   "path to a graph or resolution JSON document, - for stdin")
      ->required();

  long long bound_genus = 0;
  std::string bound_key;
  auto* bound_cmd = app.add_subcommand("bound", "cusp-count bound");
  bound_cmd->add_option("--genus", bound_genus, "print the bare bound for this genus");
  bound_cmd->add_option("config", bound_key, "canonical key: print the full report");

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "census of cuspidal configurations");
  en_cmd->add_option("--e", en.e_text, "surface parameter, N or LO..HI");
  en_cmd->add_option("--a", en.a_text, "type coefficient a, N or LO..HI");
  en_cmd->add_option("--b", en.b_text, "type coefficient b, N or LO..HI");
  en_cmd->add_option("--genus", en.genus, "keep only configurations of this genus");
  en_cmd->add_option("--max-delta-per-cusp", en.max_delta, "cap the delta of each cusp");
  en_cmd->add_flag("--require-bmy", en.require_bmy, "drop records failing an applicable B-M-Y check");
  en_cmd->add_option("--threads", en.threads, "worker count; never changes output bytes");
  en_cmd->add_option("--format", en.format, "jsonl (default) or csv");
  en_cmd->add_option("--output", en.output_path, "write the stream here instead of stdout");
  en_cmd->add_option("--config", en.config_path, "key = value file; explicit flags override it");
  en_cmd->add_option("--checkpoint", en.checkpoint_path,
                     "key file for resumable runs; non-empty means resume after that key");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cusps");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (genus_cmd->parsed()) {
      out << to_string(genus_of_config(CuspidalConfig::parse_key(genus_key))) << "\n";
    } else if (delta_cmd->parsed()) {
      out << to_string(delta_invariant(MultiplicitySequence::parse(delta_seq))) << "\n";
    } else if (resolve_cmd->parsed()) {
      const auto lat = ResolutionLattice::build(CuspidalConfig::parse_key(resolve_key));
      out << resolution_to_json(lat).dump(2) << "\n";
    } else if (classify_cmd->parsed()) {
      nlohmann::json doc = read_json_input(classify_path, std::cin);
      if (doc.contains("schema") && doc["schema"] == "resolution/1") doc = doc["graph"];
      const SncGraph graph = SncGraph::from_json(doc);
      const Classification cls = classify(graph);
      out << to_json(graph, cls, bark_total(graph)).dump(2) << "\n";
    } else if (bound_cmd->parsed()) {
      const bool have_genus = bound_cmd->count("--genus") > 0;
      const bool have_key = !bound_key.empty();
      if (have_genus == have_key)
        throw usage_error("bound: give exactly one of --genus or a configuration key");
      if (have_genus)
        out << to_string(max_cusps(make_int(bound_genus))) << "\n";
      else
        out << to_json(bound_report(CuspidalConfig::parse_key(bound_key))).dump(2) << "\n";
    } else if (en_cmd->parsed()) {
      return run_enumerate(*en_cmd, en, out);
    }
    return 0;
  } catch (const usage_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace cusps
