#include "tcent/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "tcent/centrality.hpp"
#include "tcent/ingest.hpp"
#include "tcent/oracle.hpp"
#include "tcent/synth.hpp"
#include "tcent/tvg.hpp"

namespace tcent::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string input;
  std::string out;
  std::string labels_out;
  std::uint32_t nodes = 0;
  std::uint32_t instants = 0;
  double prob = -1.0;
  bool paper_defaults = false;
  std::uint64_t seed = 1;
  std::int64_t granularity = 30;
  std::optional<std::int64_t> start;
  std::optional<std::int64_t> end;
  std::string tau;
  std::uint32_t phi = 0;
  std::string range;
  unsigned workers = 0;
  std::string metric;
  std::string kind = "cdf";
  std::size_t k = 10;
  oracle::FuzzConfig fuzz;
};

// key=value pairs echoed in the reproducibility header.
using Config = std::vector<std::pair<std::string, std::string>>;

void print_header(std::ostream& err, const std::string& command, const Config& config) {
  err << "# tcent " << kVersion << '\n' << "# command: " << command << '\n' << "# config:";
  for (const auto& [key, value] : config) err << ' ' << key << '=' << value;
  err << '\n';
}

// Writes through `writer` to --out if given, else to `out`.
void emit(const Options& opt, std::ostream& out, const std::function<void(std::ostream&)>& writer) {
  if (opt.out.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw DataError("cannot write '" + opt.out + "'");
  writer(file);
  if (!file) throw DataError("write failed for '" + opt.out + "'");
}

EvalRange parse_range(const std::string& text, const Tvg& tvg) {
  if (text.empty()) return default_eval_range(tvg.num_instants());
  auto colon = text.find(':');
  EvalRange r;
  auto num = [&](std::string_view s, TimeIndex& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
  };
  std::string_view view(text);
  if (colon == std::string::npos || !num(view.substr(0, colon), r.first) || !num(view.substr(colon + 1), r.last)) {
    throw UsageError("--range must look like FIRST:LAST (half-open), got '" + text + "'");
  }
  if (r.first >= r.last || r.last > tvg.num_instants()) {
    throw UsageError("--range " + text + " must satisfy FIRST < LAST <= " + std::to_string(tvg.num_instants()));
  }
  return r;
}

std::string range_text(EvalRange r) { return std::to_string(r.first) + ":" + std::to_string(r.last); }

MetricKind parse_metric(const std::string& name) {
  if (name == "ct") return MetricKind::CoverTime;
  if (name == "tcc") return MetricKind::Coverage;
  throw UsageError("--metric must be 'ct' or 'tcc'");
}

MetricSpec metric_spec(MetricKind kind, const Options& opt, const Tvg& tvg) {
  if (kind == MetricKind::CoverTime) {
    if (opt.tau.empty()) throw UsageError("--tau is required for the cover-time metric");
    return MetricSpec::cover_time(CoverageThreshold::from_decimal(opt.tau, tvg.num_nodes()));
  }
  if (opt.phi == 0) throw UsageError("--phi (>= 1) is required for the time-constrained coverage metric");
  return MetricSpec::coverage(opt.phi);
}

Config metric_config(const MetricSpec& spec, const Options& opt, EvalRange range) {
  Config c{{"input", opt.input}, {"metric", spec.name()}};
  if (spec.kind == MetricKind::CoverTime) {
    c.emplace_back("tau", spec.parameter);
    c.emplace_back("required_count", std::to_string(spec.required_count));
  } else {
    c.emplace_back("phi", std::to_string(spec.phi));
  }
  c.emplace_back("range", range_text(range));
  c.emplace_back("workers", std::to_string(opt.workers));
  return c;
}

MetricTable load_table(const std::string& path, MetricKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open table '" + path + "'");
  return read_table_csv(in, kind);
}

int cmd_generate(const Options& opt, std::ostream& err) {
  ErTvgSpec spec;
  if (opt.paper_defaults) {
    spec = paper_default_spec(opt.seed);
  } else {
    if (opt.nodes == 0 || opt.instants == 0 || opt.prob < 0.0) {
      throw UsageError("generate needs --nodes, --instants and --prob, or --paper-defaults");
    }
    spec = {opt.nodes, opt.instants, opt.prob, opt.seed};
  }
  std::ostringstream p;
  p.precision(12);
  p << spec.edge_probability;
  print_header(err, "generate",
               {{"nodes", std::to_string(spec.num_nodes)},
                {"instants", std::to_string(spec.num_instants)},
                {"prob", p.str()},
                {"seed", std::to_string(spec.seed)},
                {"out", opt.out}});
  save_tvg_file(opt.out, generate_er_tvg(spec));
  return kOk;
}

int cmd_ingest(const Options& opt, std::ostream& err) {
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw DataError("cannot open contacts file '" + opt.input + "'");
  auto records = parse_contacts(in);
  IngestConfig cfg{opt.granularity, opt.start, opt.end};
  IngestResult result = discretize(records, cfg);
  print_header(err, "ingest",
               {{"input", opt.input},
                {"granularity", std::to_string(opt.granularity)},
                {"start", std::to_string(result.start)},
                {"end", std::to_string(result.end)},
                {"out", opt.out}});
  err << "# ingested " << records.size() - result.rejected << " records, rejected " << result.rejected
      << " outside [start, end]; " << result.tvg.num_nodes() << " nodes, " << result.tvg.num_instants()
      << " snapshots\n";
  save_tvg_file(opt.out, result.tvg);
  if (!opt.labels_out.empty()) {
    std::ofstream labels(opt.labels_out, std::ios::binary);
    if (!labels) throw DataError("cannot write '" + opt.labels_out + "'");
    write_labels_csv(labels, result.tvg);
  }
  return kOk;
}

int cmd_sweep(MetricKind kind, const Options& opt, std::ostream& out, std::ostream& err) {
  const Tvg tvg = load_tvg_file(opt.input);
  const MetricSpec spec = metric_spec(kind, opt, tvg);
  const EvalRange range = parse_range(opt.range, tvg);
  print_header(err, spec.name(), metric_config(spec, opt, range));
  const MetricTable table = metric_sweep(tvg, spec, range, opt.workers);
  emit(opt, out, [&](std::ostream& o) { write_table_csv(o, table); });
  return kOk;
}

int cmd_dist(const Options& opt, std::ostream& out, std::ostream& err) {
  DistributionKind kind;
  if (opt.kind == "cdf") {
    kind = DistributionKind::Cdf;
  } else if (opt.kind == "ccdf") {
    kind = DistributionKind::Ccdf;
  } else {
    throw UsageError("--kind must be 'cdf' or 'ccdf'");
  }
  print_header(err, "dist", {{"input", opt.input}, {"kind", opt.kind}});
  const Distribution dist = empirical_distribution(load_table(opt.input, MetricKind::CoverTime), kind);
  err << "# " << dist.counted << " finite values, " << dist.excluded << " infinite excluded\n";
  emit(opt, out, [&](std::ostream& o) { write_distribution_csv(o, dist); });
  return kOk;
}

int cmd_rank(const Options& opt, std::ostream& out, std::ostream& err) {
  const MetricKind kind = parse_metric(opt.metric);
  print_header(err, "rank", {{"input", opt.input}, {"metric", opt.metric}, {"k", std::to_string(opt.k)}});
  const auto ranking = rank_instants(load_table(opt.input, kind), opt.k);
  emit(opt, out, [&](std::ostream& o) { write_ranking_csv(o, ranking); });
  return kOk;
}

int cmd_compare(const Options& opt, std::ostream& out, std::ostream& err) {
  const Tvg tvg = load_tvg_file(opt.input);
  const MetricSpec spec = metric_spec(parse_metric(opt.metric), opt, tvg);
  const EvalRange range = parse_range(opt.range, tvg);
  Config config = metric_config(spec, opt, range);
  config.emplace_back("k", std::to_string(opt.k));
  config.emplace_back("seed", std::to_string(opt.seed));
  print_header(err, "compare", config);
  const MetricTable table = metric_sweep(tvg, spec, range, opt.workers);
  const TopKComparison cmp = compare_topk_random(table, opt.k, opt.seed);
  write_comparison_summary(out, cmp);
  if (!opt.out.empty()) emit(opt, out, [&](std::ostream& o) { write_comparison_csv(o, cmp); });
  return kOk;
}

int cmd_churn(const Options& opt, std::ostream& out, std::ostream& err) {
  print_header(err, "churn", {{"input", opt.input}});
  const double churn = churn_rate(load_tvg_file(opt.input));
  emit(opt, out, [&](std::ostream& o) { o << "churn_rate\n" << format_value(churn) << '\n'; });
  return kOk;
}

int cmd_oracle_check(const Options& opt, std::ostream& out, std::ostream& err) {
  oracle::FuzzConfig cfg = opt.fuzz;
  cfg.seed = opt.seed;
  if (cfg.max_nodes == 0 || cfg.max_instants == 0) throw UsageError("--max-nodes and --max-instants must be positive");
  if (cfg.probabilities.empty()) throw UsageError("--prob needs at least one value");
  std::string probs;
  for (double p : cfg.probabilities) probs += (probs.empty() ? "" : ",") + format_value(p);
  print_header(err, "oracle-check",
               {{"instances", std::to_string(cfg.instances)},
                {"seed", std::to_string(cfg.seed)},
                {"max_nodes", std::to_string(cfg.max_nodes)},
                {"max_instants", std::to_string(cfg.max_instants)},
                {"probs", probs}});
  const oracle::FuzzReport report = oracle::fuzz_equivalence(cfg);
  out << "instances " << report.instances << ", comparisons " << report.comparisons << ", mismatches "
      << report.mismatch_count << '\n';
  for (const auto& m : report.mismatches) {
    out << "  mismatch: instance " << m.instance << " start (" << m.start.node << ", " << m.start.time
        << ") steps " << m.steps << '\n';
  }
  return report.mismatch_count == 0 ? kOk : kDataError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tcent: time-centrality analytics for time-varying graphs", "tcent"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options opt;

  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", opt.workers, "Worker threads (0 = all hardware threads)")->capture_default_str();
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--range", opt.range, "Start instants FIRST:LAST, half-open (default: first 82.5% of the TVG)");
  };

  auto* generate = app.add_subcommand("generate", "Generate a TVG of independent Erdos-Renyi snapshots");
  generate->add_option("--nodes", opt.nodes, "Number of nodes n");
  generate->add_option("--instants", opt.instants, "Number of snapshots T");
  generate->add_option("--prob", opt.prob, "Edge probability p in [0, 1]");
  generate->add_flag("--paper-defaults", opt.paper_defaults, "n = 160, T = 800, p = 0.01 ln(160)/160")
      ->excludes("--nodes", "--instants", "--prob");
  generate->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  generate->add_option("--out", opt.out, "Output TVG file")->required();

  auto* ingest = app.add_subcommand("ingest", "Discretize a timestamp,label_a,label_b contact log into a TVG");
  ingest->add_option("input", opt.input, "Contact CSV")->required();
  ingest->add_option("--granularity", opt.granularity, "Snapshot width in seconds")->capture_default_str();
  ingest->add_option("--start", opt.start, "First timestamp (default: earliest record)");
  ingest->add_option("--end", opt.end, "Last timestamp (default: latest record)");
  ingest->add_option("--out", opt.out, "Output TVG file")->required();
  ingest->add_option("--labels", opt.labels_out, "Optional node_id,label CSV");

  auto* ct = app.add_subcommand("ct", "Cover time CT(t, tau) for every start instant in a range");
  ct->add_option("input", opt.input, "TVG file")->required();
  ct->add_option("--tau", opt.tau, "Coverage fraction as a decimal in (0, 1]")->required();
  add_range(ct);
  add_workers(ct);
  ct->add_option("--out", opt.out, "Output CSV (default: stdout)");

  auto* tcc_cmd = app.add_subcommand("tcc", "Time-constrained coverage TCC(t, phi) for every start instant");
  tcc_cmd->add_option("input", opt.input, "TVG file")->required();
  tcc_cmd->add_option("--phi", opt.phi, "Step budget (>= 1)")->required();
  add_range(tcc_cmd);
  add_workers(tcc_cmd);
  tcc_cmd->add_option("--out", opt.out, "Output CSV (default: stdout)");

  auto* dist = app.add_subcommand("dist", "Empirical CDF/CCDF of a metric table (finite values)");
  dist->add_option("input", opt.input, "Metric table CSV from ct or tcc")->required();
  dist->add_option("--kind", opt.kind, "cdf or ccdf")->capture_default_str();
  dist->add_option("--out", opt.out, "Output CSV (default: stdout)");

  auto* rank = app.add_subcommand("rank", "Top-k most central instants of a metric table");
  rank->add_option("input", opt.input, "Metric table CSV from ct or tcc")->required();
  rank->add_option("--metric", opt.metric, "ct (lower is central) or tcc (higher is central)")->required();
  rank->add_option("--k", opt.k, "Number of instants")->capture_default_str();
  rank->add_option("--out", opt.out, "Output CSV (default: stdout)");

  auto* compare = app.add_subcommand("compare", "Top-k central instants versus k random instants");
  compare->add_option("input", opt.input, "TVG file")->required();
  compare->add_option("--metric", opt.metric, "ct or tcc")->required();
  compare->add_option("--tau", opt.tau, "Coverage fraction (ct)");
  compare->add_option("--phi", opt.phi, "Step budget (tcc)");
  compare->add_option("--k", opt.k, "Group size")->capture_default_str();
  compare->add_option("--seed", opt.seed, "Seed for the random group")->capture_default_str();
  add_range(compare);
  add_workers(compare);
  compare->add_option("--out", opt.out, "Comparison CSV (summary always goes to stdout)");

  auto* churn = app.add_subcommand("churn", "Fraction of active node pairs changing state between snapshots");
  churn->add_option("input", opt.input, "TVG file")->required();
  churn->add_option("--out", opt.out, "Output CSV (default: stdout)");

  auto* oracle_check = app.add_subcommand("oracle-check", "Fuzz the diffusion engine against the expanded digraph");
  oracle_check->add_option("--instances", opt.fuzz.instances, "Random TVGs to check")->capture_default_str();
  oracle_check->add_option("--seed", opt.seed, "Seed")->capture_default_str();
  oracle_check->add_option("--max-nodes", opt.fuzz.max_nodes, "Largest |V|")->capture_default_str();
  oracle_check->add_option("--max-instants", opt.fuzz.max_instants, "Largest N")->capture_default_str();
  oracle_check->add_option("--prob", opt.fuzz.probabilities, "Edge probabilities to cycle through")
      ->capture_default_str();
  oracle_check->group("");  // hidden from --help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*generate) return cmd_generate(opt, err);
    if (*ingest) return cmd_ingest(opt, err);
    if (*ct) return cmd_sweep(MetricKind::CoverTime, opt, out, err);
    if (*tcc_cmd) return cmd_sweep(MetricKind::Coverage, opt, out, err);
    if (*dist) return cmd_dist(opt, out, err);
    if (*rank) return cmd_rank(opt, out, err);
    if (*compare) return cmd_compare(opt, out, err);
    if (*churn) return cmd_churn(opt, out, err);
    if (*oracle_check) return cmd_oracle_check(opt, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace tcent::cli
