#include "tcent/centrality.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace tcent {

MetricSpec MetricSpec::cover_time(const CoverageThreshold& thr) {
  MetricSpec spec;
  spec.kind = MetricKind::CoverTime;
  spec.required_count = thr.required_count();
  spec.parameter = thr.text();
  return spec;
}

MetricSpec MetricSpec::coverage(std::uint32_t phi) {
  if (phi == 0) throw std::invalid_argument("phi must be positive");
  MetricSpec spec;
  spec.kind = MetricKind::Coverage;
  spec.phi = phi;
  spec.parameter = std::to_string(phi);
  return spec;
}

std::string MetricSpec::name() const { return kind == MetricKind::CoverTime ? "ct" : "tcc"; }

EvalRange default_eval_range(std::uint32_t num_instants) {
  auto last = static_cast<TimeIndex>((std::uint64_t{num_instants} * 825 + 999) / 1000);
  return {0, std::max<TimeIndex>(last, num_instants == 0 ? 0 : 1)};
}

namespace {

MetricValue cover_time_with(DiffusionEngine& engine, TimeIndex t, std::uint32_t required,
                            std::uint32_t& unreached) {
  const std::uint32_t n = engine.tvg().num_nodes();
  std::uint64_t total = 0;
  unreached = 0;
  for (NodeId u = 0; u < n; ++u) {
    StepCount steps = engine.cover_steps({u, t}, required);
    if (steps) {
      total += *steps;
    } else {
      ++unreached;
    }
  }
  if (unreached > 0) return MetricValue::inf();
  return {static_cast<double>(total) / static_cast<double>(n), true};
}

double tcc_with(DiffusionEngine& engine, TimeIndex t, std::uint32_t phi) {
  const std::uint64_t n = engine.tvg().num_nodes();
  std::uint64_t total = 0;
  for (NodeId u = 0; u < n; ++u) total += engine.constrained_count({u, t}, phi);
  return static_cast<double>(total) / static_cast<double>(n * n);
}

void check_instant(const Tvg& tvg, TimeIndex t) {
  if (t >= tvg.num_instants()) throw std::out_of_range("time index " + std::to_string(t) + " out of range");
}

}  // namespace

MetricValue cover_time(const Tvg& tvg, TimeIndex t, const CoverageThreshold& thr, std::uint32_t* unreached) {
  check_instant(tvg, t);
  if (thr.num_nodes() != tvg.num_nodes()) throw std::invalid_argument("threshold built for a different node count");
  DiffusionEngine engine(tvg);
  std::uint32_t missed = 0;
  MetricValue v = cover_time_with(engine, t, thr.required_count(), missed);
  if (unreached) *unreached = missed;
  return v;
}

double tcc(const Tvg& tvg, TimeIndex t, std::uint32_t phi) {
  check_instant(tvg, t);
  if (phi == 0) throw std::invalid_argument("phi must be positive");
  DiffusionEngine engine(tvg);
  return tcc_with(engine, t, phi);
}

MetricTable metric_sweep(const Tvg& tvg, const MetricSpec& spec, EvalRange range, unsigned workers) {
  if (range.last <= range.first) throw std::invalid_argument("evaluation range is empty");
  if (range.last > tvg.num_instants()) throw std::invalid_argument("evaluation range extends past the TVG");
  if (spec.kind == MetricKind::CoverTime &&
      (spec.required_count == 0 || spec.required_count > tvg.num_nodes())) {
    throw std::invalid_argument("required count outside [1, |V|]");
  }
  if (spec.kind == MetricKind::Coverage && spec.phi == 0) throw std::invalid_argument("phi must be positive");

  MetricTable table;
  table.spec = spec;
  table.num_nodes = tvg.num_nodes();
  table.first = range.first;
  table.values.resize(range.size());
  table.unreached.assign(range.size(), 0);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, range.size());

  // Each slot is written by exactly one worker, so the table is identical
  // for any worker count.
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      DiffusionEngine engine(tvg);
      for (std::uint32_t i = next++; i < range.size(); i = next++) {
        const TimeIndex t = range.first + i;
        if (spec.kind == MetricKind::CoverTime) {
          table.values[i] = cover_time_with(engine, t, spec.required_count, table.unreached[i]);
        } else {
          table.values[i] = {tcc_with(engine, t, spec.phi), true};
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return table;
}

bool more_central(MetricKind kind, const RankedInstant& l, const RankedInstant& r) noexcept {
  if (l.value.finite != r.value.finite) return l.value.finite;
  if (l.value.finite && l.value.value != r.value.value) {
    return kind == MetricKind::CoverTime ? l.value.value < r.value.value : l.value.value > r.value.value;
  }
  return l.time < r.time;
}

namespace {

std::vector<RankedInstant> ranked_all(const MetricTable& table) {
  std::vector<RankedInstant> all;
  all.reserve(table.values.size());
  for (std::size_t i = 0; i < table.values.size(); ++i) all.push_back({table.time_at(i), table.values[i]});
  std::sort(all.begin(), all.end(),
            [&](const RankedInstant& l, const RankedInstant& r) { return more_central(table.spec.kind, l, r); });
  return all;
}

}  // namespace

std::vector<RankedInstant> rank_instants(const MetricTable& table, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (table.values.empty()) throw std::invalid_argument("cannot rank an empty table");
  auto all = ranked_all(table);
  all.resize(std::min(k, all.size()));
  return all;
}

Distribution empirical_distribution(const MetricTable& table, DistributionKind kind) {
  if (table.values.empty()) throw std::invalid_argument("cannot build a distribution from an empty table");
  std::vector<double> finite;
  for (const auto& v : table.values) {
    if (v.finite) finite.push_back(v.value);
  }
  Distribution dist;
  dist.kind = kind;
  dist.excluded = table.values.size() - finite.size();
  dist.counted = finite.size();
  if (finite.empty()) throw DataError("every metric value is infinite; no distribution to build");
  std::sort(finite.begin(), finite.end());

  const double total = static_cast<double>(finite.size());
  for (std::size_t i = 0; i < finite.size();) {
    std::size_t j = i;
    while (j < finite.size() && finite[j] == finite[i]) ++j;
    // CDF: values <= x are the first j; CCDF: values >= x are all but the first i.
    double count = kind == DistributionKind::Cdf ? static_cast<double>(j) : static_cast<double>(finite.size() - i);
    dist.points.emplace_back(finite[i], count / total);
    i = j;
  }
  return dist;
}

MetricValue median(std::vector<MetricValue> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty set");
  std::sort(values.begin(), values.end(), [](const MetricValue& l, const MetricValue& r) {
    if (l.finite != r.finite) return l.finite;
    return l.finite && l.value < r.value;
  });
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  const MetricValue& lo = values[n / 2 - 1];
  const MetricValue& hi = values[n / 2];
  if (!lo.finite || !hi.finite) return MetricValue::inf();
  return {(lo.value + hi.value) / 2.0, true};
}

namespace {

std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t n) {
  // Rejection keeps the draw unbiased and the sequence platform-independent.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = engine();
    if (r >= threshold) return r % n;
  }
}

GroupSummary summarize(std::vector<RankedInstant> members) {
  GroupSummary g;
  std::vector<MetricValue> vals;
  for (const auto& m : members) vals.push_back(m.value);
  g.median = median(vals);
  // Plain value order, infinite last, whatever the metric.
  auto by_value = [](const RankedInstant& l, const RankedInstant& r) {
    if (l.value.finite != r.value.finite) return l.value.finite;
    return l.value.finite && l.value.value < r.value.value;
  };
  g.min = std::min_element(members.begin(), members.end(), by_value)->value;
  g.max = std::max_element(members.begin(), members.end(), by_value)->value;
  g.members = std::move(members);
  return g;
}

}  // namespace

TopKComparison compare_topk_random(const MetricTable& table, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (table.values.size() < 2 * k) {
    throw std::invalid_argument("evaluation range holds " + std::to_string(table.values.size()) +
                                " instants; need at least 2k = " + std::to_string(2 * k));
  }
  auto all = ranked_all(table);
  std::vector<RankedInstant> top(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));

  // Pool of non-top instants in time order, then a partial Fisher-Yates.
  std::vector<RankedInstant> pool(all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
  std::sort(pool.begin(), pool.end(), [](const RankedInstant& l, const RankedInstant& r) { return l.time < r.time; });
  std::mt19937_64 engine(seed);
  std::vector<RankedInstant> drawn;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + bounded(engine, pool.size() - i);
    std::swap(pool[i], pool[j]);
    drawn.push_back(pool[i]);
  }

  TopKComparison cmp;
  cmp.spec = table.spec;
  cmp.k = k;
  cmp.seed = seed;
  cmp.top = summarize(std::move(top));
  cmp.random = summarize(std::move(drawn));
  return cmp;
}

}  // namespace tcent
