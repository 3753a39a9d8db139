#include "tcent/diffusion.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tcent {
namespace {

__extension__ typedef unsigned __int128 Wide;

}  // namespace

CoverageThreshold CoverageThreshold::from_decimal(std::string_view tau, std::uint32_t num_nodes) {
  if (num_nodes == 0) throw std::invalid_argument("coverage threshold needs at least one node");
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("tau must be a decimal in (0, 1], got '" + std::string(tau) + "'");
  };
  auto dot = tau.find('.');
  std::string_view whole = tau.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : tau.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw bad();
  if (dot != std::string_view::npos && frac.empty()) throw bad();
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  if (!all_digits(whole) || !all_digits(frac)) throw bad();

  // Trailing zeros carry no value; dropping them keeps 10^digits small.
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
  if (frac.size() > 18) throw std::invalid_argument("tau has too many decimal digits");

  // tau = numerator / 10^digits, exactly.
  Wide denominator = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) denominator *= 10;
  Wide numerator = 0;
  std::size_t leading = whole.find_first_not_of('0');
  whole = leading == std::string_view::npos ? std::string_view{} : whole.substr(leading);
  if (whole.size() > 1) throw bad();
  for (char c : whole) numerator = numerator * 10 + static_cast<unsigned>(c - '0');
  numerator *= denominator;
  Wide frac_value = 0;
  for (char c : frac) frac_value = frac_value * 10 + static_cast<unsigned>(c - '0');
  numerator += frac_value;
  if (numerator == 0 || numerator > denominator) throw bad();

  Wide scaled = numerator * num_nodes;
  auto required = static_cast<std::uint32_t>((scaled + denominator - 1) / denominator);
  return CoverageThreshold(required, num_nodes, std::string(tau));
}

CoverageThreshold CoverageThreshold::from_count(std::uint32_t count, std::uint32_t num_nodes) {
  if (count == 0 || count > num_nodes) {
    throw std::invalid_argument("required count must lie in [1, " + std::to_string(num_nodes) + "]");
  }
  return CoverageThreshold(count, num_nodes, std::to_string(count) + "/" + std::to_string(num_nodes));
}

DiffusionEngine::DiffusionEngine(const Tvg& tvg)
    : tvg_(&tvg), informed_at_(tvg.num_nodes(), kUninformed) {
  informed_list_.reserve(tvg.num_nodes());
}

void DiffusionEngine::reset(TemporalNode start) {
  if (start.node >= tvg_->num_nodes() || start.time >= tvg_->num_instants()) {
    throw std::out_of_range("start (" + std::to_string(start.node) + ", " + std::to_string(start.time) +
                            ") is not a temporal node of the TVG");
  }
  for (NodeId v : informed_list_) informed_at_[v] = kUninformed;
  informed_list_.clear();
  informed_at_[start.node] = 0;
  informed_list_.push_back(start.node);
}

std::uint32_t DiffusionEngine::step(TimeIndex t, std::uint32_t s) {
  // Sweep contacts rather than the informed set: snapshots are sparse.
  for (const auto& [a, b] : tvg_->snapshot(t)) {
    const bool a_relays = informed_at_[a] <= s;
    const bool b_relays = informed_at_[b] <= s;
    if (a_relays && informed_at_[b] == kUninformed) {
      informed_at_[b] = s + 1;
      informed_list_.push_back(b);
    } else if (b_relays && informed_at_[a] == kUninformed) {
      informed_at_[a] = s + 1;
      informed_list_.push_back(a);
    }
  }
  return static_cast<std::uint32_t>(informed_list_.size());
}

DiffusionTrace DiffusionEngine::diffuse(TemporalNode start, const StopRule& stop) {
  reset(start);
  DiffusionTrace trace{start, {1}, false};
  const TimeIndex n = tvg_->num_instants();
  for (std::uint32_t s = 0;; ++s) {
    if (stop.required_count && trace.sizes.back() >= *stop.required_count) break;
    if (stop.max_steps && s == *stop.max_steps) break;
    if (start.time + s == n) {
      trace.exhausted = true;
      break;
    }
    trace.sizes.push_back(step(start.time + s, s));
  }
  return trace;
}

StepCount DiffusionEngine::cover_steps(TemporalNode start, std::uint32_t required_count) {
  reset(start);
  const TimeIndex n = tvg_->num_instants();
  std::uint32_t count = 1;
  for (std::uint32_t s = 0;; ++s) {
    if (count >= required_count) return s;
    if (start.time + s == n) return std::nullopt;
    count = step(start.time + s, s);
  }
}

std::uint32_t DiffusionEngine::constrained_count(TemporalNode start, std::uint32_t phi) {
  if (phi == 0) throw std::invalid_argument("step budget phi must be positive");
  reset(start);
  const TimeIndex n = tvg_->num_instants();
  const std::uint32_t steps = std::min<std::uint32_t>(phi, n - start.time);
  std::uint32_t count = 1;
  for (std::uint32_t s = 0; s < steps && count < tvg_->num_nodes(); ++s) count = step(start.time + s, s);
  return count;
}

std::vector<NodeId> DiffusionEngine::informed() const {
  std::vector<NodeId> out = informed_list_;
  std::sort(out.begin(), out.end());
  return out;
}

DiffusionTrace diffuse(const Tvg& tvg, TemporalNode start, const StopRule& stop) {
  return DiffusionEngine(tvg).diffuse(start, stop);
}

StepCount cover_steps(const Tvg& tvg, TemporalNode start, const CoverageThreshold& thr) {
  return DiffusionEngine(tvg).cover_steps(start, thr);
}

std::uint32_t constrained_count(const Tvg& tvg, TemporalNode start, std::uint32_t phi) {
  return DiffusionEngine(tvg).constrained_count(start, phi);
}

}  // namespace tcent
