#include "abc/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "abc/error.hpp"
#include "abc/index_math.hpp"

namespace abc {

namespace {

constexpr double kNoValue = -std::numeric_limits<double>::infinity();

struct Candidate {
  std::uint64_t mask;
  double value;
};

// Running maximum over one shard. `near` keeps every graph within the
// tolerance of the current maximum in ascending mask order; `below` is the
// best value that fell out of that window.
struct Partial {
  std::uint64_t class_size = 0;
  double max = kNoValue;
  double below = kNoValue;
  std::vector<Candidate> near;

  void offer(std::uint64_t mask, double value) {
    ++class_size;
    if (value > max) {
      max = value;
      prune();
    }
    if (value >= max - kAbcTolerance) {
      near.push_back({mask, value});
    } else {
      below = std::max(below, value);
    }
  }

  void absorb(const Partial& other) {
    class_size += other.class_size;
    max = std::max(max, other.max);
    below = std::max(below, other.below);
    near.insert(near.end(), other.near.begin(), other.near.end());
    prune();
  }

  void prune() {
    const double cutoff = max - kAbcTolerance;
    auto keep = std::stable_partition(near.begin(), near.end(), [&](const Candidate& c) { return c.value >= cutoff; });
    for (auto it = keep; it != near.end(); ++it) below = std::max(below, it->value);
    near.erase(keep, near.end());
  }
};

std::uint64_t mask_space(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

template <typename Visit>
void scan(const EnumerationTask& task, const EdgeMaskDecoder& decoder, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  const int min_edges = task.n - 1;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    if (std::popcount(mask) < min_edges) continue;
    const Graph g = decoder.decode(mask);
    if (!is_connected(g)) continue;
    if (task.constraint && !satisfies(g, *task.constraint)) continue;
    visit(mask, g);
  }
}

}  // namespace

void EnumerationTask::validate() const {
  const int ceiling = allow_n8 ? 8 : 7;
  if (n < 2 || n > ceiling) {
    throw DomainError("enumeration order must satisfy 2 <= n <= " + std::to_string(ceiling) + ", got " +
                      std::to_string(n) + (n == 8 ? " (n = 8 needs the explicit opt-in)" : ""));
  }
  if (shards < 1) throw DomainError("shard count must be at least 1, got " + std::to_string(shards));
}

void for_each_connected(const EnumerationTask& task, const std::function<void(const Graph&)>& visit) {
  task.validate();
  const EdgeMaskDecoder decoder(task.n);
  scan(task, decoder, 0, mask_space(task.n), [&](std::uint64_t, const Graph& g) { visit(g); });
}

std::vector<Graph> enumerate_connected(const EnumerationTask& task) {
  std::vector<Graph> out;
  for_each_connected(task, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_connected(const EnumerationTask& task) {
  std::uint64_t count = 0;
  for_each_connected(task, [&](const Graph&) { ++count; });
  return count;
}

ExtremalReport max_abc_over_class(const EnumerationTask& task) {
  task.validate();
  if (!task.constraint) throw DomainError("max_abc_over_class needs a constraint");
  const EdgeMaskDecoder decoder(task.n);
  const std::uint64_t space = mask_space(task.n);
  const auto shards = static_cast<std::uint64_t>(task.shards);

  std::vector<Partial> partials(shards);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t s = next++; s < shards; s = next++) {
      const std::uint64_t lo = space * s / shards;
      const std::uint64_t hi = space * (s + 1) / shards;
      Partial& p = partials[s];
      scan(task, decoder, lo, hi, [&](std::uint64_t mask, const Graph& g) { p.offer(mask, abc_index(g)); });
    }
  };
  const auto hw = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(shards, hw));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  Partial total;
  for (const auto& p : partials) total.absorb(p);

  ExtremalReport report;
  report.n = task.n;
  report.constraint = *task.constraint;
  report.class_size = total.class_size;
  if (total.class_size == 0) return report;
  report.max_value = total.max;
  report.labeled_maximizers = total.near.size();
  if (total.below != kNoValue) report.runner_up_gap = total.max - total.below;
  for (const auto& c : total.near) {
    const Graph g = decoder.decode(c.mask);
    const bool seen = std::any_of(report.maximizer_iso_classes.begin(), report.maximizer_iso_classes.end(),
                                  [&](const Graph& rep) { return is_isomorphic(rep, g); });
    if (!seen) report.maximizer_iso_classes.push_back(g);
  }
  return report;
}

}  // namespace abc
