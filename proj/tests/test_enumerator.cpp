#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "abc/error.hpp"
#include "abc/enumerator.hpp"
#include "abc/families.hpp"
#include "abc/graph6.hpp"
#include "abc/index_math.hpp"
#include "oracles.hpp"

using namespace abc;
using doctest::Approx;

namespace {

EnumerationTask task_of(int n, std::optional<ParamConstraint> c = std::nullopt, int shards = 1) {
  EnumerationTask t;
  t.n = n;
  t.constraint = c;
  t.shards = shards;
  return t;
}

void check_same(const ExtremalReport& a, const ExtremalReport& b) {
  CHECK(a.class_size == b.class_size);
  CHECK(a.max_value == b.max_value);
  CHECK(a.labeled_maximizers == b.labeled_maximizers);
  CHECK(a.runner_up_gap == b.runner_up_gap);
  REQUIRE(a.maximizer_iso_classes.size() == b.maximizer_iso_classes.size());
  for (std::size_t i = 0; i < a.maximizer_iso_classes.size(); ++i)
    CHECK(a.maximizer_iso_classes[i] == b.maximizer_iso_classes[i]);
}

}  // namespace

TEST_CASE("labeled connected counts match the recurrence") {
  CHECK(oracle::labeled_connected_count(4) == 38);
  CHECK(oracle::labeled_connected_count(5) == 728);
  for (int n = 2; n <= 6; ++n) CHECK(count_connected(task_of(n)) == oracle::labeled_connected_count(n));
}

TEST_CASE("enumeration yields distinct connected graphs in mask order") {
  const auto all = enumerate_connected(task_of(5));
  CHECK(all.size() == 728);
  const EdgeMaskDecoder dec(5);
  std::uint64_t prev = 0;
  bool first = true;
  for (const auto& g : all) {
    CHECK(oracle::connected_subset(g, g.vertex_mask()));
    const auto m = dec.encode(g);
    if (!first) CHECK(m > prev);
    prev = m;
    first = false;
  }
}

TEST_CASE("constraint filter") {
  const auto beta3 = enumerate_connected(task_of(4, ParamConstraint::make(Invariant::independence, 3)));
  bool has_star = false;
  for (const auto& g : beta3) {
    CHECK(independence_number(g) == 3);
    has_star = has_star || is_isomorphic(g, star(4));
  }
  CHECK(has_star);
  // Each connected graph lands in exactly one class per invariant. Pendant
  // count 0 is not a valid constraint, so those graphs are counted directly.
  for (int n = 3; n <= 6; ++n)
    for (Invariant kind : {Invariant::independence, Invariant::pendant, Invariant::edge_connectivity, Invariant::chromatic}) {
      std::uint64_t total = 0;
      if (kind == Invariant::pendant)
        for_each_connected(task_of(n), [&](const Graph& g) { total += pendant_count(g) == 0; });
      for (int v = 1; v <= n; ++v) total += count_connected(task_of(n, ParamConstraint::make(kind, v)));
      CAPTURE(n);
      CAPTURE(to_string(kind));
      CHECK(total == oracle::labeled_connected_count(n));
    }
}

TEST_CASE("max_abc_over_class examples") {
  const auto star5 = max_abc_over_class(task_of(5, ParamConstraint::make(Invariant::independence, 4)));
  REQUIRE(star5.max_value);
  CHECK(*star5.max_value == Approx(std::sqrt(12.0)).epsilon(1e-12));
  REQUIRE(star5.maximizer_iso_classes.size() == 1);
  CHECK(is_isomorphic(star5.maximizer_iso_classes[0], star(5)));
  CHECK(star5.labeled_maximizers == 5);

  const auto bip = max_abc_over_class(task_of(6, ParamConstraint::make(Invariant::chromatic, 2)));
  CHECK(*bip.max_value == Approx(6.0).epsilon(1e-12));
  REQUIRE(bip.maximizer_iso_classes.size() == 1);
  CHECK(is_isomorphic(bip.maximizer_iso_classes[0], join(empty(3), empty(3))));
  CHECK(bip.labeled_maximizers == 10);

  const auto ec = max_abc_over_class(task_of(6, ParamConstraint::make(Invariant::edge_connectivity, 2)));
  CHECK(std::abs(*ec.max_value - formula_edgeconn(6, 2)) <= 1e-9);
  REQUIRE(ec.maximizer_iso_classes.size() == 1);
  CHECK(is_isomorphic(ec.maximizer_iso_classes[0], build_edgeconn_extremal(6, 2)));
  CHECK(write_graph6(ec.maximizer_iso_classes[0]) == "E~~?");
}

TEST_CASE("report against an independent scan") {
  // Rescan with a plain loop and compare every field.
  for (int n = 4; n <= 6; ++n)
    for (int beta = 1; beta <= n - 1; ++beta) {
      const auto c = ParamConstraint::make(Invariant::independence, beta);
      const auto r = max_abc_over_class(task_of(n, c));
      double best = -1;
      std::vector<double> values;
      for (const auto& g : enumerate_connected(task_of(n))) {
        if (oracle::independence_number(g) != beta) continue;
        values.push_back(oracle::abc_direct(g));
        best = std::max(best, values.back());
      }
      CHECK(r.class_size == values.size());
      CHECK(std::abs(*r.max_value - best) <= 1e-12);
      std::uint64_t at_max = 0;
      double second = -1;
      for (double v : values) {
        if (v >= best - kAbcTolerance) ++at_max;
        else second = std::max(second, v);
      }
      CHECK(r.labeled_maximizers == at_max);
      CHECK(r.runner_up_gap.has_value() == (second >= 0));
      if (r.runner_up_gap) CHECK(std::abs(*r.runner_up_gap - (best - second)) <= 1e-12);
    }
}

TEST_CASE("shard count does not change the report") {
  for (int n = 4; n <= 6; ++n)
    for (Invariant kind : {Invariant::independence, Invariant::pendant, Invariant::edge_connectivity, Invariant::chromatic})
      for (int v = 1; v <= n - 1; ++v) {
        const auto c = ParamConstraint::make(kind, v);
        const auto one = max_abc_over_class(task_of(n, c, 1));
        for (int shards : {2, 3, 8, 64}) check_same(one, max_abc_over_class(task_of(n, c, shards)));
      }
}

TEST_CASE("empty class") {
  const auto r = max_abc_over_class(task_of(5, ParamConstraint::make(Invariant::independence, 5)));
  CHECK(r.class_size == 0);
  CHECK_FALSE(r.max_value.has_value());
  CHECK(r.maximizer_iso_classes.empty());
  CHECK_FALSE(r.runner_up_gap.has_value());
}

TEST_CASE("task validation") {
  CHECK_THROWS_AS(count_connected(task_of(1)), DomainError);
  CHECK_THROWS_AS(count_connected(task_of(8)), DomainError);
  CHECK_THROWS_AS(count_connected(task_of(9)), DomainError);
  CHECK_THROWS_AS(max_abc_over_class(task_of(5, ParamConstraint::make(Invariant::pendant, 1), 0)), DomainError);
  CHECK_THROWS_AS(max_abc_over_class(task_of(5)), DomainError);
  EnumerationTask t = task_of(8);
  t.allow_n8 = true;
  CHECK_NOTHROW(t.validate());
  t.n = 9;
  CHECK_THROWS_AS(t.validate(), DomainError);
}
