#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gorenstein/base_polytope.hpp"
#include "gorenstein/canonical.hpp"
#include "gorenstein/connectivity.hpp"
#include "gorenstein/constructions.hpp"
#include "gorenstein/gorenstein_check.hpp"
#include "gorenstein/graphic_matroid.hpp"
#include "gorenstein/multigraph.hpp"

namespace gorenstein {

struct CensusBounds {
  std::size_t max_vertices = 6;
  std::size_t max_edges = 10;
  std::size_t max_multiplicity = 5;

  void validate() const {
    if (max_vertices < 2) throw std::invalid_argument("max_vertices must be at least 2");
    if (max_edges < 1) throw std::invalid_argument("max_edges must be at least 1");
    if (max_multiplicity < 1) throw std::invalid_argument("max_multiplicity must be at least 1");
    if (max_vertices > 8) throw std::invalid_argument("census is limited to 8 vertices");
  }
};

namespace detail {

// Simple 2-connected graphs on n labelled vertices with at most `max_edges`
// edges, one per isomorphism class.
inline std::set<CanonicalForm> simple_skeletons(std::size_t n, std::size_t max_edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<CanonicalForm> out;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const auto m = static_cast<std::size_t>(std::popcount(mask));
    if (m > max_edges || m < n - (n > 2 ? 0 : 1)) continue;
    Multigraph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1u) g.add_edge(pairs[k].first, pairs[k].second);
    if (is_two_connected(g)) out.insert(canonical_form(g));
  }
  return out;
}

inline void raise_multiplicities(const Multigraph& skeleton, const CensusBounds& b, std::size_t index,
                                 std::vector<std::size_t>& mult, std::size_t total, std::set<CanonicalForm>& out) {
  const auto edges = skeleton.edges();
  if (index == edges.size()) {
    Multigraph g(skeleton.vertex_count());
    for (std::size_t k = 0; k < edges.size(); ++k)
      for (std::size_t c = 0; c < mult[k]; ++c) g.add_edge(edges[k].u, edges[k].v);
    out.insert(canonical_form(g));
    return;
  }
  for (std::size_t m = 1; m <= b.max_multiplicity && total + m - 1 <= b.max_edges; ++m) {
    mult[index] = m;
    raise_multiplicities(skeleton, b, index + 1, mult, total + m - 1, out);
  }
}

}  // namespace detail

/// Every 2-connected loop-free multigraph within the bounds, once per
/// isomorphism class, as canonical forms in increasing order. K_2 is
/// included.
inline std::vector<CanonicalForm> enumerate_forms(const CensusBounds& b) {
  b.validate();
  std::set<CanonicalForm> all;
  for (std::size_t n = 2; n <= b.max_vertices; ++n) {
    for (const auto& skel : detail::simple_skeletons(n, b.max_edges)) {
      Multigraph s = skel.to_graph();
      std::vector<std::size_t> mult(s.edge_count(), 1);
      detail::raise_multiplicities(s, b, 0, mult, s.edge_count(), all);
    }
  }
  return {all.begin(), all.end()};
}

inline std::vector<Multigraph> enumerate(const CensusBounds& b) {
  std::vector<Multigraph> out;
  for (const auto& f : enumerate_forms(b)) out.push_back(f.to_graph());
  return out;
}

/// Runs fn(i) for i in [0, count) on a small pool of threads; results are
/// written by index so the output order does not depend on scheduling.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, Fn fn, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<Result> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Criterion equivalence.

struct EquivalenceMismatch {
  CanonicalForm canonical;
  std::int64_t delta = 0;
  bool spade = false;
  bool heart = false;
  bool oracle = false;
  std::string detail;
};

struct EquivalenceReport {
  CensusBounds bounds;
  std::size_t total = 0;
  std::size_t skipped = 0;  // K_2: its polytope is a single point
  std::size_t pairs_checked = 0;
  std::vector<std::pair<CanonicalForm, std::int64_t>> gorenstein;
  std::vector<CanonicalForm> weightless;  // some edge with neither G\e nor G/e 2-connected
  std::vector<EquivalenceMismatch> mismatches;
};

namespace detail {

struct EquivalenceOutcome {
  bool skipped = false;
  bool weightless = false;
  std::size_t pairs = 0;
  std::vector<std::int64_t> passing;
  std::vector<EquivalenceMismatch> mismatches;
};

inline EquivalenceOutcome check_equivalence(const CanonicalForm& form) {
  EquivalenceOutcome r;
  const Multigraph g = form.to_graph();
  if (g.edge_count() < 2) {
    r.skipped = true;
    return r;
  }
  SubsetConnectivity cache(g);
  const BasePolytope hull = oracle_polytope(g);
  const auto top = static_cast<std::int64_t>(g.edge_count()) + 1;
  for (std::int64_t delta = 2; delta <= top; ++delta) {
    auto w = weight_function(g, delta);
    if (!w) r.weightless = true;
    const bool spade = w && check_spade(cache, *w);
    const bool heart = w && check_heart(cache, *w);
    auto point = gorenstein_point_at(hull, delta);
    const bool oracle = point.has_value();
    ++r.pairs;
    if (spade != heart || spade != oracle) {
      r.mismatches.push_back({form, delta, spade, heart, oracle, "verdicts disagree"});
      continue;
    }
    if (!spade) continue;
    r.passing.push_back(delta);
    LatticePoint expected;
    for (EdgeId id : g.edge_ids()) expected.push_back((*w)[id]);
    if (*point != expected) r.mismatches.push_back({form, delta, true, true, true, "Gorenstein point differs from weights"});
  }
  if (r.passing.size() > 1)
    r.mismatches.push_back({form, r.passing[1], true, true, true, "more than one passing delta"});
  return r;
}

}  // namespace detail

/// For every census graph with at least two edges and every delta in
/// [2, |E| + 1]: spade, heart and the hull oracle agree, and the oracle's
/// point equals the weight vector.
inline EquivalenceReport verify_equivalence(const CensusBounds& b, unsigned threads = 0) {
  EquivalenceReport rep;
  rep.bounds = b;
  const auto forms = enumerate_forms(b);
  rep.total = forms.size();
  auto outcomes = parallel_map<detail::EquivalenceOutcome>(
      forms.size(), [&](std::size_t i) { return detail::check_equivalence(forms[i]); }, threads);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto& o = outcomes[i];
    if (o.skipped) ++rep.skipped;
    if (o.weightless) rep.weightless.push_back(forms[i]);
    rep.pairs_checked += o.pairs;
    for (auto d : o.passing) rep.gorenstein.emplace_back(forms[i], d);
    for (auto& m : o.mismatches) rep.mismatches.push_back(std::move(m));
  }
  return rep;
}

// Classification.

struct ClassificationMismatch {
  CanonicalForm canonical;
  bool spade = false;
  bool trace = false;
  std::string detail;
};

struct ClassificationEntry {
  CanonicalForm canonical;
  ConstructionTrace trace;
};

struct ClassificationReport {
  std::int64_t delta = 2;
  CensusBounds bounds;
  std::size_t total = 0;
  std::vector<ClassificationEntry> gorenstein;
  std::vector<ClassificationMismatch> mismatches;
};

namespace detail {

struct ClassificationOutcome {
  std::optional<ConstructionTrace> trace;
  std::optional<ClassificationMismatch> mismatch;
};

inline ClassificationOutcome check_classification(const CanonicalForm& form, std::int64_t delta) {
  ClassificationOutcome r;
  const Multigraph g = form.to_graph();
  auto w = weight_function(g, delta);
  const bool spade = w && check_spade(g, *w);
  r.trace = decompose(g, delta);
  const bool traced = r.trace.has_value();
  if (spade != traced) {
    r.mismatch = ClassificationMismatch{form, spade, traced, "spade verdict and decomposition disagree"};
  } else if (traced && canonical_form(replay(*r.trace)) != form) {
    r.mismatch = ClassificationMismatch{form, spade, traced, "trace does not replay to the graph"};
  } else if (delta == 2 && spade && !g.is_simple() && !(g.vertex_count() == 2 && g.edge_count() == 2)) {
    r.mismatch = ClassificationMismatch{form, spade, traced, "non-simple delta-2 graph other than C_2"};
  }
  return r;
}

}  // namespace detail

/// For every census graph: spade at delta holds exactly when decompose
/// finds a trace, and every trace replays to the graph.
inline ClassificationReport verify_classification(std::int64_t delta, const CensusBounds& b, unsigned threads = 0) {
  if (delta < 2) throw std::invalid_argument("delta must be at least 2");
  ClassificationReport rep;
  rep.delta = delta;
  rep.bounds = b;
  const auto forms = enumerate_forms(b);
  rep.total = forms.size();
  auto outcomes = parallel_map<detail::ClassificationOutcome>(
      forms.size(), [&](std::size_t i) { return detail::check_classification(forms[i], delta); }, threads);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (outcomes[i].trace) rep.gorenstein.push_back({forms[i], std::move(*outcomes[i].trace)});
    if (outcomes[i].mismatch) rep.mismatches.push_back(std::move(*outcomes[i].mismatch));
  }
  return rep;
}

// Facet duality.

/// Facets compared by their slack vectors over the vertex list; two
/// primitive functionals describe the same facet exactly when these agree.
inline bool same_facets(const std::vector<FacetInequality>& a, const std::vector<FacetInequality>& b,
                        const std::vector<LatticePoint>& vertices) {
  if (a.size() != b.size()) return false;
  std::vector<std::vector<Integer>> sa, sb;
  for (const auto& f : a) sa.push_back(slack_vector(f, vertices));
  for (const auto& f : b) sb.push_back(slack_vector(f, vertices));
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

struct DualityReport {
  CensusBounds bounds;
  std::size_t total = 0;
  std::size_t checked = 0;
  std::vector<CanonicalForm> mismatches;
};

/// The facet list generated from the graph equals the hull of the
/// spanning-tree vectors, for every census graph with at least two edges.
inline DualityReport verify_facet_duality(const CensusBounds& b, unsigned threads = 0) {
  DualityReport rep;
  rep.bounds = b;
  const auto forms = enumerate_forms(b);
  rep.total = forms.size();
  auto ok = parallel_map<int>(
      forms.size(),
      [&](std::size_t i) {
        const Multigraph g = forms[i].to_graph();
        if (g.edge_count() < 2) return -1;
        const BasePolytope p = build_polytope(g);
        return same_facets(p.facets, hull_facets_oracle(p.vertices), p.vertices) ? 1 : 0;
      },
      threads);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (ok[i] < 0) continue;
    ++rep.checked;
    if (ok[i] == 0) rep.mismatches.push_back(forms[i]);
  }
  return rep;
}

// Census records.

struct CensusRecord {
  CanonicalForm canonical;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::optional<std::int64_t> delta;
  std::optional<WeightAssignment> weights;
  std::size_t good_flat_count = 0;
  std::size_t facet_count = 0;
  std::optional<ConstructionTrace> trace;
  std::string mismatch;  // empty when the record is consistent
};

/// One record per census graph. With `with_traces`, every Gorenstein graph
/// is decomposed at its delta and the trace checked by replay.
inline std::vector<CensusRecord> census_records(const CensusBounds& b, bool with_traces, unsigned threads = 0) {
  const auto forms = enumerate_forms(b);
  return parallel_map<CensusRecord>(
      forms.size(),
      [&](std::size_t i) {
        CensusRecord r;
        r.canonical = forms[i];
        const Multigraph g = forms[i].to_graph();
        r.vertices = g.vertex_count();
        r.edges = g.edge_count();
        r.good_flat_count = good_flats(g).size();
        r.facet_count = g.edge_count() < 2 ? 0 : build_polytope(g).facets.size();
        try {
          if (auto v = is_gorenstein(g)) {
            r.delta = v->delta;
            r.weights = std::move(v->weights);
          }
        } catch (const criterion_mismatch& e) {
          r.mismatch = e.what();
          return r;
        }
        if (with_traces && r.delta) {
          r.trace = decompose(g, *r.delta);
          if (!r.trace)
            r.mismatch = "Gorenstein graph without a construction trace";
          else if (canonical_form(replay(*r.trace)) != r.canonical)
            r.mismatch = "trace does not replay to the graph";
        }
        return r;
      },
      threads);
}

}  // namespace gorenstein
