#include "phylorient/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <ostream>
#include <thread>

#include "phylorient/conditions.hpp"
#include "phylorient/constrained_orient.hpp"

namespace phylorient {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchConfig {
  bool independent_reticulations = false;  // prune (b): tree-child only
  bool collect_all = false;
  // Evaluated on a successful propagation.
  std::function<bool(const RootedOrienter&)> accept;
  std::string reject_reason;
};

struct EdgeSearch {
  std::vector<std::vector<VertexId>> found;
  std::uint64_t sets_tried = 0;
  std::map<std::string, std::uint64_t> pruned_by;
};

// Ordered backtracking over reticulation sets for a single root edge. Sets are
// produced in lexicographic order of their sorted vertex lists.
class ReticulationSearch {
 public:
  ReticulationSearch(const UndirectedNetwork& net, Edge root_edge, const SearchConfig& config)
      : net_(net), root_edge_(root_edge), config_(config), orienter_(net, root_edge) {
    for (VertexId v = 0; v < net.vertex_count(); ++v)
      if (!net.is_leaf(v)) candidates_.push_back(v);
    in_degree_.assign(net.vertex_count(), 1);
    blocked_.assign(net.vertex_count(), 0);
  }

  EdgeSearch run(std::size_t reticulation_count) {
    recurse(0, reticulation_count);
    return std::move(result_);
  }

 private:
  // Returns true when the search should stop.
  bool recurse(std::size_t start, std::size_t remaining) {
    if (remaining == 0) return evaluate();
    for (std::size_t i = start; i + remaining <= candidates_.size(); ++i) {
      const VertexId v = candidates_[i];
      if (blocked_[v]) {
        ++result_.pruned_by["adjacent_reticulations"];
        continue;
      }
      // Prune (c): the root's two children cannot both be reticulations.
      if (root_edge_.touches(v) && in_degree_[root_edge_.other(v)] == 2) {
        ++result_.pruned_by["root_endpoints"];
        continue;
      }
      choose(v, true);
      const bool stop = recurse(i + 1, remaining - 1);
      choose(v, false);
      if (stop) return true;
    }
    return false;
  }

  void choose(VertexId v, bool on) {
    in_degree_[v] = on ? 2 : 1;
    if (on)
      chosen_.push_back(v);
    else
      chosen_.pop_back();
    if (config_.independent_reticulations)
      for (VertexId w : net_.neighbors(v)) blocked_[w] += on ? 1 : -1;
  }

  bool evaluate() {
    ++result_.sets_tried;
    if (!orienter_.propagate(in_degree_)) {
      ++result_.pruned_by["degree_cut"];
      return false;
    }
    if (!config_.accept(orienter_)) {
      ++result_.pruned_by[config_.reject_reason];
      return false;
    }
    result_.found.push_back(chosen_);
    return !config_.collect_all;
  }

  const UndirectedNetwork& net_;
  Edge root_edge_;
  const SearchConfig& config_;
  RootedOrienter orienter_;
  std::vector<VertexId> candidates_;
  std::vector<unsigned> in_degree_;
  std::vector<int> blocked_;
  std::vector<VertexId> chosen_;
  EdgeSearch result_;
};

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  return std::exp(std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1));
}

void require_binary(const UndirectedNetwork& net) {
  if (!net.is_binary()) throw NetworkError(ErrorKind::DegreeViolation, "orientation search needs a binary network");
}

void guard(const UndirectedNetwork& net, const SearchLimits& limits) {
  std::size_t internal = net.vertex_count() - net.leaf_count();
  const double estimate = double(net.edge_count()) * binomial(internal, circuit_rank(net));
  if (estimate > limits.max_candidates)
    throw SizeGuardExceeded("reticulation-set search space", estimate, limits.max_candidates);
}

void merge(std::map<std::string, std::uint64_t>& into, const std::map<std::string, std::uint64_t>& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

// Runs the per-root-edge search over all edges, stopping at the first edge with
// a solution unless collecting. Returns per-edge results indexed like net.edges().
std::vector<std::optional<EdgeSearch>> search_edges(const UndirectedNetwork& net, const SearchConfig& config,
                                                    const SearchLimits& limits) {
  const auto& edges = net.edges();
  const std::size_t r = circuit_rank(net);
  std::vector<std::optional<EdgeSearch>> results(edges.size());
  std::mutex progress_mutex;

  auto run_one = [&](std::size_t i) {
    ReticulationSearch search(net, edges[i], config);
    results[i] = search.run(r);
    if (limits.progress) {
      std::lock_guard lock(progress_mutex);
      *limits.progress << "root edge " << (i + 1) << "/" << edges.size() << " (" << net.name(edges[i].u) << ","
                       << net.name(edges[i].v) << "): " << results[i]->sets_tried << " sets, "
                       << results[i]->found.size() << " accepted\n";
    }
  };

  const unsigned threads = std::max(1u, limits.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      run_one(i);
      if (!config.collect_all && !results[i]->found.empty()) break;
    }
    return results;
  }

  // Workers skip edges after the best (lowest-index) success found so far, so the
  // merged answer matches the sequential one.
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{edges.size()};
  auto worker = [&] {
    for (std::size_t i = next++; i < edges.size(); i = next++) {
      if (!config.collect_all && i > best.load()) continue;
      run_one(i);
      if (!config.collect_all && !results[i]->found.empty()) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return results;
}

SolverReport run_search(const UndirectedNetwork& net, const SearchConfig& config, const SearchLimits& limits,
                        SolverReport report) {
  const auto start = Clock::now();
  guard(net, limits);
  auto results = search_edges(net, config, limits);
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    ++report.roots_tried;
    report.reticulation_sets_tried += results[i]->sets_tried;
    merge(report.pruned_by, results[i]->pruned_by);
    if (!report.root_edge && !results[i]->found.empty()) {
      const Edge e = net.edges()[i];
      report.root_edge = e;
      report.reticulations = results[i]->found.front();
      report.outcome = Outcome::Orientable;
      report.solution = std::get<DirectedNetwork>(orient(net, reticulation_constraints(net, e, report.reticulations)));
    }
  }
  report.elapsed += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

SearchConfig tree_child_config() {
  SearchConfig config;
  config.independent_reticulations = true;
  config.reject_reason = "not_tree_child";
  config.accept = [](const RootedOrienter& o) { return is_tree_child(o.rooted().vertex_count(), o.arcs()); };
  return config;
}

}  // namespace

SolverReport tree_child_orient(const UndirectedNetwork& net, const SearchLimits& limits) {
  require_binary(net);
  const auto start = Clock::now();
  SolverReport report;
  const ConditionReport conditions = condition_report(net);
  if (!conditions.passes()) {
    for (const auto& failure : conditions.failures) report.pruned_by[failure] = 1;
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    return report;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return run_search(net, tree_child_config(), limits, std::move(report));
}

SolverReport orient_with_predicate(const UndirectedNetwork& net, const OrientationPredicate& predicate,
                                   const SearchLimits& limits) {
  require_binary(net);
  SearchConfig config;
  config.reject_reason = "predicate";
  config.accept = [&](const RootedOrienter& o) { return predicate(to_directed(o, net)); };
  return run_search(net, config, limits, SolverReport{});
}

std::vector<OrientationRecord> enumerate_tree_child_orientations(const UndirectedNetwork& net,
                                                                 const SearchLimits& limits) {
  require_binary(net);
  std::vector<OrientationRecord> out;
  if (!condition_report(net).passes()) return out;
  guard(net, limits);
  SearchConfig config = tree_child_config();
  config.collect_all = true;
  auto results = search_edges(net, config, limits);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Edge e = net.edges()[i];
    for (auto& reticulations : results[i]->found) {
      auto oriented = std::get<DirectedNetwork>(orient(net, reticulation_constraints(net, e, reticulations)));
      out.push_back({e, std::move(reticulations), std::move(oriented)});
    }
  }
  return out;
}

double count_leaf_placements(std::size_t edge_count, std::size_t count) {
  if (count == 0) return 1.0;
  // ways[j]: sequences so far whose last host index is j.
  std::vector<double> ways(edge_count, 1.0);
  for (std::size_t step = 1; step < count; ++step) {
    ways.resize(edge_count + 2 * step, 0.0);
    double running = 0.0;
    for (double& w : ways) {
      running += w;
      w = running;
    }
  }
  double total = 0.0;
  for (double w : ways) total += w;
  return total;
}

namespace {

struct PlacementState {
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<LeafPlacement> placements;
};

bool place(const UndirectedNetwork& net, PlacementState& state, std::size_t start, std::size_t remaining,
           const std::function<bool(const UndirectedNetwork&, const std::vector<LeafPlacement>&)>& visit) {
  if (remaining == 0) return visit(net, state.placements);
  for (std::size_t j = start; j < state.order.size(); ++j) {
    const auto host = state.order[j];
    const std::string label = net.names().unused("x" + std::to_string(state.placements.size() + 1));
    const UndirectedNetwork next = attach_leaf(net, net.edge_between(host.first, host.second), label);
    const std::string& parent = next.name(static_cast<VertexId>(net.vertex_count()));

    state.order[j] = {host.first, parent};
    state.order.emplace_back(parent, host.second);
    state.order.emplace_back(parent, label);
    state.placements.push_back({label, host.first, host.second});
    const bool keep_going = place(next, state, j, remaining - 1, visit);
    state.placements.pop_back();
    state.order.resize(state.order.size() - 2);
    state.order[j] = host;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

bool for_each_leaf_placement(
    const UndirectedNetwork& net, std::size_t count,
    const std::function<bool(const UndirectedNetwork&, const std::vector<LeafPlacement>&)>& visit) {
  PlacementState state;
  for (const Edge& e : net.edges()) state.order.emplace_back(net.name(e.u), net.name(e.v));
  return place(net, state, 0, count, visit);
}

std::optional<AugmentationResult> minimum_leaf_augmentation(const UndirectedNetwork& net, std::size_t max_added,
                                                            const SearchLimits& limits) {
  require_binary(net);
  for (std::size_t added = 0; added <= max_added; ++added) {
    const double placements = count_leaf_placements(net.edge_count(), added);
    if (placements > limits.max_placements)
      throw SizeGuardExceeded("leaf placements with " + std::to_string(added) + " added leaves", placements,
                              limits.max_placements);
    if (limits.progress) *limits.progress << "trying " << added << " added leaves (" << placements << " placements)\n";
    std::optional<AugmentationResult> found;
    for_each_leaf_placement(net, added, [&](const UndirectedNetwork& candidate, const auto& where) {
      SolverReport report = tree_child_orient(candidate, limits);
      if (!report.orientable()) return true;
      found = AugmentationResult{added, where, candidate, std::move(report)};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace phylorient
