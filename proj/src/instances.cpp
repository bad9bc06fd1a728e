#include "subcount/instances.hpp"

#include <algorithm>
#include <set>

#include "subcount/oracle.hpp"
#include "subcount/rng.hpp"

namespace subcount {

namespace {

constexpr std::uint64_t kIdStream = 0x706c616e746564ULL;

void check_planted_pattern(const PatternGraph& h) {
  if (!h.connected()) fail(Errc::Disconnected, "planting needs a connected pattern");
  if (h.edges.size() < 2)
    fail(Errc::SingleEdgePattern,
         "planting needs >= 2 hyperedges, otherwise padding creates copies");
}

}  // namespace

PlantedInstance gen_planted(const PatternGraph& h, std::int64_t copies, std::uint64_t seed,
                            const PlantedOptions& opts) {
  check_planted_pattern(h);
  if (copies < 0) fail(Errc::ParameterDomain, "negative copy count");
  Rng rng(seed);
  std::set<DataEdge> edge_set;
  const std::size_t k = static_cast<std::size_t>(h.k);

  std::uint64_t next_id = 0;
  auto fresh_id = [&] { return hash64(seed, kIdStream, next_id++); };

  if (!opts.allow_overlap) {
    for (std::int64_t c = 0; c < copies; ++c) {
      std::vector<std::uint64_t> ids(k);
      for (auto& id : ids) id = fresh_id();
      for (const auto& e : h.edges) {
        std::vector<std::uint64_t> ev;
        for (int v : e) ev.push_back(ids[static_cast<std::size_t>(v)]);
        edge_set.insert(make_data_edge(std::move(ev)));
      }
    }
  } else {
    // a shared pool sized for moderate collision pressure
    std::uint64_t isq = 1;
    while (isq * isq < static_cast<std::uint64_t>(std::max<std::int64_t>(copies, 1))) ++isq;
    std::uint64_t pool = std::max<std::uint64_t>(k, 3 * k * isq);
    std::vector<std::uint64_t> pool_ids(pool);
    for (auto& id : pool_ids) id = fresh_id();
    for (std::int64_t c = 0; c < copies; ++c) {
      std::vector<std::uint64_t> pick;
      std::set<std::uint64_t> chosen;
      while (pick.size() < k) {
        std::uint64_t id = pool_ids[rng.bounded(pool)];
        if (chosen.insert(id).second) pick.push_back(id);
      }
      for (const auto& e : h.edges) {
        std::vector<std::uint64_t> ev;
        for (int v : e) ev.push_back(pick[static_cast<std::size_t>(v)]);
        edge_set.insert(make_data_edge(std::move(ev)));
      }
    }
  }

  const std::size_t pad_arity = h.edges.front().size();
  for (std::size_t i = 0; i < opts.pad_edges; ++i) {
    std::vector<std::uint64_t> ev(pad_arity);
    for (auto& id : ev) id = fresh_id();
    edge_set.insert(make_data_edge(std::move(ev)));
  }

  PlantedInstance inst;
  for (const auto& e : edge_set) inst.stream.push_back({1, e});
  rng.shuffle(inst.stream);

  DataGraph g = graph_from_stream(inst.stream);
  inst.m = g.m();
  inst.n = g.n();
  inst.max_degree = g.max_degree();
  if (opts.allow_overlap) {
    if (inst.m > opts.verify_edge_cap)
      fail(Errc::ParameterDomain, "overlapping instance too large to oracle-count");
    inst.true_count = exact_count(g, h).copies;
  } else {
    inst.true_count = copies;
    if (opts.verify && inst.m <= opts.verify_edge_cap &&
        exact_count(g, h).copies != copies)
      throw std::logic_error("planted instance produced a wrong copy count");
  }
  return inst;
}

ReductionInstance gen_reduction(const PatternGraph& h, std::int64_t n, std::int64_t t,
                                const Rat& eps, bool promise_yes, std::uint64_t seed) {
  if (!h.connected()) fail(Errc::Disconnected, "reduction needs a connected pattern");
  const std::size_t ne = h.edges.size();
  if (ne < 2) fail(Errc::TooFewEdges, "reduction needs >= 2 hyperedges");
  if (ne > 20) fail(Errc::TooLarge, "2^|E| blowup too large");
  if (t < 1) fail(Errc::ParameterDomain, "t must be positive");
  if (eps <= 0 || eps > 1) fail(Errc::ParameterDomain, "eps must lie in (0, 1]");
  if (denominator(eps * Rat(t)) != 1) fail(Errc::ParameterDomain, "eps * t must be an integer");
  if (t > n / 10) fail(Errc::ParameterDomain, "t must not exceed n/10");
  const std::int64_t t_prime = t << ne;
  if (t_prime > n)
    fail(Errc::ParameterDomain, "2^|E| * t exceeds n; shrink t or grow n");
  const std::int64_t eps_tp = (eps * Rat(t_prime)).convert_to<std::int64_t>();
  const std::int64_t big_n = t_prime + (n - t_prime) * static_cast<std::int64_t>(ne);
  const std::size_t k = static_cast<std::size_t>(h.k);

  Rng rng(seed);

  // Player strings first, then the promise constraint pins player 0's
  // prefix, so YES and NO variants of one seed differ only there.
  std::vector<std::vector<std::uint8_t>> bits(ne, std::vector<std::uint8_t>(n));
  for (auto& x : bits)
    for (auto& b : x) b = static_cast<std::uint8_t>(rng.flip());
  for (std::int64_t i = 0; i < eps_tp; ++i) {
    std::uint8_t acc = promise_yes ? 0 : 1;
    for (std::size_t e = 1; e < ne; ++e) acc ^= bits[e][static_cast<std::size_t>(i)];
    bits[0][static_cast<std::size_t>(i)] = acc;
  }

  // presentation order within each player's block
  std::vector<std::vector<std::int64_t>> play_order(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    auto& ord = play_order[e];
    ord.resize(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) ord[static_cast<std::size_t>(j)] = j;
    rng.shuffle(ord);
  }

  // per-pattern-vertex block permutations of [N]
  std::vector<std::vector<std::int64_t>> pi_v(k);
  for (std::size_t v = 0; v < k; ++v) {
    auto& perm = pi_v[v];
    perm.resize(static_cast<std::size_t>(big_n));
    for (std::int64_t i = 0; i < big_n; ++i) perm[static_cast<std::size_t>(i)] = i;
    rng.shuffle(perm);
  }

  // rho_e maps local index i to the pre-index: identity on [T'], then the
  // player's private chunk in ascending order
  auto pre_index = [&](std::size_t e, std::int64_t i) {
    return i < t_prime ? i : t_prime + static_cast<std::int64_t>(e) * (n - t_prime) + (i - t_prime);
  };

  ReductionInstance inst;
  inst.promise_yes = promise_yes;
  inst.t_prime = t_prime;
  inst.eps_t_prime = eps_tp;
  inst.n_block = big_n;
  inst.trials_tail = t_prime - eps_tp;
  inst.trials_prefix = eps_tp;
  inst.p_tail = std::ldexp(1.0, -static_cast<int>(ne));
  inst.p_prefix = std::ldexp(1.0, 1 - static_cast<int>(ne));

  for (std::size_t e = 0; e < ne; ++e) {
    for (std::int64_t i_local : play_order[e]) {
      if (bits[e][static_cast<std::size_t>(i_local)] != 0) continue;
      std::int64_t j = pre_index(e, i_local);
      std::vector<std::uint64_t> ev;
      ev.reserve(h.edges[e].size());
      for (int v : h.edges[e]) {
        std::int64_t block = pi_v[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
        ev.push_back(static_cast<std::uint64_t>(block) * k + static_cast<std::uint64_t>(v));
      }
      inst.stream.push_back({1, make_data_edge(std::move(ev))});
    }
  }

  inst.formula_count = 0;
  for (std::int64_t i = 0; i < t_prime; ++i) {
    bool all_zero = true;
    for (std::size_t e = 0; e < ne; ++e) all_zero &= bits[e][static_cast<std::size_t>(i)] == 0;
    inst.formula_count += all_zero;
  }
  inst.player_bits = std::move(bits);
  return inst;
}

Stream gen_random_bounded(std::size_t n, std::size_t m, std::size_t d, std::size_t arity,
                          std::uint64_t seed) {
  if (arity < 1 || n < arity) fail(Errc::ParameterDomain, "need n >= arity >= 1");
  if (m * arity > n * d) fail(Errc::Infeasible, "m exceeds n*d/arity");
  Rng rng(seed);
  std::set<DataEdge> seen;
  std::vector<std::size_t> degree(n, 0);
  Stream s;
  std::size_t stalls = 0;
  const std::size_t stall_cap = 10000 + 200 * m;
  while (seen.size() < m) {
    if (stalls++ > stall_cap) fail(Errc::Infeasible, "rejection sampling stalled");
    std::set<std::uint64_t> pick;
    while (pick.size() < arity) pick.insert(rng.bounded(n));
    bool ok = true;
    for (std::uint64_t v : pick) ok &= degree[static_cast<std::size_t>(v)] < d;
    if (!ok) continue;
    DataEdge e{std::vector<std::uint64_t>(pick.begin(), pick.end())};
    if (!seen.insert(e).second) continue;
    for (std::uint64_t v : e.v) ++degree[static_cast<std::size_t>(v)];
    s.push_back({1, std::move(e)});
    stalls = 0;
  }
  return s;
}

}  // namespace subcount
