#pragma once

#include <cstdint>
#include <vector>

#include "subcount/hypergraph.hpp"
#include "subcount/rational.hpp"

namespace subcount {

struct PlantedInstance {
  Stream stream;
  std::int64_t true_count = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
};

struct PlantedOptions {
  std::size_t pad_edges = 0;
  bool allow_overlap = false;      // copies may share vertices; truth from the oracle
  bool verify = true;              // oracle-check the count at construction
  std::size_t verify_edge_cap = 20000;
};

// `copies` vertex-disjoint embeddings of H plus pairwise-disjoint padding
// edges, emitted as a seeded shuffle of insertions. Connected H with at
// least two hyperedges keeps padding inert, so true_count == copies.
PlantedInstance gen_planted(const PatternGraph& h, std::int64_t copies, std::uint64_t seed,
                            const PlantedOptions& opts = {});

// One player's-eye instance of the promise game behind the lower bound:
// |E_H| players hold n-bit strings whose length-eps*T' prefixes XOR to the
// all-zeros (YES) or all-ones (NO) string, and each emits hyperedges for the
// zero bits of its block. The realized copy count is exactly the number of
// prefix positions where every player holds a zero.
struct ReductionInstance {
  Stream stream;
  bool promise_yes = false;
  std::int64_t formula_count = 0;  // #{i < T' : all player bits at i are 0}
  std::int64_t t_prime = 0;        // 2^{|E_H|} * t
  std::int64_t eps_t_prime = 0;
  std::int64_t n_block = 0;        // N = T' + (n - T') |E_H|
  std::vector<std::vector<std::uint8_t>> player_bits;
  // Copy-count law over the seed distribution:
  //   NO : Bi(trials_tail, p_tail)
  //   YES: Bi(trials_tail, p_tail) + Bi(trials_prefix, p_prefix)
  std::int64_t trials_tail = 0;    // (1 - eps) T'
  std::int64_t trials_prefix = 0;  // eps T'
  double p_tail = 0.0;             // 2^-|E_H|
  double p_prefix = 0.0;           // 2^(1-|E_H|)
};

ReductionInstance gen_reduction(const PatternGraph& h, std::int64_t n, std::int64_t t,
                                const Rat& eps, bool promise_yes, std::uint64_t seed);

// m distinct arity-uniform hyperedges on [0, n) with every vertex degree at
// most d, by rejection; throws Infeasible when the target is out of reach or
// sampling stalls.
Stream gen_random_bounded(std::size_t n, std::size_t m, std::size_t d, std::size_t arity,
                          std::uint64_t seed);

}  // namespace subcount
