#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kasami/cyclotomic.hpp"
#include "kasami/field.hpp"

namespace kasami {

struct Budget {
  std::uint64_t max_brute_triples = 1'000'000;       // full (alpha,beta,gamma) scans
  std::uint64_t max_brute_cost = 2'000'000'000ULL;   // index-space x field-size guard
};

// Multiset of canonical character-sum values with exact multiplicities.
struct ValueDistribution {
  TowerParams params;
  BigInt domain_size = 0;
  std::map<CyclotomicInteger, BigInt> entries;
  std::map<CyclotomicInteger, ClosedFormLabel> labels;

  void add(const CyclotomicInteger& v, const BigInt& mult = 1);
  BigInt total_mass() const;
  void check_mass() const;  // throws MassMismatch
  bool same_entries(const ValueDistribution& o) const { return entries == o.entries; }
  void classify_all();  // fill labels for every key
};

enum class DistMode { Brute, Theorem, Hybrid };

CyclotomicInteger eval_t(const Tower& tw, Elt alpha, Elt beta);
CyclotomicInteger eval_s(const Tower& tw, Elt alpha, Elt beta, Elt gamma);

// Per-pair T(alpha,beta) as small value ids over the pair index space.
struct TTable {
  std::vector<std::uint8_t> id;
  std::vector<CyclotomicInteger> values;
  std::vector<ClosedFormLabel> labels;  // per value id; (0,0)'s p^n labels as FullSum
  const CyclotomicInteger& at(const Tower& tw, Elt a, Elt b) const {
    return values[id[tw.pair_index(a, b)]];
  }
};
TTable build_t_table(const Tower& tw, int workers = 1);

// Per-triple S(alpha,beta,gamma) value ids; only feasible at full-brute scale.
struct STable {
  std::vector<std::uint8_t> id;
  std::vector<CyclotomicInteger> values;
  const CyclotomicInteger& at(const Tower& tw, Elt a, Elt b, Elt g) const {
    return values[id[tw.triple_index(a, b, g)]];
  }
};
STable build_s_table(const Tower& tw, int workers = 1, const Budget& budget = {});

ValueDistribution t_distribution(const Tower& tw, DistMode mode, int workers = 1,
                                 const Budget& budget = {});
// Hybrid expands gamma-fibers per (alpha,beta) with the closed counting
// formulas instead of looping gamma; exact and feasible far past the brute
// budget.
ValueDistribution s_distribution(const Tower& tw, DistMode mode, int workers = 1,
                                 const Budget& budget = {});

enum class MomentMode { Brute, Closed };

// sum over all (alpha,beta) of T^order; closed forms exist for order 1, 2 and
// (d' = d only) order 3
CyclotomicInteger moments_t(const Tower& tw, int order, MomentMode mode, int workers = 1);

// Number of gamma in F_q with phi_{alpha,beta}(x) + gamma = 0 solvable and
// quadratic-form value Tr^m_t(alpha x0^(p^m+1)) + Tr^n_t(beta x0^(p^k+1)) = a.
std::uint64_t count_gamma_trace(const Tower& tw, Elt alpha, Elt beta, Elt a_val, bool closed,
                                const TTable* ttab = nullptr);

std::string distribution_to_json(const ValueDistribution& dist,
                                 std::optional<bool> modes_agree = std::nullopt);
std::string distribution_to_csv(const ValueDistribution& dist);
std::string distribution_to_table(const ValueDistribution& dist);

}  // namespace kasami
