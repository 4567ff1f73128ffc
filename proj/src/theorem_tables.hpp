#pragma once

// Closed-form table generators for the value/weight distributions.  Internal
// to the library; the public entry points are the theorem modes of
// t_distribution / s_distribution / weight_distribution /
// correlation_distribution.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "kasami/exp_sums.hpp"

namespace kasami::tables {

using Rat = boost::multiprecision::cpp_rational;

// p^e as an exact rational; e may be negative (zero factors elsewhere in a
// row must be able to cancel it before integrality is checked)
Rat ppow(int p, int e);

// the row multiplicity must come out a nonnegative integer
BigInt to_count(const Rat& r);

int legendre(int a, int p);

ValueDistribution theorem_t(const TowerParams& pr);
ValueDistribution theorem_s(const TowerParams& pr);
std::map<std::uint64_t, BigInt> theorem_c1(const TowerParams& pr);
std::map<std::uint64_t, BigInt> theorem_c2(const TowerParams& pr);

}  // namespace kasami::tables
