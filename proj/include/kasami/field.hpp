#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kasami/errors.hpp"

namespace kasami {

// Field elements are base-p codes: code = sum c_i * p^i where (c_0..c_{n-1})
// are the coordinates in the power basis of the modulus root, c_0 the
// constant term.
using Elt = std::uint32_t;

struct TowerParams {
  int p = 3;
  int m = 1;
  int k = 0;
  int t = 1;
  // derived
  int n = 2;        // n = 2m
  int d = 1;        // gcd(m, k), gcd(m, 0) = m
  int dprime = 1;   // gcd(m+k, 2k), gcd(x, 0) = x
  int s = 2;        // n / d, always even
  int n0 = 2;       // n / t
  std::uint64_t q = 9;   // p^n
  std::uint64_t q0 = 3;  // p^d
  std::int64_t q0star = -3;  // (-1)^((q0-1)/2) * q0
  std::int64_t pstar = -3;   // (-1)^((p-1)/2) * p

  bool dprime_is_2d() const { return dprime == 2 * d; }
};

// Validates (p, m, k, t) and fills in every derived quantity.
TowerParams make_params(int p, int m, int k, int t);

struct FieldLimits {
  std::uint64_t max_q = 1u << 20;  // table construction bound
};

// An explicit F_{p^n} with exp/log/Zech tables, per-divisor trace tables and
// the fixed F_{q0}-basis v_i = pi^(i-1).  Immutable after construction; all
// methods are const and safe for concurrent use.
class FieldCtx {
 public:
  int p() const { return p_; }
  int n() const { return n_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t order() const { return q_ - 1; }
  const std::vector<int>& modulus() const { return modulus_; }  // little-endian, monic deg n
  Elt primitive() const { return pi_; }

  // --- element arithmetic ---
  Elt add(Elt a, Elt b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t diff = lb >= la ? lb - la : lb + ord_ - la;
    std::int32_t z = zech_[diff];
    if (z < 0) return 0;  // b == -a
    return exp_[la + static_cast<std::uint32_t>(z)];
  }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg_[b]); }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elt inv(Elt a) const {
    require(a != 0, Errc::InvalidArgument, "inverse of zero");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : ord_ - l];
  }
  Elt pow(Elt a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(log_[a] * (e % ord_)) % ord_];
  }
  // x^(p^j), the j-th Frobenius power
  Elt frob(Elt a, int j) const {
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * frob_step_[((j % n_) + n_) % n_]) % ord_];
  }
  std::uint32_t log(Elt a) const {
    require(a != 0, Errc::InvalidArgument, "log of zero");
    return log_[a];
  }
  Elt exp(std::uint64_t l) const { return exp_[l % ord_]; }

  // --- conversions ---
  std::vector<int> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<int>& c) const;
  // the prime-field scalar c mod p; codes of prime-subfield elements coincide
  // with their integer values
  Elt scalar(int c) const { return static_cast<Elt>(((c % p_) + p_) % p_); }
  int as_prime_int(Elt a) const {
    require(a < static_cast<Elt>(p_), Errc::NotInSubfield, "element not in prime subfield");
    return static_cast<int>(a);
  }

  // --- subfields (degree deg over F_p, deg | n) ---
  bool in_subfield(Elt a, int deg) const {
    if (a == 0) return true;
    return log_[a] % subfield_step(deg) == 0;
  }
  std::uint64_t subfield_step(int deg) const {
    require(deg > 0 && n_ % deg == 0, Errc::NonDividingDegrees, "degree does not divide n");
    return ord_ / (pow_u64(p_, deg) - 1);
  }
  std::uint64_t subfield_order(int deg) const { return pow_u64(p_, deg); }
  // index 0 -> 0, index i>0 -> g^(i-1) for the subfield generator g = pi^step
  Elt subfield_elem(int deg, std::uint64_t index) const {
    if (index == 0) return 0;
    return exp_[((index - 1) * subfield_step(deg)) % ord_];
  }
  std::uint64_t subfield_index(int deg, Elt a) const {
    if (a == 0) return 0;
    std::uint64_t step = subfield_step(deg);
    require(log_[a] % step == 0, Errc::NotInSubfield, "element not in subfield");
    return log_[a] / step + 1;
  }
  std::vector<Elt> subfield(int deg) const;

  // --- traces and characters ---
  // Tr^{from}_{to}(x) = sum_i x^(p^(to*i)); requires to | from | n and x in
  // the degree-from subfield.
  Elt trace(Elt x, int from_deg, int to_deg) const;
  // 0 iff x = 0, +1 iff nonzero square in the degree-deg subfield, else -1
  int quadratic_character(Elt x, int deg) const {
    if (x == 0) return 0;
    require(in_subfield(x, deg), Errc::NotInSubfield, "element not in subfield");
    return (log_[x] / subfield_step(deg)) % 2 == 0 ? 1 : -1;
  }

  // --- precomputed tables for enumeration kernels ---
  // Tr^n_1(pi^j) as an integer in [0, p)
  const std::vector<std::uint8_t>& tr1_exp() const { return tr1_exp_; }
  // (2^{-1} mod p) * Tr^n_1(pi^j) mod p; equals Tr^m_1(pi^j) when pi^j lies
  // in F_{p^m}
  const std::vector<std::uint8_t>& half_tr1_exp() const { return half_tr1_exp_; }
  int tr1(Elt a) const { return tr1_code_[a]; }
  // per-code Tr^n_deg table for any divisor deg of n
  const std::vector<Elt>& trace_table(int deg) const;

  // --- tower basis ---
  const std::vector<Elt>& basis() const { return basis_; }       // v_i = pi^(i-1), i = 1..s
  const std::vector<Elt>& dual_basis() const { return dual_; }   // Tr^n_d(w_i v_j) = delta_ij
  std::vector<Elt> coords(Elt x) const;  // F_{q0}-coordinates of x w.r.t. basis()

  int inv2() const { return (p_ + 1) / 2; }

  static std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  }

 private:
  friend struct Tower;
  friend Tower build_tower(int, int, int, int, FieldLimits);
  FieldCtx() = default;
  void build(const TowerParams& params, const FieldLimits& limits);

  // slow bootstrap arithmetic (polynomial representation), used to build tables
  Elt add_digits(Elt a, Elt b) const;
  Elt mul_poly(Elt a, Elt b) const;

  int p_ = 0, n_ = 0;
  std::uint64_t q_ = 0;
  std::uint32_t ord_ = 0;  // q - 1
  int basis_dim_ = 0;      // s
  int d_ = 1;
  std::vector<int> modulus_;
  Elt pi_ = 0;
  std::vector<Elt> exp_;           // 2*(q-1), doubled to avoid one mod
  std::vector<std::uint32_t> log_; // log_[0] unused
  std::vector<std::int32_t> zech_; // zech_[l] = log(1 + pi^l), -1 when 1 + pi^l = 0
  std::vector<Elt> neg_;
  std::vector<std::uint64_t> frob_step_;  // p^j mod (q-1)
  std::vector<std::uint8_t> tr1_exp_, half_tr1_exp_;
  std::vector<std::uint8_t> tr1_code_;
  std::map<int, std::vector<Elt>> trace_tables_;  // divisor deg -> per-code Tr^n_deg
  std::vector<Elt> basis_, dual_;
};

struct Tower {
  TowerParams params;
  FieldCtx field;

  // enumeration order used by every distribution: index 0 is the zero
  // element, index i > 0 is pi_sub^(i-1)
  std::uint64_t alpha_count() const { return field.subfield_order(params.m); }
  std::uint64_t pair_count() const { return alpha_count() * params.q; }
  std::uint64_t triple_count() const { return pair_count() * params.q; }
  Elt alpha_at(std::uint64_t i) const { return field.subfield_elem(params.m, i); }
  Elt beta_at(std::uint64_t i) const { return i == 0 ? 0 : field.exp(i - 1); }
  std::uint64_t beta_index(Elt b) const { return b == 0 ? 0 : field.log(b) + 1; }
  std::uint64_t alpha_index(Elt a) const { return field.subfield_index(params.m, a); }
  std::uint64_t pair_index(Elt a, Elt b) const { return alpha_index(a) * params.q + beta_index(b); }
  std::uint64_t triple_index(Elt a, Elt b, Elt g) const {
    return pair_index(a, b) * params.q + beta_index(g);
  }
};

// Constructs the validated tower F_p < F_{p^t} < F_{p^d} < F_{p^m} < F_{p^n}.
// The modulus is the lexicographically smallest monic irreducible of degree n
// (smallest base-p code, constant digit least significant) and pi the
// smallest-code element of full order, so every run is bit-reproducible.
Tower build_tower(int p, int m, int k, int t, FieldLimits limits = {});

// {p, n, modulus, primitive} as a JSON object (cache/debug format)
std::string field_to_json(const Tower& tw);

bool is_prime_u64(std::uint64_t x);

}  // namespace kasami
