#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "kasami/errors.hpp"
#include "kasami/field.hpp"

namespace kasami {

using BigInt = boost::multiprecision::cpp_int;

// Exact element of Z[zeta_p], stored canonically: coordinates c_0..c_{p-1}
// with c_{p-1} = 0, using 1 + zeta + ... + zeta^{p-1} = 0.  Equal values have
// equal coordinate vectors.
class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;
  static CyclotomicInteger canonicalize(int p, std::vector<BigInt> counts);
  static CyclotomicInteger zero(int p) { return canonicalize(p, std::vector<BigInt>(p)); }
  static CyclotomicInteger from_integer(int p, const BigInt& v);
  static CyclotomicInteger zeta_power(int p, int j);

  int prime() const { return p_; }
  const std::vector<BigInt>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // lies in Z, i.e. coordinates (r, 0, ..., 0)
  BigInt rational_value() const;

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-() const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger& operator+=(const CyclotomicInteger& o) { return *this = *this + o; }
  CyclotomicInteger scaled(const BigInt& k) const;
  CyclotomicInteger mul_zeta(int j) const;          // multiply by zeta^j
  CyclotomicInteger galois(int u) const;            // zeta -> zeta^u, u in [1, p)
  CyclotomicInteger conj() const { return galois(p_ - 1); }
  CyclotomicInteger pow(unsigned e) const;

  bool operator==(const CyclotomicInteger& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const CyclotomicInteger& o) const { return !(*this == o); }
  bool operator<(const CyclotomicInteger& o) const;  // lexicographic on coordinates

  // "c0,c1,...,c(p-2)" (last coordinate omitted, always 0)
  std::string serialize() const;

 private:
  int p_ = 0;
  std::vector<BigInt> c_;
};

// g = sum_{x in F_p} legendre(x) zeta^x; satisfies g*g = pstar
CyclotomicInteger gauss_sum(int p);

// sqrt(q0star) realized inside Z[zeta_p]: the degree-d lift (-1)^(d-1) g^d of
// the prime-field quadratic Gauss sum
CyclotomicInteger sqrt_q0star(int p, int d);

// Closed-form value labels for the character sums: 0, p^n, and
// eps * zeta^j * p^((n+id)/2)            (id even)
// eps * zeta^j * sqrt(pstar) * p^((n+id-1)/2)   (id odd)
// where i is the rank defect s - r.
struct ClosedFormLabel {
  enum class Kind { Zero, FullSum, PlusPm, MinusPm, ZetaTimesPm, GaussPm };
  Kind kind = Kind::Zero;
  int i = 0;    // rank defect
  int eps = 1;  // sign
  int j = 0;    // power of zeta
  std::string text;
};

// rank defects admissible for the parameter case: {0,1,2} when d'=d,
// {0,2,4} when d'=2d (rows that cannot occur are excluded up front)
std::vector<int> admissible_defects(const TowerParams& params);

CyclotomicInteger realize_label(const ClosedFormLabel& label, const TowerParams& params);
ClosedFormLabel make_label(const TowerParams& params, int i, int eps, int j);

// Finds the unique admissible label realizing v (Zero and FullSum take
// precedence); throws UnrecognizedValue otherwise.
ClosedFormLabel classify_value(const CyclotomicInteger& v, const TowerParams& params);

}  // namespace kasami
