#include "kasami/cyclotomic.hpp"

#include <sstream>

namespace kasami {

CyclotomicInteger CyclotomicInteger::canonicalize(int p, std::vector<BigInt> counts) {
  require(static_cast<int>(counts.size()) == p, Errc::LengthMismatch,
          "need exactly p coordinates");
  CyclotomicInteger v;
  v.p_ = p;
  BigInt last = counts[p - 1];
  if (last != 0)
    for (auto& c : counts) c -= last;
  v.c_ = std::move(counts);
  return v;
}

CyclotomicInteger CyclotomicInteger::from_integer(int p, const BigInt& x) {
  std::vector<BigInt> c(p);
  c[0] = x;
  return canonicalize(p, std::move(c));
}

CyclotomicInteger CyclotomicInteger::zeta_power(int p, int j) {
  std::vector<BigInt> c(p);
  c[((j % p) + p) % p] = 1;
  return canonicalize(p, std::move(c));
}

bool CyclotomicInteger::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CyclotomicInteger::is_rational() const {
  for (int i = 1; i < p_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

BigInt CyclotomicInteger::rational_value() const {
  require(is_rational(), Errc::UnrecognizedValue, "value is not a rational integer");
  return c_[0];
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  std::vector<BigInt> c(c_);
  for (int i = 0; i < p_; ++i) c[i] += o.c_[i];
  return canonicalize(p_, std::move(c));
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
  std::vector<BigInt> c(c_);
  for (int i = 0; i < p_; ++i) c[i] -= o.c_[i];
  return canonicalize(p_, std::move(c));
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  std::vector<BigInt> c(c_);
  for (auto& x : c) x = -x;
  return canonicalize(p_, std::move(c));
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  std::vector<BigInt> c(p_);
  for (int i = 0; i < p_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < p_; ++j) {
      if (o.c_[j] == 0) continue;
      c[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  return canonicalize(p_, std::move(c));
}

CyclotomicInteger CyclotomicInteger::scaled(const BigInt& k) const {
  std::vector<BigInt> c(c_);
  for (auto& x : c) x *= k;
  return canonicalize(p_, std::move(c));
}

CyclotomicInteger CyclotomicInteger::mul_zeta(int j) const {
  std::vector<BigInt> c(p_);
  j = ((j % p_) + p_) % p_;
  for (int i = 0; i < p_; ++i) c[(i + j) % p_] = c_[i];
  return canonicalize(p_, std::move(c));
}

CyclotomicInteger CyclotomicInteger::galois(int u) const {
  u = ((u % p_) + p_) % p_;
  require(u != 0, Errc::InvalidArgument, "Galois action needs u in F_p^*");
  std::vector<BigInt> c(p_);
  for (int i = 0; i < p_; ++i) c[i * u % p_] += c_[i];
  return canonicalize(p_, std::move(c));
}

CyclotomicInteger CyclotomicInteger::pow(unsigned e) const {
  CyclotomicInteger r = from_integer(p_, 1);
  CyclotomicInteger b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool CyclotomicInteger::operator<(const CyclotomicInteger& o) const {
  if (p_ != o.p_) return p_ < o.p_;
  for (int i = 0; i < p_; ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string CyclotomicInteger::serialize() const {
  std::ostringstream os;
  for (int i = 0; i + 1 < p_; ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

CyclotomicInteger gauss_sum(int p) {
  require(p >= 3 && p % 2 == 1 && is_prime_u64(p), Errc::NotOddPrime, "p must be an odd prime");
  std::vector<BigInt> c(p);
  for (int x = 1; x < p; ++x) {
    // legendre(x) via Euler's criterion
    int e = (p - 1) / 2, b = x, r = 1;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    c[x] += r == 1 ? 1 : -1;
  }
  return CyclotomicInteger::canonicalize(p, std::move(c));
}

CyclotomicInteger sqrt_q0star(int p, int d) {
  CyclotomicInteger g = gauss_sum(p).pow(static_cast<unsigned>(d));
  return d % 2 == 0 ? -g : g;
}

std::vector<int> admissible_defects(const TowerParams& params) {
  std::vector<int> out;
  for (int i : params.dprime_is_2d() ? std::vector<int>{0, 2, 4} : std::vector<int>{0, 1, 2})
    if (i <= params.s) out.push_back(i);
  return out;
}

ClosedFormLabel make_label(const TowerParams& params, int i, int eps, int j) {
  ClosedFormLabel l;
  l.i = i;
  l.eps = eps;
  l.j = ((j % params.p) + params.p) % params.p;
  bool gaussy = (i * params.d) % 2 == 1;
  if (gaussy)
    l.kind = ClosedFormLabel::Kind::GaussPm;
  else if (l.j != 0)
    l.kind = ClosedFormLabel::Kind::ZetaTimesPm;
  else
    l.kind = eps > 0 ? ClosedFormLabel::Kind::PlusPm : ClosedFormLabel::Kind::MinusPm;
  std::ostringstream os;
  if (eps < 0) os << '-';
  if (l.j) os << "zeta^" << l.j << '*';
  int e = params.n + i * params.d;
  if (gaussy)
    os << "sqrt(p*)*p^" << (e - 1) / 2;
  else
    os << "p^" << e / 2;
  l.text = os.str();
  return l;
}

CyclotomicInteger realize_label(const ClosedFormLabel& label, const TowerParams& params) {
  int p = params.p;
  switch (label.kind) {
    case ClosedFormLabel::Kind::Zero:
      return CyclotomicInteger::zero(p);
    case ClosedFormLabel::Kind::FullSum:
      return CyclotomicInteger::from_integer(p, BigInt(params.q));
    default:
      break;
  }
  int e = params.n + label.i * params.d;
  CyclotomicInteger v;
  if (e % 2 == 0) {
    BigInt mag = 1;
    for (int i = 0; i < e / 2; ++i) mag *= p;
    v = CyclotomicInteger::from_integer(p, mag);
  } else {
    BigInt mag = 1;
    for (int i = 0; i < (e - 1) / 2; ++i) mag *= p;
    v = gauss_sum(p).scaled(mag);
  }
  if (label.eps < 0) v = -v;
  return v.mul_zeta(label.j);
}

ClosedFormLabel classify_value(const CyclotomicInteger& v, const TowerParams& params) {
  require(v.prime() == params.p, Errc::LengthMismatch, "prime mismatch");
  if (v.is_zero()) {
    ClosedFormLabel l;
    l.kind = ClosedFormLabel::Kind::Zero;
    l.text = "0";
    return l;
  }
  if (v.is_rational() && v.rational_value() == params.q) {
    ClosedFormLabel l;
    l.kind = ClosedFormLabel::Kind::FullSum;
    l.text = "p^" + std::to_string(params.n);
    return l;
  }
  for (int i : admissible_defects(params))
    for (int eps : {1, -1})
      for (int j = 0; j < params.p; ++j) {
        ClosedFormLabel l = make_label(params, i, eps, j);
        if (realize_label(l, params) == v) return l;
      }
  fail(Errc::UnrecognizedValue, "value outside the theorem's closed-form set: " + v.serialize());
}

}  // namespace kasami
