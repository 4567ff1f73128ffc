#include "kasami/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kasami {

bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

TowerParams make_params(int p, int m, int k, int t) {
  require(p >= 3 && p % 2 == 1 && is_prime_u64(p), Errc::NotOddPrime, "p must be an odd prime");
  require(m >= 1, Errc::InvalidArgument, "m must be positive");
  require(k != m, Errc::KEqualsM, "k must differ from m");
  require(k >= 0 && k <= 2 * m - 1, Errc::KOutOfRange, "k must lie in [0, 2m-1]");
  TowerParams pr;
  pr.p = p;
  pr.m = m;
  pr.k = k;
  pr.t = t;
  pr.n = 2 * m;
  pr.d = k == 0 ? m : std::gcd(m, k);
  pr.dprime = k == 0 ? pr.d : std::gcd(m + k, 2 * k);
  require(t >= 1 && pr.d % t == 0, Errc::TNotDividingD, "t must divide gcd(m, k)");
  pr.s = pr.n / pr.d;
  pr.n0 = pr.n / t;
  pr.q = FieldCtx::pow_u64(p, pr.n);
  pr.q0 = FieldCtx::pow_u64(p, pr.d);
  pr.q0star = (pr.q0 - 1) / 2 % 2 == 0 ? static_cast<std::int64_t>(pr.q0)
                                       : -static_cast<std::int64_t>(pr.q0);
  pr.pstar = (p - 1) / 2 % 2 == 0 ? p : -p;
  return pr;
}

Elt FieldCtx::add_digits(Elt a, Elt b) const {
  Elt r = 0, pw = 1;
  for (int i = 0; i < n_; ++i) {
    r += (a % p_ + b % p_) % p_ * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

Elt FieldCtx::mul_poly(Elt a, Elt b) const {
  // schoolbook product of coefficient vectors, reduced mod the modulus
  std::vector<int> pa = coeffs(a), pb = coeffs(b);
  std::vector<int> prod(2 * n_ - 1, 0);
  for (int i = 0; i < n_; ++i)
    if (pa[i])
      for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
  for (int i = 2 * n_ - 2; i >= n_; --i) {
    int c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (int j = 0; j < n_; ++j)
      prod[i - n_ + j] = ((prod[i - n_ + j] - c * modulus_[j]) % p_ + p_) % p_;
  }
  Elt r = 0;
  for (int i = n_ - 1; i >= 0; --i) r = r * p_ + prod[i];
  return r;
}

std::vector<int> FieldCtx::coeffs(Elt a) const {
  std::vector<int> c(n_);
  for (int i = 0; i < n_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elt FieldCtx::from_coeffs(const std::vector<int>& c) const {
  require(static_cast<int>(c.size()) <= n_, Errc::LengthMismatch, "too many coefficients");
  Elt r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    require(*it >= 0 && *it < p_, Errc::InvalidArgument, "coefficient out of [0, p-1]");
    r = r * p_ + *it;
  }
  return r;
}

namespace {

// monic f of degree deg (little-endian, leading 1 implicit in `code`):
// divisible by some monic divisor of degree 1..deg/2?
bool is_irreducible(const std::vector<int>& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int dd = 1; dd <= deg / 2; ++dd) {
    std::uint64_t count = FieldCtx::pow_u64(p, dd);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<int> div(dd + 1);
      std::uint64_t c = code;
      for (int i = 0; i < dd; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      div[dd] = 1;
      // remainder of f by div
      std::vector<int> rem = f;
      for (int i = deg; i >= dd; --i) {
        int lead = rem[i];
        if (!lead) continue;
        for (int j = 0; j <= dd; ++j)
          rem[i - dd + j] = ((rem[i - dd + j] - lead * div[j]) % p + p) % p;
      }
      if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      fs.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) fs.push_back(x);
  return fs;
}

}  // namespace

void FieldCtx::build(const TowerParams& params, const FieldLimits& limits) {
  p_ = params.p;
  n_ = params.n;
  q_ = params.q;
  d_ = params.d;
  basis_dim_ = params.s;
  require(q_ <= limits.max_q, Errc::DegreeOverflow, "q exceeds the table construction limit");
  ord_ = static_cast<std::uint32_t>(q_ - 1);

  // modulus: smallest base-p code whose monic polynomial is irreducible
  for (std::uint64_t code = 0;; ++code) {
    require(code < q_, Errc::InvalidArgument, "no irreducible modulus found");
    std::vector<int> f(n_ + 1);
    std::uint64_t c = code;
    for (int i = 0; i < n_; ++i) {
      f[i] = static_cast<int>(c % p_);
      c /= p_;
    }
    f[n_] = 1;
    if (is_irreducible(f, p_)) {
      modulus_ = f;
      break;
    }
  }

  // primitive element: smallest code of full multiplicative order
  auto factors = prime_factors(q_ - 1);
  auto pow_slow = [&](Elt a, std::uint64_t e) {
    Elt r = 1;
    while (e) {
      if (e & 1) r = mul_poly(r, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return r;
  };
  for (Elt a = 1;; ++a) {
    require(a < q_, Errc::InvalidArgument, "no primitive element found");
    if (pow_slow(a, q_ - 1) != 1) continue;
    bool full = true;
    for (auto r : factors)
      if (pow_slow(a, (q_ - 1) / r) == 1) {
        full = false;
        break;
      }
    if (full) {
      pi_ = a;
      break;
    }
  }

  // exp/log
  exp_.assign(2 * ord_, 0);
  log_.assign(q_, 0);
  Elt acc = 1;
  for (std::uint32_t l = 0; l < ord_; ++l) {
    exp_[l] = acc;
    exp_[l + ord_] = acc;
    log_[acc] = l;
    acc = mul_poly(acc, pi_);
  }

  // negation and Zech logarithms
  neg_.assign(q_, 0);
  for (Elt a = 0; a < q_; ++a) {
    Elt r = 0, pw = 1, x = a;
    for (int i = 0; i < n_; ++i) {
      r += (p_ - x % p_) % p_ * pw;
      x /= p_;
      pw *= p_;
    }
    neg_[a] = r;
  }
  zech_.assign(ord_, -1);
  for (std::uint32_t l = 0; l < ord_; ++l) {
    Elt sum = add_digits(1, exp_[l]);
    zech_[l] = sum == 0 ? -1 : static_cast<std::int32_t>(log_[sum]);
  }

  frob_step_.assign(n_, 0);
  for (int j = 0; j < n_; ++j) {
    std::uint64_t e = 1;
    for (int i = 0; i < j; ++i) e = e * p_ % ord_;
    frob_step_[j] = e;
  }

  // trace tables for every divisor of n
  for (int deg = 1; deg <= n_; ++deg) {
    if (n_ % deg) continue;
    std::vector<Elt>& tab = trace_tables_[deg];
    tab.assign(q_, 0);
    for (Elt a = 0; a < q_; ++a) {
      Elt acc2 = 0;
      Elt x = a;
      for (int i = 0; i < n_ / deg; ++i) {
        acc2 = add(acc2, x);
        x = frob(x, deg);
      }
      tab[a] = acc2;
    }
  }
  tr1_code_.assign(q_, 0);
  for (Elt a = 0; a < q_; ++a) tr1_code_[a] = static_cast<std::uint8_t>(trace_tables_[1][a]);
  tr1_exp_.assign(ord_, 0);
  half_tr1_exp_.assign(ord_, 0);
  int half = inv2();
  for (std::uint32_t l = 0; l < ord_; ++l) {
    tr1_exp_[l] = tr1_code_[exp_[l]];
    half_tr1_exp_[l] = static_cast<std::uint8_t>(half * tr1_exp_[l] % p_);
  }

  // basis v_i = pi^(i-1) and its trace-dual over F_{q0}
  basis_.clear();
  for (int i = 0; i < basis_dim_; ++i) basis_.push_back(exp_[i % ord_]);
  // Gram matrix G_ij = Tr^n_d(v_i v_j); dual rows solve G W = I over F_{q0}
  int s = basis_dim_;
  const std::vector<Elt>& trd = trace_tables_[d_];
  std::vector<Elt> aug(s * 2 * s, 0);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) aug[i * 2 * s + j] = trd[mul(basis_[i], basis_[j])];
    aug[i * 2 * s + s + i] = 1;
  }
  for (int col = 0; col < s; ++col) {
    int piv = -1;
    for (int r = col; r < s; ++r)
      if (aug[r * 2 * s + col]) {
        piv = r;
        break;
      }
    require(piv >= 0, Errc::InvalidArgument, "basis Gram matrix is singular");
    for (int j = 0; j < 2 * s; ++j) std::swap(aug[col * 2 * s + j], aug[piv * 2 * s + j]);
    Elt ip = inv(aug[col * 2 * s + col]);
    for (int j = 0; j < 2 * s; ++j) aug[col * 2 * s + j] = mul(aug[col * 2 * s + j], ip);
    for (int r = 0; r < s; ++r) {
      if (r == col) continue;
      Elt f = aug[r * 2 * s + col];
      if (!f) continue;
      for (int j = 0; j < 2 * s; ++j)
        aug[r * 2 * s + j] = sub(aug[r * 2 * s + j], mul(f, aug[col * 2 * s + j]));
    }
  }
  dual_.assign(s, 0);
  for (int i = 0; i < s; ++i) {
    Elt w = 0;
    for (int j = 0; j < s; ++j) w = add(w, mul(aug[j * 2 * s + s + i], basis_[j]));
    dual_[i] = w;
  }
}

const std::vector<Elt>& FieldCtx::trace_table(int deg) const {
  auto it = trace_tables_.find(deg);
  require(it != trace_tables_.end(), Errc::NonDividingDegrees, "degree does not divide n");
  return it->second;
}

Elt FieldCtx::trace(Elt x, int from_deg, int to_deg) const {
  require(to_deg >= 1 && from_deg % to_deg == 0 && n_ % from_deg == 0, Errc::NonDividingDegrees,
          "need to | from | n");
  require(in_subfield(x, from_deg), Errc::NotInSubfield, "element not in source subfield");
  Elt acc = 0;
  for (int i = 0; i < from_deg / to_deg; ++i) acc = add(acc, frob(x, to_deg * i));
  return acc;
}

std::vector<Elt> FieldCtx::subfield(int deg) const {
  std::uint64_t cnt = subfield_order(deg);
  std::vector<Elt> out;
  out.reserve(cnt);
  for (std::uint64_t i = 0; i < cnt; ++i) out.push_back(subfield_elem(deg, i));
  return out;
}

std::vector<Elt> FieldCtx::coords(Elt x) const {
  std::vector<Elt> c(basis_dim_);
  const std::vector<Elt>& trd = trace_table(d_);
  for (int i = 0; i < basis_dim_; ++i) c[i] = trd[mul(dual_[i], x)];
  return c;
}

Tower build_tower(int p, int m, int k, int t, FieldLimits limits) {
  Tower tw;
  tw.params = make_params(p, m, k, t);
  tw.field.build(tw.params, limits);
  return tw;
}

std::string field_to_json(const Tower& tw) {
  std::ostringstream os;
  os << "{\"p\":" << tw.params.p << ",\"n\":" << tw.params.n << ",\"modulus\":[";
  for (std::size_t i = 0; i < tw.field.modulus().size(); ++i)
    os << (i ? "," : "") << tw.field.modulus()[i];
  os << "],\"primitive\":[";
  auto c = tw.field.coeffs(tw.field.primitive());
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]}";
  return os.str();
}

}  // namespace kasami
