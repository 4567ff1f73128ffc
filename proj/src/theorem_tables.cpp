#include "theorem_tables.hpp"

namespace kasami::tables {

Rat ppow(int p, int e) {
  BigInt x = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) x *= p;
  return e < 0 ? Rat(1, x) : Rat(x);
}

BigInt to_count(const Rat& r) {
  require(denominator(r) == 1 && r >= 0, Errc::MassMismatch,
          "table row multiplicity is not a nonnegative integer");
  return numerator(r);
}

int legendre(int a, int p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  int e = (p - 1) / 2, b = a, r = 1;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

namespace {

struct RowSink {
  ValueDistribution dist;
  const TowerParams& pr;

  explicit RowSink(const TowerParams& params) : pr(params) { dist.params = params; }

  void row(int i, int eps, int j, const Rat& mult) {
    BigInt c = to_count(mult);
    if (c == 0) return;
    ClosedFormLabel l = make_label(pr, i, eps, j);
    CyclotomicInteger v = realize_label(l, pr);
    dist.add(v, c);
    dist.labels.emplace(v, l);
  }
  void zero_row(const Rat& mult) {
    BigInt c = to_count(mult);
    if (c == 0) return;
    ClosedFormLabel l;
    l.kind = ClosedFormLabel::Kind::Zero;
    l.text = "0";
    CyclotomicInteger v = CyclotomicInteger::zero(pr.p);
    dist.add(v, c);
    dist.labels.emplace(v, l);
  }
  void full_row() {
    ClosedFormLabel l;
    l.kind = ClosedFormLabel::Kind::FullSum;
    l.text = "p^" + std::to_string(pr.n);
    CyclotomicInteger v = CyclotomicInteger::from_integer(pr.p, BigInt(pr.q));
    dist.add(v, 1);
    dist.labels.emplace(v, l);
  }
};

}  // namespace

ValueDistribution theorem_t(const TowerParams& pr) {
  int p = pr.p, m = pr.m, d = pr.d, n = pr.n;
  auto P = [&](int e) { return ppow(p, e); };
  RowSink sink(pr);
  sink.dist.domain_size = to_count(P(3 * m));
  if (!pr.dprime_is_2d()) {
    sink.row(0, +1, 0, P(d) * (P(m) - 1) * (P(m) + 1) * (P(m) + 1) / (2 * (P(d) + 1)));
    sink.row(0, -1, 0, P(d) * (P(m) - 1) * (P(n) - 2 * P(n - d) + 1) / (2 * (P(d) - 1)));
    sink.row(1, +1, 0, P(m - d) * (P(n) - 1) / 2);
    sink.row(1, -1, 0, P(m - d) * (P(n) - 1) / 2);
    sink.row(2, -1, 0, (P(m - d) - 1) * (P(n) - 1) / (P(2 * d) - 1));
  } else {
    sink.row(0, -1, 0, P(3 * d) * (P(m) - 1) *
                           (P(n) - P(n - 2 * d) - P(n - 3 * d) + P(m) - P(m - d) + 1) /
                           ((P(d) + 1) * (P(2 * d) - 1)));
    sink.row(2, +1, 0,
             P(d) * (P(n) - 1) * (P(m) + P(m - d) + P(m - 2 * d) + 1) / ((P(d) + 1) * (P(d) + 1)));
    sink.row(4, -1, 0, (P(m - d) - 1) * (P(n) - 1) / ((P(d) + 1) * (P(2 * d) - 1)));
  }
  sink.full_row();
  sink.dist.check_mass();
  return std::move(sink.dist);
}

ValueDistribution theorem_s(const TowerParams& pr) {
  int p = pr.p, m = pr.m, d = pr.d, n = pr.n;
  auto P = [&](int e) { return ppow(p, e); };
  RowSink sink(pr);
  sink.dist.domain_size = to_count(P(5 * m));
  if (!pr.dprime_is_2d()) {
    // i = 0 rows are shared by cases (i) and (ii)
    sink.row(0, +1, 0, P(m + d - 1) * (P(m) + 1) * (P(m) + p - 1) * (P(n) - 1) / (2 * (P(d) + 1)));
    sink.row(0, -1, 0, P(m + d - 1) * (P(m) - 1) * (P(m) - p + 1) * (P(n) - 2 * P(n - d) + 1) /
                           (2 * (P(d) - 1)));
    for (int j = 1; j < p; ++j) {
      sink.row(0, +1, j, P(m + d - 1) * (P(n) - 1) * (P(n) - 1) / (2 * (P(d) + 1)));
      sink.row(0, -1, j, P(m + d - 1) * (P(n) - 1) * (P(n) - 2 * P(n - d) + 1) / (2 * (P(d) - 1)));
    }
    if (d % 2 == 1) {
      for (int eps : {+1, -1}) {
        sink.row(1, eps, 0, P(3 * m - 2 * d - 1) * (P(n) - 1) / 2);
        for (int j = 1; j < p; ++j)
          sink.row(1, eps, j,
                   P(n - (3 * d + 1) / 2) * (P(m - (d + 1) / 2) + eps * legendre(-j, p)) *
                       (P(n) - 1) / 2);
      }
    } else {
      for (int eps : {+1, -1}) {
        sink.row(1, eps, 0,
                 P(n - 3 * d / 2 - 1) * (P(m - d / 2) + eps * (p - 1)) * (P(n) - 1) / 2);
        for (int j = 1; j < p; ++j)
          sink.row(1, eps, j, P(n - 3 * d / 2 - 1) * (P(m - d / 2) - eps) * (P(n) - 1) / 2);
      }
    }
    sink.row(2, -1, 0, P(m - d - 1) * (P(m - d) - 1) * (P(n) - 1) * (P(m - d) - p + 1) /
                           (P(2 * d) - 1));
    for (int j = 1; j < p; ++j) {
      if (d % 2 == 1)
        sink.row(2, -1, j, P(m - d - 1) * (P(n - 2 * d) - 1) * (P(n) - 1) / (P(2 * d) - 1));
      else
        sink.row(2, -1, j, P(m - d - 1) * (P(m - d) - 1) * (P(n) - 1) * (P(m - d) + 1) /
                               (P(2 * d) - 1));
    }
    sink.zero_row((P(n) - 1) *
                  (P(3 * m - d) - P(3 * m - 2 * d) + P(3 * m - 3 * d) - P(n - 2 * d) + 1));
  } else {
    Rat X = P(n) - P(n - 2 * d) - P(n - 3 * d) + P(m) - P(m - d) + 1;
    Rat Y = P(m) + P(m - d) + P(m - 2 * d) + 1;
    Rat Z = P(3 * m - d) - P(3 * m - 2 * d) + P(3 * m - 3 * d) - P(3 * m - 4 * d) +
            P(3 * m - 5 * d) + P(n - d) - 2 * P(n - 2 * d) + P(n - 3 * d) - P(n - 4 * d) + 1;
    Rat dd = (P(d) + 1) * (P(2 * d) - 1);
    sink.row(0, -1, 0, P(m + 3 * d - 1) * (P(m) - 1) * (P(m) - p + 1) * X / dd);
    for (int j = 1; j < p; ++j) sink.row(0, -1, j, P(m + 3 * d - 1) * (P(n) - 1) * X / dd);
    sink.row(2, +1, 0, P(m - 1) * (P(n) - 1) * (P(m - d) + p - 1) * Y / ((P(d) + 1) * (P(d) + 1)));
    for (int j = 1; j < p; ++j)
      sink.row(2, +1, j, P(m - 1) * (P(n) - 1) * (P(m - d) - 1) * Y / ((P(d) + 1) * (P(d) + 1)));
    sink.row(4, -1, 0, P(m - 2 * d - 1) * (P(m - d) - 1) * (P(m - 2 * d) - p + 1) * (P(n) - 1) / dd);
    for (int j = 1; j < p; ++j)
      sink.row(4, -1, j, P(m - 2 * d - 1) * (P(m - d) - 1) * (P(m - 2 * d) + 1) * (P(n) - 1) / dd);
    sink.zero_row((P(n) - 1) * Z);
  }
  sink.full_row();
  sink.dist.check_mass();
  return std::move(sink.dist);
}

namespace {

struct WeightSink {
  std::map<std::uint64_t, BigInt> dist;
  void row(std::uint64_t w, const Rat& mult) {
    BigInt c = to_count(mult);
    if (c != 0) dist[w] += c;  // distinct printed rows may land on one weight
  }
};

}  // namespace

std::map<std::uint64_t, BigInt> theorem_c1(const TowerParams& pr) {
  int p = pr.p, m = pr.m, d = pr.d, n = pr.n, t = pr.t;
  auto P = [&](int e) { return ppow(p, e); };
  auto W = [&](int e) { return FieldCtx::pow_u64(p, e); };
  std::uint64_t pt = W(t), pnt = W(n - t);
  WeightSink sink;
  if (!pr.dprime_is_2d()) {
    Rat mult_plus = P(d) * (P(m) - 1) * (P(m) + 1) * (P(m) + 1) / (2 * (P(d) + 1));
    Rat mult_minus = P(d) * (P(m) - 1) * (P(n) - 2 * P(n - d) + 1) / (2 * (P(d) - 1));
    Rat mult_i2 = (P(m - d) - 1) * (P(n) - 1) / (P(2 * d) - 1);
    sink.row((pt - 1) * (pnt - W(m - t)), mult_plus);
    sink.row((pt - 1) * (pnt + W(m - t)), mult_minus);
    sink.row((pt - 1) * (pnt + W(m + d - t)), mult_i2);
    if ((d / t) % 2 == 1) {
      sink.row((pt - 1) * pnt, P(m - d) * (P(n) - 1));
    } else {
      sink.row((pt - 1) * (pnt - W(m + d / 2 - t)), P(m - d) * (P(n) - 1) / 2);
      sink.row((pt - 1) * (pnt + W(m + d / 2 - t)), P(m - d) * (P(n) - 1) / 2);
    }
  } else {
    sink.row((pt - 1) * (pnt - W(m + d - t)),
             P(d) * (P(n) - 1) * (P(m) + P(m - d) + P(m - 2 * d) + 1) / ((P(d) + 1) * (P(d) + 1)));
    sink.row((pt - 1) * (pnt + W(m - t)),
             P(3 * d) * (P(m) - 1) * (P(n) - P(n - 2 * d) - P(n - 3 * d) + P(m) - P(m - d) + 1) /
                 ((P(d) + 1) * (P(2 * d) - 1)));
    sink.row((pt - 1) * (pnt + W(m + 2 * d - t)),
             (P(m - d) - 1) * (P(n) - 1) / ((P(d) + 1) * (P(2 * d) - 1)));
  }
  sink.dist[0] += 1;
  return std::move(sink.dist);
}

std::map<std::uint64_t, BigInt> theorem_c2(const TowerParams& pr) {
  int p = pr.p, m = pr.m, d = pr.d, n = pr.n, t = pr.t;
  auto P = [&](int e) { return ppow(p, e); };
  auto W = [&](int e) { return FieldCtx::pow_u64(p, e); };
  std::uint64_t pt = W(t), pnt = W(n - t);
  WeightSink sink;
  if (!pr.dprime_is_2d()) {
    sink.row((pt - 1) * (pnt - W(m - t)),
             P(m + d - t) * (P(m) + P(t) - 1) * (P(m) - 1) * (P(m) + 1) * (P(m) + 1) /
                 (2 * (P(d) + 1)));
    sink.row((pt - 1) * (pnt + W(m - t)), P(m + d - t) * (P(m) - P(t) + 1) * (P(m) - 1) *
                                              (P(n) - 2 * P(n - d) + 1) / (2 * (P(d) - 1)));
    sink.row((pt - 1) * pnt + W(m - t),
             P(m + d - t) * (P(t) - 1) * (P(n) - 1) * (P(n) - 1) / (2 * (P(d) + 1)));
    sink.row((pt - 1) * pnt - W(m - t), P(m + d - t) * (P(t) - 1) * (P(n) - 1) *
                                            (P(n) - 2 * P(n - d) + 1) / (2 * (P(d) - 1)));
    sink.row((pt - 1) * (pnt + W(m + d - t)),
             P(m - d - t) * (P(m - d) - 1) * (P(m - d) - P(t) + 1) * (P(n) - 1) / (P(2 * d) - 1));
    sink.row((pt - 1) * pnt - W(m + d - t),
             P(m - d - t) * (P(t) - 1) * (P(n - 2 * d) - 1) * (P(n) - 1) / (P(2 * d) - 1));
    if ((d / t) % 2 == 1) {
      sink.row((pt - 1) * pnt - W(m + (d - t) / 2),
               P(m - d) * (P(t) - 1) * (P(n - d - t) + P((n - d - t) / 2)) * (P(n) - 1) / 2);
      sink.row((pt - 1) * pnt + W(m + (d - t) / 2),
               P(m - d) * (P(t) - 1) * (P(n - d - t) - P((n - d - t) / 2)) * (P(n) - 1) / 2);
      sink.row((pt - 1) * pnt,
               (P(n) - 1) * (P(3 * m - d) - P(3 * m - 2 * d) + P(3 * m - 3 * d) +
                             P(3 * m - 2 * d - t) - P(n - 2 * d) + 1));
    } else {
      sink.row((pt - 1) * (pnt - W(m + d / 2 - t)),
               P(m - d) * (P(n - d - t) + (P(t) - 1) * P(m - t - d / 2)) * (P(n) - 1) / 2);
      sink.row((pt - 1) * (pnt + W(m + d / 2 - t)),
               P(m - d) * (P(n - d - t) - (P(t) - 1) * P(m - t - d / 2)) * (P(n) - 1) / 2);
      sink.row((pt - 1) * pnt - W(m + d / 2 - t),
               P(m - d) * (P(t) - 1) * (P(n - d - t) + P(m - t - d / 2)) * (P(n) - 1) / 2);
      sink.row((pt - 1) * pnt + W(m + d / 2 - t),
               P(m - d) * (P(t) - 1) * (P(n - d - t) - P(m - t - d / 2)) * (P(n) - 1) / 2);
      sink.row((pt - 1) * pnt,
               (P(n) - 1) * (P(3 * m - d) - P(3 * m - 2 * d) + P(3 * m - 3 * d) - P(n - 2 * d) + 1));
    }
  } else {
    Rat X = P(n) - P(n - 2 * d) - P(n - 3 * d) + P(m) - P(m - d) + 1;
    Rat Y = P(m) + P(m - d) + P(m - 2 * d) + 1;
    Rat Z = P(3 * m - d) - P(3 * m - 2 * d) + P(3 * m - 3 * d) - P(3 * m - 4 * d) +
            P(3 * m - 5 * d) + P(n - d) - 2 * P(n - 2 * d) + P(n - 3 * d) - P(n - 4 * d) + 1;
    Rat dd = (P(d) + 1) * (P(2 * d) - 1);
    sink.row((pt - 1) * (pnt + W(m - t)), P(m + 3 * d - t) * (P(m) - P(t) + 1) * (P(m) - 1) * X / dd);
    sink.row((pt - 1) * pnt - W(m - t), P(m + 3 * d - t) * (P(t) - 1) * (P(n) - 1) * X / dd);
    sink.row((pt - 1) * (pnt - W(m + d - t)),
             P(m - t) * (P(m - d) + P(t) - 1) * (P(n) - 1) * Y / ((P(d) + 1) * (P(d) + 1)));
    sink.row((pt - 1) * pnt + W(m + d - t),
             P(m - t) * (P(t) - 1) * (P(m - d) - 1) * (P(n) - 1) * Y / ((P(d) + 1) * (P(d) + 1)));
    sink.row((pt - 1) * (pnt + W(m + 2 * d - t)),
             P(m - 2 * d - t) * (P(m - 2 * d) - P(t) + 1) * (P(m - d) - 1) * (P(n) - 1) / dd);
    sink.row((pt - 1) * pnt - W(m + 2 * d - t),
             P(m - 2 * d - t) * (P(t) - 1) * (P(m - 2 * d) - 1) * (P(m - d) - 1) * (P(n) - 1) / dd);
    sink.row((pt - 1) * pnt, (P(n) - 1) * Z);
  }
  sink.dist[0] += 1;
  return std::move(sink.dist);
}

}  // namespace kasami::tables
