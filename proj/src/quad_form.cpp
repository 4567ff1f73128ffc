#include "kasami/quad_form.hpp"

#include <sstream>

namespace kasami {

std::pair<SymMatrix, std::vector<Elt>> build_h_and_a(const Tower& tw, Elt alpha, Elt beta,
                                                     Elt gamma) {
  const FieldCtx& F = tw.field;
  const TowerParams& pr = tw.params;
  require(F.in_subfield(alpha, pr.m), Errc::AlphaNotInSubfield, "alpha must lie in F_{p^m}");
  int s = pr.s;
  const std::vector<Elt>& v = F.basis();
  const std::vector<Elt>& trd = F.trace_table(pr.d);
  Elt half = F.scalar(F.inv2());
  Elt quarter = F.mul(half, half);

  SymMatrix h(s);
  for (int i = 0; i < s; ++i) {
    Elt vim = F.frob(v[i], pr.m), vik = F.frob(v[i], pr.k);
    for (int j = i; j < s; ++j) {
      // 1/2 Tr^m_d(alpha(v_i^{p^m} v_j + v_i v_j^{p^m})), with
      // Tr^m_d = 1/2 Tr^n_d on F_{p^m}
      Elt wm = F.mul(alpha, F.add(F.mul(vim, v[j]), F.mul(v[i], F.frob(v[j], pr.m))));
      Elt wk = F.mul(beta, F.add(F.mul(vik, v[j]), F.mul(v[i], F.frob(v[j], pr.k))));
      Elt hij = F.add(F.mul(quarter, trd[wm]), F.mul(half, trd[wk]));
      h.at(i, j) = hij;
      h.at(j, i) = hij;
    }
  }
  std::vector<Elt> a(s);
  for (int i = 0; i < s; ++i) a[i] = trd[F.mul(gamma, v[i])];
  return {std::move(h), std::move(a)};
}

RankReport rank_of_matrix(const Tower& tw, SymMatrix h) {
  const FieldCtx& F = tw.field;
  int s = h.dim;
  int r = 0;
  int eta = 1;
  for (int col = 0; col < s; ++col) {
    // pick a nonzero diagonal pivot; if none, transfuse a nonzero
    // off-diagonal entry onto the diagonal (adds row j to i and col j to i,
    // giving 2*h_ij there)
    int piv = -1;
    for (int i = col; i < s; ++i)
      if (h.at(i, i)) {
        piv = i;
        break;
      }
    if (piv < 0) {
      int bi = -1, bj = -1;
      for (int i = col; i < s && bi < 0; ++i)
        for (int j = i + 1; j < s; ++j)
          if (h.at(i, j)) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;  // remaining block is zero
      for (int c = col; c < s; ++c) h.at(bi, c) = F.add(h.at(bi, c), h.at(bj, c));
      for (int rr = col; rr < s; ++rr) h.at(rr, bi) = F.add(h.at(rr, bi), h.at(rr, bj));
      piv = bi;
    }
    if (piv != col) {
      for (int c = col; c < s; ++c) std::swap(h.at(piv, c), h.at(col, c));
      for (int rr = col; rr < s; ++rr) std::swap(h.at(rr, piv), h.at(rr, col));
    }
    Elt a = h.at(col, col);
    if (!a) break;
    ++r;
    eta *= F.quadratic_character(a, tw.params.d);
    Elt ainv = F.inv(a);
    for (int rr = col + 1; rr < s; ++rr) {
      Elt f = F.mul(h.at(rr, col), ainv);
      if (!f) continue;
      for (int c = col; c < s; ++c) h.at(rr, c) = F.sub(h.at(rr, c), F.mul(f, h.at(col, c)));
      for (int c2 = col; c2 < s; ++c2) h.at(c2, rr) = h.at(rr, c2);
    }
  }
  RankReport rep;
  rep.r = r;
  rep.eta0_delta = eta;
  rep.kernel_size = FieldCtx::pow_u64(tw.params.q0, s - r);
  return rep;
}

RankReport rank_and_invariant(const Tower& tw, Elt alpha, Elt beta) {
  auto [h, a] = build_h_and_a(tw, alpha, beta, 0);
  return rank_of_matrix(tw, std::move(h));
}

Elt phi_eval(const Tower& tw, Elt alpha, Elt beta, Elt x) {
  const FieldCtx& F = tw.field;
  const TowerParams& pr = tw.params;
  Elt t1 = F.mul(alpha, F.frob(x, pr.m));
  Elt t2 = F.mul(beta, F.frob(x, pr.k));
  Elt t3 = F.mul(F.frob(beta, pr.n - pr.k), F.frob(x, pr.n - pr.k));
  return F.add(F.add(t1, t2), t3);
}

std::uint64_t phi_kernel_size(const Tower& tw, Elt alpha, Elt beta) {
  const FieldCtx& F = tw.field;
  std::uint64_t cnt = 0;
  for (Elt x = 0; x < F.q(); ++x)
    if (phi_eval(tw, alpha, beta, x) == 0) ++cnt;
  return cnt;
}

std::optional<std::vector<Elt>> solve_affine_center(const Tower& tw, const SymMatrix& h,
                                                    const std::vector<Elt>& a_vec) {
  const FieldCtx& F = tw.field;
  int s = h.dim;
  // 2YH = -A, i.e. (2H) Y^T = -A^T by symmetry
  std::vector<Elt> m(static_cast<std::size_t>(s) * (s + 1), 0);
  Elt two = F.scalar(2);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) m[i * (s + 1) + j] = F.mul(two, h.at(i, j));
    m[i * (s + 1) + s] = F.neg(a_vec[i]);
  }
  int row = 0;
  std::vector<int> pivot_col(s, -1);
  for (int col = 0; col < s && row < s; ++col) {
    int piv = -1;
    for (int i = row; i < s; ++i)
      if (m[i * (s + 1) + col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j <= s; ++j) std::swap(m[piv * (s + 1) + j], m[row * (s + 1) + j]);
    Elt ip = F.inv(m[row * (s + 1) + col]);
    for (int j = 0; j <= s; ++j) m[row * (s + 1) + j] = F.mul(m[row * (s + 1) + j], ip);
    for (int i = 0; i < s; ++i) {
      if (i == row) continue;
      Elt f = m[i * (s + 1) + col];
      if (!f) continue;
      for (int j = 0; j <= s; ++j)
        m[i * (s + 1) + j] = F.sub(m[i * (s + 1) + j], F.mul(f, m[row * (s + 1) + j]));
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int i = row; i < s; ++i)
    if (m[i * (s + 1) + s]) return std::nullopt;
  std::vector<Elt> y(s, 0);
  for (int i = 0; i < row; ++i) y[pivot_col[i]] = m[i * (s + 1) + s];
  return y;
}

namespace {

// Tr^d_1 of a subfield element, as an exponent of zeta
int trace_d1_int(const Tower& tw, Elt x) {
  return tw.field.as_prime_int(tw.field.trace(x, tw.params.d, 1));
}

CyclotomicInteger closed_quad_sum(const Tower& tw, const SymMatrix& h) {
  const TowerParams& pr = tw.params;
  RankReport rep = rank_of_matrix(tw, h);
  // nondegenerate part contributes eta0(Delta) * G_d^r with the Gauss sum
  // over F_{q0} lifted from F_p; the s-r free variables contribute q0^(s-r)
  CyclotomicInteger g = sqrt_q0star(pr.p, pr.d).pow(static_cast<unsigned>(rep.r));
  BigInt freepart = 1;
  for (int i = 0; i < h.dim - rep.r; ++i) freepart *= static_cast<std::int64_t>(pr.q0);
  CyclotomicInteger v = g.scaled(freepart);
  return rep.eta0_delta < 0 ? -v : v;
}

}  // namespace

CyclotomicInteger quad_char_sum(const Tower& tw, const SymMatrix& h,
                                const std::vector<Elt>* a_vec, EvalMode mode) {
  const FieldCtx& F = tw.field;
  const TowerParams& pr = tw.params;
  int s = h.dim;
  if (a_vec) require(static_cast<int>(a_vec->size()) == s, Errc::LengthMismatch, "bad A length");

  if (mode == EvalMode::Brute) {
    std::vector<std::int64_t> hist(pr.p, 0);
    std::vector<std::uint64_t> odo(s, 0);
    std::uint64_t q0 = pr.q0;
    std::vector<Elt> x(s, 0);
    std::uint64_t points = 1;
    for (int i = 0; i < s; ++i) points *= q0;
    for (std::uint64_t it = 0; it < points; ++it) {
      Elt val = 0;
      for (int i = 0; i < s; ++i) {
        if (!x[i]) continue;
        Elt row = 0;
        for (int j = 0; j < s; ++j) row = F.add(row, F.mul(h.at(i, j), x[j]));
        val = F.add(val, F.mul(x[i], row));
        if (a_vec) val = F.add(val, F.mul((*a_vec)[i], x[i]));
      }
      ++hist[trace_d1_int(tw, val)];
      for (int i = 0; i < s; ++i) {
        if (++odo[i] < q0) {
          x[i] = F.subfield_elem(pr.d, odo[i]);
          break;
        }
        odo[i] = 0;
        x[i] = 0;
      }
    }
    std::vector<BigInt> counts(pr.p);
    for (int i = 0; i < pr.p; ++i) counts[i] = hist[i];
    return CyclotomicInteger::canonicalize(pr.p, std::move(counts));
  }

  CyclotomicInteger base = closed_quad_sum(tw, h);
  if (!a_vec) return base;
  auto center = solve_affine_center(tw, h, *a_vec);
  if (!center) return CyclotomicInteger::zero(pr.p);
  const std::vector<Elt>& b = *center;
  // c = -Tr^d_1(B H B^T); the equivalent form (1/2) Tr^d_1(A B^T) must agree
  Elt bhb = 0;
  for (int i = 0; i < s; ++i) {
    Elt row = 0;
    for (int j = 0; j < s; ++j) row = F.add(row, F.mul(h.at(i, j), b[j]));
    bhb = F.add(bhb, F.mul(b[i], row));
  }
  int c1 = trace_d1_int(tw, F.neg(bhb));
  Elt abt = 0;
  for (int i = 0; i < s; ++i) abt = F.add(abt, F.mul((*a_vec)[i], b[i]));
  int c2 = trace_d1_int(tw, F.mul(F.scalar(F.inv2()), abt));
  require(c1 == c2, Errc::UnrecognizedValue, "affine shift constants disagree");
  return base.mul_zeta(c1);
}

std::uint64_t psi_solution_count(const Tower& tw, Elt alpha, Elt beta) {
  const FieldCtx& F = tw.field;
  const TowerParams& pr = tw.params;
  require(alpha != 0 && beta != 0, Errc::ZeroCoefficient, "psi needs alpha, beta nonzero");
  require(F.in_subfield(alpha, pr.m), Errc::AlphaNotInSubfield, "alpha must lie in F_{p^m}");
  Elt bq = F.frob(beta, pr.n - pr.k);
  std::uint64_t e = FieldCtx::pow_u64(pr.p, ((pr.m - pr.k) % pr.n + pr.n) % pr.n) + 1;
  std::uint64_t cnt = 0;
  for (Elt z = 0; z < F.q(); ++z) {
    Elt v = F.add(F.add(F.mul(bq, F.pow(z, e)), F.mul(alpha, z)), beta);
    if (v == 0) ++cnt;
  }
  return cnt;
}

std::uint64_t bluher_root_count(const Tower& tw, int h, Elt b) {
  const FieldCtx& F = tw.field;
  std::uint64_t e = FieldCtx::pow_u64(tw.params.p, h) + 1;
  std::uint64_t cnt = 0;
  for (Elt z = 0; z < F.q(); ++z) {
    Elt v = F.add(F.sub(F.pow(z, e), F.mul(b, z)), b);
    if (v == 0) ++cnt;
  }
  return cnt;
}

Elt bluher_parameter(const Tower& tw, Elt alpha, Elt beta) {
  const FieldCtx& F = tw.field;
  const TowerParams& pr = tw.params;
  require(alpha != 0 && beta != 0, Errc::ZeroCoefficient, "scaling needs alpha, beta nonzero");
  std::uint64_t pmk = FieldCtx::pow_u64(pr.p, ((pr.m - pr.k) % pr.n + pr.n) % pr.n);
  Elt num = F.pow(alpha, pmk + 1);
  Elt den = F.pow(beta, pmk * (FieldCtx::pow_u64(pr.p, pr.m) + 1));
  return F.mul(num, F.inv(den));
}

std::string rank_report_to_json(const RankReport& rep) {
  std::ostringstream os;
  os << "{\"r\":" << rep.r << ",\"eta0_delta\":" << rep.eta0_delta
     << ",\"kernel_size\":" << rep.kernel_size << "}";
  return os.str();
}

}  // namespace kasami
