#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kasami/cyclotomic.hpp"
#include "kasami/field.hpp"

namespace kasami {

// Symmetric matrix over the degree-d subfield F_{q0}; entries are F_q codes
// constrained to that subfield.
struct SymMatrix {
  int dim = 0;
  std::vector<Elt> e;  // row-major dim*dim

  explicit SymMatrix(int s = 0) : dim(s), e(static_cast<std::size_t>(s) * s, 0) {}
  Elt& at(int i, int j) { return e[static_cast<std::size_t>(i) * dim + j]; }
  Elt at(int i, int j) const { return e[static_cast<std::size_t>(i) * dim + j]; }
  bool is_zero() const {
    for (Elt x : e)
      if (x) return false;
    return true;
  }
};

struct RankReport {
  int r = 0;               // rank over F_{q0}
  int eta0_delta = 1;      // eta0 of the diagonal product (1 when r = 0)
  std::uint64_t kernel_size = 1;  // q0^(s-r)
};

// Gram matrix H_{alpha,beta} and the linear-form vector A_gamma w.r.t. the
// fixed basis v_1..v_s.
std::pair<SymMatrix, std::vector<Elt>> build_h_and_a(const Tower& tw, Elt alpha, Elt beta,
                                                     Elt gamma);

// Congruence-diagonalizes a copy of H over F_{q0} (first nonzero diagonal
// pivot; row+column transfusion when the diagonal is all zero) and reads off
// rank and eta0(Delta).
RankReport rank_of_matrix(const Tower& tw, SymMatrix h);

// RankReport of H_{alpha,beta}
RankReport rank_and_invariant(const Tower& tw, Elt alpha, Elt beta);

// phi_{alpha,beta}(x) = alpha x^(p^m) + beta x^(p^k) + beta^(p^(n-k)) x^(p^(n-k))
Elt phi_eval(const Tower& tw, Elt alpha, Elt beta, Elt x);

// brute count of {x in F_q : phi(x) = 0}; equals q0^(s - rank)
std::uint64_t phi_kernel_size(const Tower& tw, Elt alpha, Elt beta);

enum class EvalMode { Brute, Closed };

// sum over X in F_{q0}^s of zeta^(Tr^d_1(X H X^T [+ A X^T])).  Closed mode
// realizes the rank/invariant closed form through Gauss-sum powers; brute
// mode enumerates the q0^s points.
CyclotomicInteger quad_char_sum(const Tower& tw, const SymMatrix& h,
                                const std::vector<Elt>* a_vec, EvalMode mode);

// Solves 2YH + A = 0 over F_{q0}; nullopt when unsolvable.
std::optional<std::vector<Elt>> solve_affine_center(const Tower& tw, const SymMatrix& h,
                                                    const std::vector<Elt>& a_vec);

// brute count of roots of psi_{alpha,beta}(z) = beta^(p^(n-k)) z^(p^(m-k)+1)
// + alpha z + beta in F_q; always lands in {0, 1, 2, p^(d')+1}
std::uint64_t psi_solution_count(const Tower& tw, Elt alpha, Elt beta);

// roots in F_q of the standard form z^(p^h+1) - b z + b
std::uint64_t bluher_root_count(const Tower& tw, int h, Elt b);
// the scaling b = alpha^(p^(m-k)+1) / beta^(p^(m-k)(p^m+1)) that carries psi
// to the standard form
Elt bluher_parameter(const Tower& tw, Elt alpha, Elt beta);

std::string rank_report_to_json(const RankReport& rep);

}  // namespace kasami
