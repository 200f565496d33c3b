#pragma once

#include <array>
#include <optional>

#include "acx/form.hpp"

namespace acx {

/// Even-dimensional real Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c^k_ij e_k, together with the exterior algebra
/// of its dual and the Chevalley-Eilenberg differential
///
///     d e^k = -sum_{i<j} c^k_ij e^i ∧ e^j,
///
/// the invariant model of (A^bullet, d) on a quotient of the group.
class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}
  /// brackets[k][i][j] = c^k_ij for zero-based i < j; entries are real.
  LieAlgebra(int dim, std::vector<std::vector<std::vector<Rat>>> c);
  static LieAlgebra abelian(int dim);
  /// From the differentials of the coframe (degree-2 forms d e^k).
  static LieAlgebra from_coframe_differentials(std::vector<Form> dcoframe);

  int dim() const { return dim_; }
  Rat structure_constant(int k, int i, int j) const;  // 1-based, any i, j
  /// [e_i, e_j] as a coefficient column vector (1-based indices).
  Matrix bracket(int i, int j) const;

  /// nullopt when the Jacobi identity holds, else the first violating
  /// (i, j, k) triple in lexicographic order (1-based).
  std::optional<std::array<int, 3>> jacobi_witness() const;
  bool jacobi_ok() const { return !jacobi_witness().has_value(); }
  /// trace(ad_X) = 0 for every basis vector X.
  bool unimodular() const;
  /// Throws ValidationError unless unimodular; gate for every
  /// metric-dependent computation (otherwise the invariant Gram
  /// adjoint does not model the L2 adjoint on the quotient).
  void require_unimodular() const;

  const FormBasis& basis(int k) const;
  /// d e^k as a 2-form (1-based k).
  const Form& coframe_differential(int k) const;
  /// Matrix of d on degree-k forms (size C(n,k+1) x C(n,k)).
  const Matrix& d_matrix(int k) const;
  Form d(const Form& alpha) const;

  /// Invariant Betti numbers b_0..b_n of the complex.
  std::vector<int> betti() const;

 private:
  void build();

  int dim_;
  std::vector<std::vector<std::vector<Rat>>> c_;  // c_[k][i][j], i < j
  std::vector<Form> dcoframe_;
  std::vector<FormBasis> bases_;
  std::vector<Matrix> dmat_;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace acx
