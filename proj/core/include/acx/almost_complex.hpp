#pragma once

#include <map>

#include "acx/lie_algebra.hpp"
#include "acx/subspace.hpp"

namespace acx {

/// The four bidegree components of d on an almost complex manifold,
/// shifting (p,q) by (+2,-1), (+1,0), (0,+1), (-1,+2).
enum class Bidegree { Mu, Partial, PartialBar, MuBar };

enum class Parity { Even, Odd };

/// Invariant almost complex structure on a Lie algebra: J as a frame
/// endomorphism with J^2 = -Id, the induced (1,0)-coframe, the (p,q)
/// bigrading projectors, d^c = J^{-1} d J, the components mu, del,
/// delbar, mubar, the combinations delta/deltabar, parity projectors
/// and the Nijenhuis tensor.
///
/// J acts on forms by duality, (J a)(v_1,...,v_k) = a(J v_1,...,J v_k);
/// with this convention a (p,q)-form is multiplied by i^(p-q). Frame
/// statements like "J e_1 = e_2" always refer to the frame action.
///
/// Per-degree operator tables are built lazily on first use and shared
/// read-only afterwards; build one per thread or touch the degrees you
/// need before sharing.
class AlmostComplex {
 public:
  /// From the frame matrix (column j = image of frame vector e_j).
  /// Throws ValidationError unless J^2 = -Id.
  AlmostComplex(const LieAlgebra& g, Matrix j_frame);
  /// From m complex covectors spanning the (1,0)-dual space (rows).
  /// Throws ValidationError if the span is degenerate or meets its
  /// conjugate (equivalently: contains a real covector).
  static AlmostComplex from_coframe(const LieAlgebra& g, Matrix coframe_rows);

  const LieAlgebra& algebra() const { return *g_; }
  int n() const { return g_->dim(); }
  int m() const { return g_->dim() / 2; }

  const Matrix& j_frame() const { return j_frame_; }
  /// m x 2m rows: canonical (1,0)-coframe phi^1..phi^m in e-coords.
  const Matrix& coframe() const { return coframe_; }

  /// Change of basis: column = phi-word expanded in e-word coordinates.
  /// phi-words run over the complex covector alphabet
  /// (phi^1..phi^m, conj phi^1..conj phi^m) with the same lexicographic
  /// word order as FormBasis.
  const Matrix& phi_matrix(int k) const;
  const Matrix& phi_matrix_inverse(int k) const;

  /// Exact projector of degree-k forms onto the (p,q) component.
  const Matrix& projector(int k, int p, int q) const;
  Form bigrade_project(int p, int q, const Form& a) const;

  const Matrix& j_matrix(int k) const;          // J on k-forms
  const Matrix& j_matrix_inverse(int k) const;  // J^{-1} = (-1)^k J
  Form j_apply(const Form& a) const;

  const Matrix& dc_matrix(int k) const;  // d^c = J^{-1} d J
  Form dc(const Form& a) const;

  const Matrix& component_matrix(Bidegree tag, int k) const;
  Form component(Bidegree tag, const Form& a) const;

  /// delta = (d + i d^c)/2 = del + mubar,
  /// deltabar = (d - i d^c)/2 = delbar + mu.
  const Matrix& delta_matrix(int k) const;
  const Matrix& deltabar_matrix(int k) const;

  const Matrix& parity_matrix(int k, Parity which) const;
  Form parity_project(Parity which, const Form& a) const;

  /// N_J(e_i, e_j) as a frame vector (1-based indices).
  Matrix nijenhuis(int i, int j) const;
  /// Rank of mubar restricted to (1,0)-forms; zero iff the invariant
  /// structure is integrable.
  int nijenhuis_rank() const;
  bool integrable() const { return nijenhuis_rank() == 0; }

  /// Forms written in the phi-word alphabet: positive index j stands
  /// for phi^j, negative -j for conj phi^j.
  Form phi_form(const std::vector<std::pair<std::vector<int>, Scalar>>& terms)
      const;
  Form phi_word(const std::vector<int>& letters) const {
    return phi_form({{letters, Scalar(1)}});
  }
  std::string phi_str(const Form& a) const;

 private:
  AlmostComplex() = default;
  void build_coframe();
  struct Tables;
  Tables& tables(int k) const;

  const LieAlgebra* g_ = nullptr;
  Matrix j_frame_;
  Matrix coframe_;
  Matrix pfull_;  // 2m x 2m rows: phi^1..phi^m, conj phi^1..conj phi^m

  struct Tables {
    bool ready = false;
    Matrix phi, phi_inv;
    std::map<std::pair<int, int>, Matrix> proj;
    Matrix j, j_inv, dc;
    std::map<Bidegree, Matrix> comp;
    Matrix delta, deltabar;
    Matrix even, odd;
  };
  mutable std::vector<Tables> tables_;
};

}  // namespace acx
