#pragma once

#include "acx/symplectic.hpp"

namespace acx {

/// Primitive operator symbols. A word is a formal composition, stored
/// left-to-right in application order of matrix products: the word
/// {A, B, C} compiles to the matrix A*B*C (C acts first).
enum class OpSym { d, dc, delta, deltabar, L, Lam, dLam, star };

struct Letter {
  OpSym sym;
  bool adjoint = false;
};

using OperatorWord = std::vector<Letter>;

std::string word_to_string(const OperatorWord& w);

/// Everything needed to compile operator words into exact matrices:
/// the algebra and almost complex structure always, a metric for
/// adjoints and star, a symplectic form for L, Lam, dLam.
class OperatorContext {
 public:
  OperatorContext(const AlmostComplex& acs, const Metric* metric = nullptr,
                  const Symplectic* sympl = nullptr)
      : acs_(&acs), metric_(metric), sympl_(sympl) {}

  const AlmostComplex& acs() const { return *acs_; }
  const LieAlgebra& algebra() const { return acs_->algebra(); }
  const Metric* metric() const { return metric_; }
  const Symplectic* symplectic() const { return sympl_; }
  int n() const { return acs_->n(); }

  /// Dimension of the degree-k space; 0 outside [0, n].
  int dim(int k) const;
  /// Degree after applying the letter at degree k.
  int shifted(const Letter& l, int k) const;
  /// Degree after applying the whole word at degree k.
  int word_target(const OperatorWord& w, int k) const;

  /// Matrix of the letter on degree-k forms.
  Matrix letter_matrix(const Letter& l, int k) const;
  /// Matrix of the word on degree-k forms; compositions that pass
  /// through an empty degree compile to the zero map.
  Matrix compile(const OperatorWord& w, int k) const;
  /// Sum of compiled words (all must share source/target degrees).
  Matrix compile_sum(const std::vector<OperatorWord>& words, int k) const;

 private:
  const AlmostComplex* acs_;
  const Metric* metric_;
  const Symplectic* sympl_;
};

}  // namespace acx
