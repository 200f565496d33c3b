#include "acx/operator_word.hpp"

#include <stdexcept>

namespace acx {

namespace {

const char* sym_name(OpSym s) {
  switch (s) {
    case OpSym::d: return "d";
    case OpSym::dc: return "dc";
    case OpSym::delta: return "delta";
    case OpSym::deltabar: return "deltabar";
    case OpSym::L: return "L";
    case OpSym::Lam: return "Lam";
    case OpSym::dLam: return "dLam";
    case OpSym::star: return "star";
  }
  return "?";
}

int base_shift(OpSym s) {
  switch (s) {
    case OpSym::d:
    case OpSym::dc:
    case OpSym::delta:
    case OpSym::deltabar: return 1;
    case OpSym::L: return 2;
    case OpSym::Lam: return -2;
    case OpSym::dLam: return -1;
    case OpSym::star: return 0;  // handled separately
  }
  return 0;
}

}  // namespace

std::string word_to_string(const OperatorWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += sym_name(l.sym);
    if (l.adjoint) s += "*";
  }
  return s;
}

int OperatorContext::dim(int k) const {
  if (k < 0 || k > n()) return 0;
  return algebra().basis(k).size();
}

int OperatorContext::shifted(const Letter& l, int k) const {
  if (l.sym == OpSym::star) return n() - k;
  return k + (l.adjoint ? -base_shift(l.sym) : base_shift(l.sym));
}

int OperatorContext::word_target(const OperatorWord& w, int k) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) k = shifted(*it, k);
  return k;
}

Matrix OperatorContext::letter_matrix(const Letter& l, int k) const {
  auto base = [&](OpSym s, int deg) -> Matrix {
    switch (s) {
      case OpSym::d: return algebra().d_matrix(deg);
      case OpSym::dc: return acs_->dc_matrix(deg);
      case OpSym::delta: return acs_->delta_matrix(deg);
      case OpSym::deltabar: return acs_->deltabar_matrix(deg);
      case OpSym::L:
      case OpSym::Lam:
      case OpSym::dLam:
        if (!sympl_)
          throw ValidationError("symplectic form required for L/Lam/dLam");
        if (s == OpSym::L) return sympl_->l_matrix(deg);
        if (s == OpSym::Lam) return sympl_->lam_matrix(deg);
        return sympl_->dlam_matrix(deg);
      case OpSym::star:
        if (!metric_) throw ValidationError("metric required for star");
        return metric_->star_matrix(deg);
    }
    throw std::logic_error("unknown operator symbol");
  };
  if (!l.adjoint) return base(l.sym, k);
  if (!metric_) throw ValidationError("metric required for adjoints");
  // Adjoint at degree k of the base operator from degree k - shift.
  const int src = l.sym == OpSym::star ? n() - k : k - base_shift(l.sym);
  if (src < 0 || src > n() || k < 0 || k > n())
    return Matrix(dim(shifted(l, k)), dim(k));
  const Matrix b = base(l.sym, src);
  return gram_adjoint(b, metric_->hermitian_gram(src),
                      metric_->hermitian_gram(k));
}

Matrix OperatorContext::compile(const OperatorWord& w, int k) const {
  const int target = word_target(w, k);
  int cur = k;
  bool dead = k < 0 || k > n();
  Matrix acc = Matrix::identity(dim(k));
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int next = shifted(*it, cur);
    if (!dead) {
      if (next < 0 || next > n())
        dead = true;
      else
        acc = letter_matrix(*it, cur) * acc;
    }
    cur = next;
  }
  if (dead) return Matrix(dim(target), dim(k));
  return acc;
}

Matrix OperatorContext::compile_sum(const std::vector<OperatorWord>& words,
                                    int k) const {
  if (words.empty()) throw std::invalid_argument("empty word sum");
  Matrix acc = compile(words.front(), k);
  for (size_t i = 1; i < words.size(); ++i) acc += compile(words[i], k);
  return acc;
}

}  // namespace acx
