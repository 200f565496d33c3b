#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "acx/matrix.hpp"

namespace acx {

/// Strictly increasing index word i1 < ... < ik encoded as a bitmask
/// (bit i set means index i+1 is present). Supports up to 32 frame
/// indices; in practice dimensions stay in the single digits.
using Word = uint32_t;

Word word_from_indices(const std::vector<int>& idx);
std::vector<int> word_indices(Word w);
int word_degree(Word w);
/// Sign of e^a ∧ e^b as a reordering of e^(a|b); 0 if they overlap.
int wedge_sign(Word a, Word b);
std::string word_str(Word w);

/// Ordered basis of degree-k words on n indices, in lexicographic
/// order of the index sequences, fixed once per session.
class FormBasis {
 public:
  FormBasis() : n_(0), k_(0) {}
  FormBasis(int n, int k);

  int n() const { return n_; }
  int degree() const { return k_; }
  int size() const { return static_cast<int>(words_.size()); }
  Word word(int i) const { return words_[static_cast<size_t>(i)]; }
  int index_of(Word w) const;  // -1 if absent

 private:
  int n_, k_;
  std::vector<Word> words_;
  std::map<Word, int> index_;
};

/// Sparse invariant form: a graded element of the exterior algebra of
/// the dual Lie algebra with Gaussian-rational coefficients. Zero
/// coefficients are never stored.
class Form {
 public:
  Form() : n_(0), degree_(0) {}
  Form(int n, int degree) : n_(n), degree_(degree) {}

  static Form unit(int n) { return monomial(n, 0, Scalar(1)); }
  static Form monomial(int n, Word w, Scalar c);
  static Form covector(int n, int index) {
    return monomial(n, word_from_indices({index}), Scalar(1));
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeff_.empty(); }
  const std::map<Word, Scalar>& coeffs() const { return coeff_; }
  Scalar coeff(Word w) const;
  void set_coeff(Word w, const Scalar& c);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& s, const Form& f);
  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.coeff_ == b.coeff_;
  }

  Form conj() const;

  /// Coefficient column vector with respect to basis.
  Matrix coords(const FormBasis& basis) const;
  static Form from_coords(const FormBasis& basis, const Matrix& col);

  std::string str() const;

 private:
  int n_, degree_;
  std::map<Word, Scalar> coeff_;
};

/// Graded-commutative product; forms of total degree above n multiply
/// to the zero form.
Form wedge(const Form& a, const Form& b);

/// Interior product with the frame vector e_index.
Form interior(int index, const Form& a);

/// Matrix of (k-form -> wedge with fixed form) is built where needed;
/// this helper gives the matrix of any linear map defined on degree-1
/// words extended multiplicatively to degree k (an algebra map, e.g.
/// the action of an endomorphism of the dual space on k-forms).
Matrix algebra_map_matrix(const Matrix& on_covectors, const FormBasis& from,
                          const FormBasis& to);

}  // namespace acx
