#include "acx/form.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace acx {

Word word_from_indices(const std::vector<int>& idx) {
  Word w = 0;
  for (int i : idx) {
    if (i < 1 || i > 32) throw std::out_of_range("word index out of range");
    const Word bit = Word{1} << (i - 1);
    if (w & bit) throw std::invalid_argument("repeated index in word");
    w |= bit;
  }
  return w;
}

std::vector<int> word_indices(Word w) {
  std::vector<int> idx;
  for (int i = 0; w; ++i, w >>= 1)
    if (w & 1) idx.push_back(i + 1);
  return idx;
}

int word_degree(Word w) { return std::popcount(w); }

int wedge_sign(Word a, Word b) {
  if (a & b) return 0;
  // Parity of the number of pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (Word bb = b; bb; bb &= bb - 1) {
    const Word low = bb & ~(bb - 1);
    inversions += std::popcount(a & ~(low | (low - 1)));
  }
  return inversions % 2 ? -1 : 1;
}

std::string word_str(Word w) {
  std::ostringstream os;
  bool wide = false;
  const auto idx = word_indices(w);
  for (int i : idx)
    if (i > 9) wide = true;
  for (size_t j = 0; j < idx.size(); ++j) {
    if (wide && j) os << ",";
    os << idx[j];
  }
  return os.str();
}

namespace {

void gen_words(int n, int k, int start, Word acc, std::vector<Word>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i <= n - k + 1; ++i)
    gen_words(n, k - 1, i + 1, acc | (Word{1} << (i - 1)), out);
}

}  // namespace

FormBasis::FormBasis(int n, int k) : n_(n), k_(k) {
  if (k >= 0 && k <= n) gen_words(n, k, 1, 0, words_);
  for (size_t i = 0; i < words_.size(); ++i)
    index_[words_[i]] = static_cast<int>(i);
}

int FormBasis::index_of(Word w) const {
  const auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

Form Form::monomial(int n, Word w, Scalar c) {
  Form f(n, word_degree(w));
  if (!c.is_zero()) f.coeff_[w] = std::move(c);
  return f;
}

Scalar Form::coeff(Word w) const {
  const auto it = coeff_.find(w);
  return it == coeff_.end() ? Scalar(0) : it->second;
}

void Form::set_coeff(Word w, const Scalar& c) {
  if (word_degree(w) != degree_)
    throw std::invalid_argument("word degree mismatch");
  if (c.is_zero())
    coeff_.erase(w);
  else
    coeff_[w] = c;
}

Form Form::operator-() const {
  Form f(n_, degree_);
  for (const auto& [w, c] : coeff_) f.coeff_[w] = -c;
  return f;
}

Form& Form::operator+=(const Form& o) {
  if (o.is_zero()) return *this;
  // The zero form is degree-agnostic: it adopts the other degree.
  if (is_zero() && n_ == o.n_) degree_ = o.degree_;
  if (n_ != o.n_ || degree_ != o.degree_)
    throw std::invalid_argument("form degree/ambient mismatch in +");
  for (const auto& [w, c] : o.coeff_) {
    auto it = coeff_.find(w);
    if (it == coeff_.end()) {
      coeff_[w] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) coeff_.erase(it);
    }
  }
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const Scalar& s, const Form& f) {
  Form g(f.n_, f.degree_);
  if (s.is_zero()) return g;
  for (const auto& [w, c] : f.coeff_) g.coeff_[w] = s * c;
  return g;
}

Form Form::conj() const {
  Form f(n_, degree_);
  for (const auto& [w, c] : coeff_) f.coeff_[w] = c.conj();
  return f;
}

Matrix Form::coords(const FormBasis& basis) const {
  if (basis.degree() != degree_ || basis.n() != n_)
    throw std::invalid_argument("coords: basis mismatch");
  Matrix v(basis.size(), 1);
  for (const auto& [w, c] : coeff_) {
    const int i = basis.index_of(w);
    if (i < 0) throw std::logic_error("word missing from basis");
    v.at(i, 0) = c;
  }
  return v;
}

Form Form::from_coords(const FormBasis& basis, const Matrix& col) {
  if (col.rows() != basis.size() || col.cols() != 1)
    throw std::invalid_argument("from_coords: shape mismatch");
  Form f(basis.n(), basis.degree());
  for (int i = 0; i < basis.size(); ++i)
    if (!col.at(i, 0).is_zero()) f.coeff_[basis.word(i)] = col.at(i, 0);
  return f;
}

std::string Form::str() const {
  if (coeff_.empty()) return "0";
  // Render in lexicographic word order.
  FormBasis basis(n_, degree_);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < basis.size(); ++i) {
    const auto it = coeff_.find(basis.word(i));
    if (it == coeff_.end()) continue;
    const Scalar& c = it->second;
    std::string cs = c.str();
    if (degree_ == 0) {
      os << (first ? "" : " + ") << cs;
      first = false;
      continue;
    }
    std::string mono = "e" + word_str(basis.word(i));
    if (cs == "1") {
      os << (first ? "" : " + ") << mono;
    } else if (cs == "-1") {
      os << (first ? "-" : " - ") << mono;
    } else {
      const bool composite = cs.find('+') != std::string::npos ||
                             cs.find('-', 1) != std::string::npos ||
                             (!c.is_real() && c.re != 0);
      std::string sep = first ? "" : " + ";
      if (!composite && cs.front() == '-') {
        sep = first ? "-" : " - ";
        cs = cs.substr(1);
      } else if (composite) {
        cs = "(" + cs + ")";
      }
      os << sep << cs << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge ambient mismatch");
  const int deg = a.degree() + b.degree();
  Form f(a.n(), deg > a.n() ? 0 : deg);
  if (deg > a.n()) return f;  // zero form by degree overflow
  for (const auto& [wa, ca] : a.coeffs())
    for (const auto& [wb, cb] : b.coeffs()) {
      const int s = wedge_sign(wa, wb);
      if (s == 0) continue;
      const Word w = wa | wb;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      auto cur = f.coeff(w);
      f.set_coeff(w, cur + c);
    }
  return f;
}

Form interior(int index, const Form& a) {
  if (a.degree() == 0) return Form(a.n(), 0);
  Form f(a.n(), a.degree() - 1);
  const Word bit = Word{1} << (index - 1);
  for (const auto& [w, c] : a.coeffs()) {
    if (!(w & bit)) continue;
    // sign (-1)^(position-1) of the index inside the word
    const int below = std::popcount(w & (bit - 1));
    Scalar x = below % 2 ? -c : c;
    f.set_coeff(w & ~bit, f.coeff(w & ~bit) + x);
  }
  return f;
}

Matrix algebra_map_matrix(const Matrix& on_covectors, const FormBasis& from,
                          const FormBasis& to) {
  const int n = from.n();
  std::vector<Form> images;
  images.reserve(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    Form img(n, 1);
    for (int i = 1; i <= n; ++i) {
      const Scalar& c = on_covectors.at(i - 1, j - 1);
      if (!c.is_zero())
        img += c * Form::covector(n, i);
    }
    images.push_back(img);
  }
  Matrix m(to.size(), from.size());
  for (int col = 0; col < from.size(); ++col) {
    Form acc = Form::unit(n);
    for (int i : word_indices(from.word(col))) acc = wedge(acc, images[i - 1]);
    m.set_col(col, acc.coords(to));
  }
  return m;
}

}  // namespace acx
