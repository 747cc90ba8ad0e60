#ifndef SIGVAR_LYNDON_HPP
#define SIGVAR_LYNDON_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sigvar/words.hpp"

namespace sigvar {

/// True iff w is strictly smaller (lexicographically) than each of its proper rotations.
bool is_lyndon(const Word& w);

/// All Lyndon words of length <= max_length over 1..alphabet, lexicographically
/// ordered (Duval's generation scheme).
std::vector<Word> lyndon_words(int alphabet, std::size_t max_length);

/// l = l1 l2 with l2 the longest proper right factor that is Lyndon.
std::pair<Word, Word> standard_factorization(const Word& l);

/// Non-increasing factorization into Lyndon words (Chen-Fox-Lyndon), via Duval.
std::vector<Word> lyndon_factorization(const Word& w);

/// Iterated commutator b(l) expanded in the tensor algebra.
Tensor lie_basis(const Word& l, int alphabet);

struct LexLess {
  bool operator()(const Word& a, const Word& b) const { return Word::lex_less(a, b); }
};

/// Product of Lyndon words with exponents; keys sorted lexicographically.
using ShuffleMonomial = std::map<Word, unsigned, LexLess>;

struct ShuffleMonomialLess {
  bool operator()(const ShuffleMonomial& a, const ShuffleMonomial& b) const;
};

/// Polynomial in Lyndon words under the shuffle product.
/// The empty monomial is the constant term (coefficient of the empty word).
class LyndonPolynomial {
 public:
  using TermMap = std::map<ShuffleMonomial, Rational, ShuffleMonomialLess>;

  const TermMap& terms() const noexcept { return terms_; }
  void add(const ShuffleMonomial& m, const Rational& c);
  Rational coefficient(const ShuffleMonomial& m) const;

  /// Expand every monomial through the shuffle product.
  Tensor expand(int alphabet) const;

  bool operator==(const LyndonPolynomial& other) const { return terms_ == other.terms_; }
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Shuffle product of the monomial's words, with multiplicity.
Tensor expand_monomial(const ShuffleMonomial& m, int alphabet);

/// Writes T (rational coefficients only) as a shuffle polynomial in Lyndon words.
LyndonPolynomial lyndon_shuffle(const Tensor& t);

}  // namespace sigvar

#endif
