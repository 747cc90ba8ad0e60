#ifndef SIGVAR_WORDS_HPP
#define SIGVAR_WORDS_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sigvar/polynomial.hpp"

namespace sigvar {

using Letter = int;

/// A word in the letters 1..d. The empty word is the unit of concatenation.
/// Words order by length first, then lexicographically.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Letter max_letter() const;
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t pos) const;
  Word without_last() const { return prefix(letters_.size() - 1); }

  Word operator+(const Word& other) const;
  Word operator+(Letter letter) const;

  bool operator==(const Word& other) const = default;
  /// (length, lexicographic) order.
  bool operator<(const Word& other) const;
  /// Plain lexicographic order (a proper prefix is smaller); used by Lyndon machinery.
  static bool lex_less(const Word& a, const Word& b);

  /// "[1, 2, 3]"; the empty word is "[]".
  std::string to_string() const;
  /// Accepts "[1,2,3]", "[ ]" and surrounding whitespace.
  static Word parse(std::string_view text);

 private:
  std::vector<Letter> letters_;
};

/// All d^k words of length k, in lexicographic order.
std::vector<Word> all_words(int alphabet, std::size_t length);

/// Integer combination of words; result type of word-level products.
using WordCounts = std::map<Word, std::int64_t>;

/// Finite linear combination of words with MultiPoly coefficients: an element of
/// the free associative algebra on `alphabet` letters. Levels may be mixed.
class Tensor {
 public:
  using TermMap = std::map<Word, MultiPoly>;

  explicit Tensor(int alphabet, TablePtr table = constant_table());
  static Tensor word(int alphabet, const Word& w, TablePtr table = constant_table());
  static Tensor unit(int alphabet, TablePtr table = constant_table());

  int alphabet() const noexcept { return alphabet_; }
  const TablePtr& table() const noexcept { return table_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of w, zero when absent.
  MultiPoly coefficient(const Word& w) const;
  void add(const Word& w, const MultiPoly& c);
  void add(const Word& w, const Rational& c);

  /// Component of words with exactly this length.
  Tensor level(std::size_t k) const;
  /// Words of length <= k.
  Tensor truncated(std::size_t k) const;
  /// Single common word length, or -1 if mixed; 0 for the zero tensor.
  int homogeneous_level() const;
  std::size_t max_length() const;

  /// Re-express coefficients over a wider table.
  Tensor over(TablePtr table) const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const MultiPoly& scalar);
  Tensor& operator*=(const Rational& scalar);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const MultiPoly& s) { return a *= s; }
  friend Tensor operator*(const MultiPoly& s, Tensor a) { return a *= s; }
  friend Tensor operator*(Tensor a, const Rational& s) { return a *= s; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }
  Tensor operator-() const;

  bool operator==(const Tensor& other) const;

 private:
  void unify(const Tensor& other, const char* op);

  int alphabet_;
  TablePtr table_;
  TermMap terms_;
};

/// Concatenation product, bilinear. The truncated form drops words longer than max_length.
Tensor concat_product(const Tensor& a, const Tensor& b);
Tensor concat_product(const Tensor& a, const Tensor& b, std::size_t max_length);

/// Shuffle of two words, memoized per thread.
const WordCounts& shuffle_words(const Word& u, const Word& v);
/// Half-shuffle u > v of nonempty words: the last letter of the result is the last letter of v.
WordCounts half_shuffle_words(const Word& u, const Word& v);

Tensor shuffle(const Tensor& a, const Tensor& b);
Tensor half_shuffle(const Tensor& a, const Tensor& b);

/// "c1 [w1] + c2 [w2] + ..." with words in descending (length, lex) order; "0" for zero.
std::string format_tensor(const Tensor& t);
Tensor parse_tensor(std::string_view text, int alphabet, TablePtr table = constant_table());

/// Pairing <T, w> summed over all words: sum_w coeff_T(w) * coeff_S(w).
MultiPoly pairing(const Tensor& t, const Tensor& s);

}  // namespace sigvar

#endif
