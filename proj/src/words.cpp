#include "sigvar/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

namespace sigvar {

// ---------------------------------------------------------------------------
// Word

Letter Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::suffix_from(std::size_t pos) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos), letters_.end()));
}

Word Word::operator+(const Word& other) const {
  std::vector<Letter> out;
  out.reserve(size() + other.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word Word::operator+(Letter letter) const {
  Word w = *this;
  w.letters_.push_back(letter);
  return w;
}

bool Word::operator<(const Word& other) const {
  if (size() != other.size()) return size() < other.size();
  return letters_ < other.letters_;
}

bool Word::lex_less(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

std::string Word::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(letters_[i]);
  }
  return out + "]";
}

namespace {

// Parses "[i, j, ...]" starting at pos; advances pos past ']'.
Word parse_word_at(std::string_view text, std::size_t& pos, std::size_t offset) {
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", offset + pos);
  ++pos;
  std::vector<Letter> letters;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    return Word{};
  }
  while (true) {
    skip();
    auto start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected letter", offset + pos);
    auto digits = text.substr(start, pos - start);
    if (digits.size() > 9) throw ParseError("letter too large", offset + start);
    int letter = std::stoi(std::string(digits));
    if (letter < 1) throw ParseError("letters start at 1", offset + start);
    letters.push_back(letter);
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or ']'", offset + pos);
  }
  return Word(std::move(letters));
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::size_t pos = 0;
  Word w = parse_word_at(text, pos, 0);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters after word", pos);
  return w;
}

std::vector<Word> all_words(int alphabet, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> cur(length, 1);
  if (alphabet < 1) return out;
  while (true) {
    out.emplace_back(cur);
    std::size_t i = length;
    while (i > 0 && cur[i - 1] == alphabet) {
      cur[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor

Tensor::Tensor(int alphabet, TablePtr table) : alphabet_(alphabet), table_(std::move(table)) {
  if (alphabet_ < 1) throw Error("alphabet size must be positive");
}

Tensor Tensor::word(int alphabet, const Word& w, TablePtr table) {
  Tensor t(alphabet, table);
  t.add(w, MultiPoly(table, Rational(1)));
  return t;
}

Tensor Tensor::unit(int alphabet, TablePtr table) { return word(alphabet, Word{}, std::move(table)); }

MultiPoly Tensor::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MultiPoly(table_) : it->second;
}

void Tensor::add(const Word& w, const MultiPoly& c) {
  if (c.is_zero()) return;
  for (auto l : w)
    if (l < 1 || l > alphabet_)
      throw Error("letter " + std::to_string(l) + " outside alphabet 1.." + std::to_string(alphabet_));
  if (!same_table(table_, c.table()) && !c.table()->empty()) {
    if (!table_->empty()) throw Error("coefficient lives in an incompatible ring");
    *this = over(c.table());
  }
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c.over(table_->empty() ? c.table() : table_));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Tensor::add(const Word& w, const Rational& c) { add(w, MultiPoly(table_, c)); }

Tensor Tensor::level(std::size_t k) const {
  Tensor r(alphabet_, table_);
  for (const auto& [w, c] : terms_)
    if (w.size() == k) r.terms_.emplace(w, c);
  return r;
}

Tensor Tensor::truncated(std::size_t k) const {
  Tensor r(alphabet_, table_);
  for (const auto& [w, c] : terms_)
    if (w.size() <= k) r.terms_.emplace(w, c);
  return r;
}

int Tensor::homogeneous_level() const {
  if (terms_.empty()) return 0;
  auto k = terms_.begin()->first.size();
  return terms_.rbegin()->first.size() == k ? static_cast<int>(k) : -1;
}

std::size_t Tensor::max_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

Tensor Tensor::over(TablePtr table) const {
  Tensor r(alphabet_, table);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.over(table));
  return r;
}

void Tensor::unify(const Tensor& other, const char* op) {
  if (alphabet_ != other.alphabet_)
    throw Error(std::string(op) + ": alphabet sizes differ (" + std::to_string(alphabet_) + " vs " +
                std::to_string(other.alphabet_) + ")");
  if (same_table(table_, other.table_) || other.table_->empty()) return;
  if (table_->empty()) {
    *this = over(other.table_);
    return;
  }
  throw Error(std::string(op) + ": tensors have coefficients in incompatible rings");
}

Tensor& Tensor::operator+=(const Tensor& other) {
  unify(other, "add");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  unify(other, "sub");
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

Tensor& Tensor::operator*=(const MultiPoly& scalar) {
  if (!scalar.table()->empty() && !same_table(table_, scalar.table())) {
    if (!table_->empty()) throw Error("scalar lives in an incompatible ring");
    *this = over(scalar.table());
  }
  TermMap out;
  for (auto& [w, c] : terms_) {
    MultiPoly p = c * scalar;
    if (!p.is_zero()) out.emplace(w, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

Tensor& Tensor::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

bool Tensor::operator==(const Tensor& other) const {
  if (alphabet_ != other.alphabet_ || terms_.size() != other.terms_.size()) return false;
  auto it = other.terms_.begin();
  for (const auto& [w, c] : terms_) {
    if (!(w == it->first) || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

namespace {

void check_pair(const Tensor& a, const Tensor& b, const char* op) {
  if (a.alphabet() != b.alphabet())
    throw Error(std::string(op) + ": alphabet sizes differ (" + std::to_string(a.alphabet()) + " vs " +
                std::to_string(b.alphabet()) + ")");
  if (!same_table(a.table(), b.table()) && !a.table()->empty() && !b.table()->empty())
    throw Error(std::string(op) + ": tensors have coefficients in incompatible rings");
}

TablePtr common_table(const Tensor& a, const Tensor& b) { return a.table()->empty() ? b.table() : a.table(); }

}  // namespace

Tensor concat_product(const Tensor& a, const Tensor& b, std::size_t max_length) {
  check_pair(a, b, "concat");
  Tensor r(a.alphabet(), common_table(a, b));
  for (const auto& [u, cu] : a.terms()) {
    if (u.size() > max_length) break;
    for (const auto& [v, cv] : b.terms()) {
      if (u.size() + v.size() > max_length) break;
      r.add(u + v, cu * cv);
    }
  }
  return r;
}

Tensor concat_product(const Tensor& a, const Tensor& b) {
  return concat_product(a, b, std::numeric_limits<std::size_t>::max());
}

// ---------------------------------------------------------------------------
// Shuffles

namespace {

struct WordPairLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    if (a.first < b.first) return true;
    if (b.first < a.first) return false;
    return a.second < b.second;
  }
};

using ShuffleMemo = std::map<std::pair<Word, Word>, WordCounts, WordPairLess>;

ShuffleMemo& shuffle_memo() {
  thread_local ShuffleMemo memo;
  return memo;
}

void append_letter(WordCounts& into, const WordCounts& from, Letter letter) {
  for (const auto& [w, n] : from) into[w + letter] += n;
}

}  // namespace

const WordCounts& shuffle_words(const Word& u, const Word& v) {
  // shuffle is commutative; key on the ordered pair
  std::pair<Word, Word> key = v < u ? std::make_pair(v, u) : std::make_pair(u, v);
  auto& memo = shuffle_memo();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  WordCounts result;
  const Word& a = key.first;
  const Word& b = key.second;
  if (a.empty()) {
    result.emplace(b, 1);
  } else {
    // (a' x) sh (b' y) = (a' sh b) x + (a sh b') y
    append_letter(result, shuffle_words(a.without_last(), b), a.back());
    append_letter(result, shuffle_words(a, b.without_last()), b.back());
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

WordCounts half_shuffle_words(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw Error("half-shuffle is undefined on the empty word");
  // u > (v' i) = (u > v' + v' > u) i = (u sh v') i, and u > i = u i
  WordCounts result;
  append_letter(result, shuffle_words(u, v.without_last()), v.back());
  return result;
}

Tensor shuffle(const Tensor& a, const Tensor& b) {
  check_pair(a, b, "shuffle");
  Tensor r(a.alphabet(), common_table(a, b));
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      MultiPoly c = cu * cv;
      for (const auto& [w, n] : shuffle_words(u, v)) r.add(w, c * Rational(n));
    }
  return r;
}

Tensor half_shuffle(const Tensor& a, const Tensor& b) {
  check_pair(a, b, "half-shuffle");
  if (!a.coefficient(Word{}).is_zero() || !b.coefficient(Word{}).is_zero())
    throw Error("half-shuffle is undefined on the empty word");
  Tensor r(a.alphabet(), common_table(a, b));
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      MultiPoly c = cu * cv;
      for (const auto& [w, n] : half_shuffle_words(u, v)) r.add(w, c * Rational(n));
    }
  return r;
}

MultiPoly pairing(const Tensor& t, const Tensor& s) {
  MultiPoly acc(common_table(t, s));
  for (const auto& [w, c] : s.terms()) {
    auto it = t.terms().find(w);
    if (it != t.terms().end()) acc += it->second * c;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Text form

std::string format_tensor(const Tensor& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    bool single = c.term_count() == 1;
    bool negative = single && c.terms().begin()->second < 0;
    MultiPoly mag = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    bool unit = mag.is_constant() && mag.constant_term() == 1;
    if (!single)
      out += "(" + mag.to_string() + ") ";
    else if (!unit || w.empty())
      out += mag.to_string() + " ";
    out += w.to_string();
  }
  return out;
}

Tensor parse_tensor(std::string_view text, int alphabet, TablePtr table) {
  Tensor result(alphabet, table);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) throw ParseError("empty tensor", pos);
  {
    auto end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (text.substr(pos, end - pos) == "0") return result;
  }

  bool negate = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negate = text[pos] == '-';
    ++pos;
  }
  while (true) {
    skip();
    // coefficient text runs to the next '[' at parenthesis depth 0
    auto coeff_start = pos;
    int depth = 0;
    while (pos < text.size() && !(text[pos] == '[' && depth == 0)) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      if (depth < 0) throw ParseError("unbalanced ')'", pos);
      ++pos;
    }
    if (pos == text.size()) throw ParseError("expected '[' to start a word", pos);
    std::string_view coeff_text = text.substr(coeff_start, pos - coeff_start);
    bool blank = std::all_of(coeff_text.begin(), coeff_text.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    MultiPoly coeff(table, Rational(1));
    if (!blank) {
      try {
        coeff = MultiPoly::parse(coeff_text, table);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), coeff_start + e.position());
      }
    }
    auto word_start = pos;
    Word w = parse_word_at(text, pos, 0);
    for (auto l : w)
      if (l < 1 || l > alphabet)
        throw ParseError("letter " + std::to_string(l) + " outside alphabet 1.." + std::to_string(alphabet),
                         word_start);
    result.add(w, negate ? -coeff : coeff);
    skip();
    if (pos == text.size()) break;
    if (text[pos] == '+' || text[pos] == '-') {
      negate = text[pos] == '-';
      ++pos;
      continue;
    }
    throw ParseError(std::string("expected '+' or '-', found '") + text[pos] + "'", pos);
  }
  return result;
}

}  // namespace sigvar
