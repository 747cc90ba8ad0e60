#include "sigvar/signature.hpp"

#include <functional>

namespace sigvar {

namespace {

void check_letters(const Word& w, std::size_t d) {
  for (auto l : w)
    if (l < 1 || static_cast<std::size_t>(l) > d)
      throw Error("letter " + std::to_string(l) + " outside 1.." + std::to_string(d));
}

}  // namespace

MultiPoly segment_sig_word(const PathSegment& s, const Word& w) {
  check_letters(w, s.dimension());
  UniPoly acc = UniPoly::monomial(MultiPoly(s.table(), Rational(1)), 0);
  for (auto l : w) acc = (acc * s[static_cast<std::size_t>(l - 1)].derivative()).integrate();
  return acc.eval_at_one();
}

std::vector<Tensor> segment_sig_levels(const PathSegment& s, std::size_t k) {
  const int d = static_cast<int>(s.dimension());
  std::vector<Tensor> levels(k + 1, Tensor(d, s.table()));
  std::vector<UniPoly> velocity;
  for (const auto& c : s.coordinates()) velocity.push_back(c.derivative());

  levels[0].add(Word{}, MultiPoly(s.table(), Rational(1)));
  // depth-first over word prefixes, carrying S_prefix(t)
  std::vector<Letter> prefix;
  std::function<void(const UniPoly&)> descend = [&](const UniPoly& inner) {
    if (prefix.size() == k) return;
    for (int i = 1; i <= d; ++i) {
      UniPoly next = (inner * velocity[static_cast<std::size_t>(i - 1)]).integrate();
      if (next.is_zero()) continue;  // every extension vanishes too
      prefix.push_back(i);
      levels[prefix.size()].add(Word(prefix), next.eval_at_one());
      descend(next);
      prefix.pop_back();
    }
  };
  descend(UniPoly::monomial(MultiPoly(s.table(), Rational(1)), 0));
  return levels;
}

std::vector<Tensor> sig_levels(const Path& x, std::size_t k) {
  const auto& segs = x.segments();
  std::vector<Tensor> acc = segment_sig_levels(segs.front(), k);
  for (std::size_t s = 1; s < segs.size(); ++s) {
    auto next = segment_sig_levels(segs[s], k);
    std::vector<Tensor> combined(k + 1, Tensor(static_cast<int>(x.dimension()), x.table()));
    // Chen: level n of the product is sum_{i+j=n} acc[i] . next[j]
    for (std::size_t n = 0; n <= k; ++n)
      for (std::size_t i = 0; i <= n; ++i) combined[n] += concat_product(acc[i], next[n - i]);
    acc = std::move(combined);
  }
  for (auto& t : acc) t = t.over(x.table()->empty() ? t.table() : x.table());
  return acc;
}

Tensor sig_level(const Path& x, std::size_t k) { return sig_levels(x, k)[k]; }

SignatureResult signature(const Path& x, std::size_t k) { return SignatureResult{x, k, sig_level(x, k)}; }

MultiPoly sig_word(const Path& x, const Word& w) {
  check_letters(w, x.dimension());
  if (x.segments().size() == 1) return segment_sig_word(x.segments().front(), w);
  return sig_level(x, w.size()).coefficient(w);
}

MultiPoly sig_pair(const Path& x, const Tensor& t) {
  if (static_cast<std::size_t>(t.alphabet()) > x.dimension())
    for (const auto& [w, c] : t.terms()) check_letters(w, x.dimension());
  auto levels = sig_levels(x, t.max_length());
  MultiPoly acc(x.table());
  for (const auto& [w, c] : t.terms()) acc += levels[w.size()].coefficient(w) * c;
  return acc;
}

Tensor caxis_tensor(int d, std::size_t k) {
  if (d < 1) throw Error("caxis_tensor: dimension must be positive");
  return sig_level(pw_lin_path(identity_matrix(static_cast<std::size_t>(d))), k);
}

Tensor cmon_tensor(int d, std::size_t k) {
  if (d < 1) throw Error("cmon_tensor: dimension must be positive");
  std::vector<UniPoly> coords;
  for (int i = 1; i <= d; ++i) coords.push_back(UniPoly::monomial(MultiPoly(constant_table(), Rational(1)), i));
  return sig_level(poly_path(coords), k);
}

Tensor caxis_tensor_closed_form(int d, std::size_t k) {
  Tensor t(d);
  for (const auto& w : all_words(d, k)) {
    bool increasing = true;
    for (std::size_t i = 1; i < w.size(); ++i) increasing = increasing && w[i - 1] <= w[i];
    if (!increasing) continue;
    Integer denom = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      run = (i > 0 && w[i] == w[i - 1]) ? run + 1 : 1;
      denom *= static_cast<unsigned long>(run);
    }
    t.add(w, make_rational(Integer(1), denom));
  }
  return t;
}

Tensor cmon_tensor_closed_form(int d, std::size_t k) {
  Tensor t(d);
  for (const auto& w : all_words(d, k)) {
    Rational c = 1;
    long partial = 0;
    for (auto l : w) {
      partial += l;
      c *= make_rational(l, partial);
    }
    t.add(w, c);
  }
  return t;
}

Tensor tensor_exp_series(const Tensor& l, std::size_t k) {
  if (!l.coefficient(Word{}).is_zero()) throw Error("tensor_exp: argument has a nonzero empty-word coefficient");
  Tensor result = Tensor::unit(l.alphabet(), l.table());
  Tensor power = Tensor::unit(l.alphabet(), l.table());
  for (std::size_t n = 1; n <= k; ++n) {
    power = concat_product(power, l, k) * make_rational(1, static_cast<long>(n));
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

Tensor tensor_exp(const Tensor& l, std::size_t k) { return tensor_exp_series(l, k).level(k); }

Tensor matrix_action(const PolyMatrix& a, const Tensor& t) {
  if (static_cast<std::size_t>(t.alphabet()) != a.cols())
    throw Error("matrix_action: tensor alphabet " + std::to_string(t.alphabet()) + " does not match " +
                std::to_string(a.cols()) + " matrix columns");
  const int rows = static_cast<int>(a.rows());
  TablePtr table = t.table();
  for (const auto& e : a.entries())
    if (!e.table()->empty()) {
      table = e.table();
      break;
    }
  Tensor out(rows, table);
  for (const auto& [w, c] : t.terms()) {
    // expand the product over positions one letter at a time
    std::vector<std::pair<std::vector<Letter>, MultiPoly>> partial{{{}, c}};
    for (auto j : w) {
      std::vector<std::pair<std::vector<Letter>, MultiPoly>> next;
      for (auto& [letters, coeff] : partial)
        for (int i = 1; i <= rows; ++i) {
          const MultiPoly& entry = a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
          if (entry.is_zero()) continue;
          auto nl = letters;
          nl.push_back(i);
          next.emplace_back(std::move(nl), coeff * entry);
        }
      partial = std::move(next);
    }
    for (auto& [letters, coeff] : partial) out.add(Word(std::move(letters)), coeff);
  }
  return out;
}

Tensor matrix_action(const RationalMatrix& a, const Tensor& t) {
  PolyMatrix p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = MultiPoly(constant_table(), a(i, j));
  return matrix_action(p, t);
}

Tensor phi_map(const MultiPoly& p, int d) {
  if (p.table()->size() != static_cast<std::size_t>(d) && !p.is_zero())
    throw Error("phi_map: polynomial has " + std::to_string(p.table()->size()) + " variables, expected " +
                std::to_string(d));
  if (p.constant_term() != 0) throw Error("phi_map: polynomial must vanish at the origin");
  Tensor out(d);
  for (const auto& [m, c] : p.terms()) {
    Tensor img = Tensor::unit(d);
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      for (unsigned e = 0; e < m.exponents[i]; ++e) img = shuffle(img, Tensor::word(d, Word{static_cast<Letter>(i + 1)}));
    out += img * c;
  }
  return out;
}

Tensor adjoint_word(const Word& w, int d, const std::vector<MultiPoly>& p) {
  if (w.empty()) throw Error("adjoint_word: empty word");
  check_letters(w, p.size());
  std::vector<Tensor> images;
  for (const auto& q : p) images.push_back(phi_map(q, d));
  // w = ((i_1 > i_2) > i_3) ... > i_k
  Tensor acc = images[static_cast<std::size_t>(w[0] - 1)];
  for (std::size_t pos = 1; pos < w.size(); ++pos) {
    const Tensor& next = images[static_cast<std::size_t>(w[pos] - 1)];
    if (acc.is_zero() || next.is_zero()) return Tensor(d);
    acc = half_shuffle(acc, next);
  }
  return acc;
}

Tensor adjoint_tensor(const Tensor& t, int d, const std::vector<MultiPoly>& p) {
  Tensor out(d, t.table());
  for (const auto& [w, c] : t.terms()) {
    if (w.empty()) {
      out.add(w, c);  // M_p fixes the unit
      continue;
    }
    out += adjoint_word(w, d, p) * c;
  }
  return out;
}

}  // namespace sigvar
