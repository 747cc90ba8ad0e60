#ifndef SIGVAR_SIGNATURE_HPP
#define SIGVAR_SIGNATURE_HPP

#include <vector>

#include "sigvar/matrix.hpp"
#include "sigvar/paths.hpp"
#include "sigvar/words.hpp"

namespace sigvar {

/// Level-k signature of a path together with its provenance.
struct SignatureResult {
  Path path;
  std::size_t level;
  Tensor tensor;
};

/// Iterated integral of one segment along w:
///   S_e = 1,  S_{w' i}(t) = int_0^t S_{w'}(s) X_i'(s) ds,  result S_w(1).
MultiPoly segment_sig_word(const PathSegment& s, const Word& w);

/// All levels 0..k of one segment's signature (prefixes shared).
std::vector<Tensor> segment_sig_levels(const PathSegment& s, std::size_t k);

/// Levels 0..k of the signature of X, folding Chen's product left to right.
std::vector<Tensor> sig_levels(const Path& x, std::size_t k);

Tensor sig_level(const Path& x, std::size_t k);
SignatureResult signature(const Path& x, std::size_t k);

/// <sigma(X), w>.
MultiPoly sig_word(const Path& x, const Word& w);
/// <sigma(X), T> extended linearly.
MultiPoly sig_pair(const Path& x, const Tensor& t);

/// Level-k signature of the canonical axis path (d unit steps e_1, ..., e_d).
Tensor caxis_tensor(int d, std::size_t k);
/// Level-k signature of t -> (t, t^2, ..., t^d).
Tensor cmon_tensor(int d, std::size_t k);

/// Closed forms used as cross-checks of the integration route:
///   axis: 1/(k_1! ... k_d!) on weakly increasing words, 0 otherwise;
///   monomial: prod_j i_j / (i_1 + ... + i_j).
Tensor caxis_tensor_closed_form(int d, std::size_t k);
Tensor cmon_tensor_closed_form(int d, std::size_t k);

/// Truncated exponential sum_{n<=k} L^n / n! over the concatenation product,
/// all levels 0..k. L must have no empty-word component.
Tensor tensor_exp_series(const Tensor& l, std::size_t k);
/// Level-k component of the truncated exponential.
Tensor tensor_exp(const Tensor& l, std::size_t k);

/// Diagonal action of an e x d matrix: a word [j_1..j_k] over the column
/// alphabet 1..d maps to sum_i A[i_1,j_1]...A[i_k,j_k] [i_1..i_k] over the row
/// alphabet 1..e. With this convention sigma(A o X) = A . sigma(X), and the
/// pairing identity reads <sigma(A o X), w> = <sigma(X), A^T . w>.
Tensor matrix_action(const PolyMatrix& a, const Tensor& t);
Tensor matrix_action(const RationalMatrix& a, const Tensor& t);

/// phi_d: x_i -> [i], monomials -> shuffles of their letters. p must vanish at 0.
Tensor phi_map(const MultiPoly& p, int d);

/// M_p(w) for the half-shuffle homomorphism with M_p([i]) = phi_d(p_i).
Tensor adjoint_word(const Word& w, int d, const std::vector<MultiPoly>& p);
Tensor adjoint_tensor(const Tensor& t, int d, const std::vector<MultiPoly>& p);

}  // namespace sigvar

#endif
