#ifndef SIGVAR_VARIETIES_HPP
#define SIGVAR_VARIETIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sigvar/matrix.hpp"
#include "sigvar/words.hpp"

namespace sigvar {

/// Polynomial map from a parameter ring to coordinates labeled by words.
struct PolynomialMap {
  TablePtr parameters;
  /// Grading of the parameters (all 1 for ordinary homogeneous maps).
  std::vector<unsigned> weights;
  int alphabet = 1;
  std::vector<Word> labels;
  std::vector<MultiPoly> entries;

  std::size_t parameter_count() const { return parameters->size(); }
  std::size_t coordinate_count() const { return entries.size(); }

  /// Throws if entries and labels disagree in length or an entry lives elsewhere.
  void validate() const;

  std::vector<Rational> eval(std::span<const Rational> point) const;
  /// Jacobian (coordinates x parameters) at a point.
  RationalMatrix jacobian(std::span<const Rational> point) const;

  bool operator==(const PolynomialMap& other) const;
};

/// Coordinates are all d^k words of length k in lexicographic order.
/// The tensor must be homogeneous unless it is restricted explicitly.
PolynomialMap tensor_parametrization(const Tensor& t);
PolynomialMap tensor_parametrization(const Tensor& t, std::size_t k);

/// p_k o exp on Lie^k(R^d); one parameter y_l of weight |l| per Lyndon word l with |l| <= k.
PolynomialMap universal_variety_map(int d, std::size_t k);

enum class PathFamily { piecewise_linear, polynomial };

/// Level-k signature map of the family with d x m parameter matrix a_i_j.
PolynomialMap signature_variety_map(PathFamily family, int d, std::size_t k, int m);

/// Name of the parameter for entry (i, j), 1-based: "a_i_j".
std::string matrix_parameter_name(int i, int j);
/// Name of the parameter for a Lyndon word: "y_1_1_2".
std::string lyndon_parameter_name(const Word& l);

/// Source of random parameter points: integer coordinates uniform in [-bound, bound].
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed, long bound = 10000) : engine_(seed), dist_(-bound, bound) {}
  std::vector<Rational> next(std::size_t dimension);
  std::vector<std::vector<Rational>> batch(std::size_t count, std::size_t dimension);

 private:
  std::mt19937_64 engine_;
  std::uniform_int_distribution<long> dist_;
};

enum class RankMethod { exact, floating };

/// Max Jacobian rank over `trials` random points: the affine dimension of the image closure.
std::size_t affine_image_dimension(const PolynomialMap& f, std::size_t trials, std::uint64_t seed,
                                   RankMethod method = RankMethod::exact);

struct IdealCounts {
  std::size_t linear = 0;     ///< dimension of linear forms vanishing on the image
  std::size_t quadrics = 0;   ///< minimal quadric generators (0 when max degree is 1)
  bool products_independent = true;  ///< linear forms times coordinates were independent
};

/// Monomials of degree `degree` (1 or 2) in n coordinates, in a fixed order:
/// degree 1 is x_0..x_{n-1}; degree 2 is x_a x_b with a <= b, lexicographic.
std::size_t monomial_count(std::size_t coordinates, unsigned degree);

/// Number of sample points used when the caller asks for "auto".
std::size_t auto_sample_count(const PolynomialMap& f, unsigned max_degree);

/// Counts low-degree relations of the image by exact interpolation at random points.
IdealCounts low_degree_ideal_counts(const PolynomialMap& f, unsigned max_degree, std::size_t samples,
                                    std::uint64_t seed);

/// Basis of the relations of a given degree (coefficient vectors over the monomial
/// order of monomial_count). Dense rational elimination: small maps only.
std::vector<std::vector<Rational>> low_degree_relations(const PolynomialMap& f, unsigned degree,
                                                        std::size_t samples, std::uint64_t seed);

/// Value of a relation (coefficient vector) at the image of a parameter point.
Rational evaluate_relation(const PolynomialMap& f, unsigned degree, std::span<const Rational> relation,
                           std::span<const Rational> point);

enum class ExportFormat { cas_script, json };
std::string export_map(const PolynomialMap& f, ExportFormat format);

}  // namespace sigvar

#endif
