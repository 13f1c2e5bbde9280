#ifndef IRGC_PRIORS_HPP
#define IRGC_PRIORS_HPP

#include <memory>

namespace irgc {

enum class PriorKind {
  kTruncatedLinear,     // theta(z) = min(z, lambda)
  kTruncatedQuadratic,  // theta(z) = min(z^2, lambda^2)
  kCauchy,              // theta(z) = lambda^2/2 * log(1 + (z/lambda)^2)
  kCorruptedGaussian,   // theta(z) = -log(a*exp(-z^2) + (1-a)/b*exp(-z^2/b^2))
  kConvexLinear,        // theta(z) = z
  kConvexQuadratic,     // theta(z) = z^2
};

const char* prior_kind_name(PriorKind kind);

struct PriorSpec {
  PriorKind kind = PriorKind::kTruncatedLinear;
  double lambda = 1.0;  // inflection parameter; positive integer where used
  double alpha = 0.75;  // corrupted Gaussian inlier weight, in (0,1)
  double beta = 50.0;   // corrupted Gaussian outlier spread, > 0

  static PriorSpec truncated_linear(double lambda);
  static PriorSpec truncated_quadratic(double lambda);
  static PriorSpec cauchy(double lambda);
  static PriorSpec corrupted_gaussian(double alpha, double beta);
  static PriorSpec convex_linear();
  static PriorSpec convex_quadratic();
};

// Split of a pairwise potential theta into theta = h_b(g(z)) with g convex and
// h_b concave non-decreasing. For the single-inflection kinds (truncated
// linear/quadratic, Cauchy) the split follows the piecewise rule
//   g(z)   = theta(z)                     for z <= lambda
//            theta'(lambda)(z - lambda) + theta(lambda)  for z >= lambda
//   h_b(y) = y                            for y <= theta(lambda)
//            theta((y + lambda theta'(lambda) - theta(lambda)) / theta'(lambda))
// with theta'(lambda) the left derivative. The corrupted Gaussian uses
// g(z) = z^2, h_b(y) = theta(sqrt(y)). Convex kinds use h_b = identity.
class PriorDecomposition {
 public:
  explicit PriorDecomposition(const PriorSpec& spec);

  double theta(double z) const;
  double g(double z) const;
  double h(double y) const;
  // Supergradient of h_b at y; at kinks returns the right derivative.
  double supergradient(double y) const;
  // g(|z+1|) + g(|z-1|) - 2 g(|z|), z a non-negative integer label difference.
  double second_difference(int z) const;

  const PriorSpec& spec() const { return spec_; }
  double theta_at_lambda() const { return theta_lambda_; }
  double theta_slope_at_lambda() const { return theta_slope_; }

 private:
  PriorSpec spec_;
  double theta_lambda_ = 0.0;  // theta(lambda)
  double theta_slope_ = 0.0;   // left derivative theta'(lambda^-)
};

std::shared_ptr<const PriorDecomposition> decompose(const PriorSpec& spec);

}  // namespace irgc

#endif  // IRGC_PRIORS_HPP
