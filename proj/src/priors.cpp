#include "irgc/priors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace irgc {

namespace {

bool is_positive_integer(double v) {
  return v > 0.0 && std::floor(v) == v;
}

// -log(a*exp(-z^2) + (1-a)/b * exp(-z^2/b^2)), evaluated in log space so that
// large z does not underflow both mixture terms.
double corrupted_gaussian_theta(double z, double alpha, double beta) {
  double e1 = -z * z;
  double e2 = -z * z / (beta * beta);
  double l1 = std::log(alpha) + e1;
  double l2 = std::log((1.0 - alpha) / beta) + e2;
  double m = std::max(l1, l2);
  return -(m + std::log(std::exp(l1 - m) + std::exp(l2 - m)));
}

// d/dy theta_G(sqrt(y)) = B(z)/A(z) at z = sqrt(y), where
// A = a*exp(-z^2) + (1-a)/b   * exp(-z^2/b^2)   (the mixture itself)
// B = a*exp(-z^2) + (1-a)/b^3 * exp(-z^2/b^2)
// The shared exponential scale cancels in the ratio.
double corrupted_gaussian_slope(double y, double alpha, double beta) {
  double z2 = y;
  double e1 = -z2;
  double e2 = -z2 / (beta * beta);
  double m = std::max(e1, e2);
  double t1 = alpha * std::exp(e1 - m);
  double t2 = ((1.0 - alpha) / beta) * std::exp(e2 - m);
  double t2b = t2 / (beta * beta);
  return (t1 + t2b) / (t1 + t2);
}

}  // namespace

const char* prior_kind_name(PriorKind kind) {
  switch (kind) {
    case PriorKind::kTruncatedLinear: return "truncated_linear";
    case PriorKind::kTruncatedQuadratic: return "truncated_quadratic";
    case PriorKind::kCauchy: return "cauchy";
    case PriorKind::kCorruptedGaussian: return "corrupted_gaussian";
    case PriorKind::kConvexLinear: return "convex_linear";
    case PriorKind::kConvexQuadratic: return "convex_quadratic";
  }
  return "unknown";
}

PriorSpec PriorSpec::truncated_linear(double lambda) {
  return {PriorKind::kTruncatedLinear, lambda, 0.75, 50.0};
}
PriorSpec PriorSpec::truncated_quadratic(double lambda) {
  return {PriorKind::kTruncatedQuadratic, lambda, 0.75, 50.0};
}
PriorSpec PriorSpec::cauchy(double lambda) {
  return {PriorKind::kCauchy, lambda, 0.75, 50.0};
}
PriorSpec PriorSpec::corrupted_gaussian(double alpha, double beta) {
  return {PriorKind::kCorruptedGaussian, 1.0, alpha, beta};
}
PriorSpec PriorSpec::convex_linear() {
  return {PriorKind::kConvexLinear, 1.0, 0.75, 50.0};
}
PriorSpec PriorSpec::convex_quadratic() {
  return {PriorKind::kConvexQuadratic, 1.0, 0.75, 50.0};
}

PriorDecomposition::PriorDecomposition(const PriorSpec& spec) : spec_(spec) {
  switch (spec_.kind) {
    case PriorKind::kTruncatedLinear:
    case PriorKind::kTruncatedQuadratic:
    case PriorKind::kCauchy:
      if (!is_positive_integer(spec_.lambda))
        throw std::invalid_argument(std::string(prior_kind_name(spec_.kind)) +
                                    ": lambda must be a positive integer");
      break;
    case PriorKind::kCorruptedGaussian:
      if (!(spec_.alpha > 0.0 && spec_.alpha < 1.0))
        throw std::invalid_argument("corrupted_gaussian: alpha must be in (0,1)");
      if (!(spec_.beta > 0.0))
        throw std::invalid_argument("corrupted_gaussian: beta must be positive");
      break;
    case PriorKind::kConvexLinear:
    case PriorKind::kConvexQuadratic:
      break;
  }

  double lam = spec_.lambda;
  switch (spec_.kind) {
    case PriorKind::kTruncatedLinear:
      theta_lambda_ = lam;
      theta_slope_ = 1.0;
      break;
    case PriorKind::kTruncatedQuadratic:
      theta_lambda_ = lam * lam;
      theta_slope_ = 2.0 * lam;
      break;
    case PriorKind::kCauchy:
      theta_lambda_ = 0.5 * lam * lam * std::log1p(1.0);
      theta_slope_ = 0.5 * lam;
      break;
    default:
      break;
  }

  if (spec_.kind == PriorKind::kCorruptedGaussian) {
    // h_b(y) = theta(sqrt(y)) must be concave; the construction relies on it
    // but there is no closed-form parameter condition, so sample and fail
    // loudly on violation.
    double prev = supergradient(0.0);
    for (int i = 1; i <= 512; ++i) {
      double y = static_cast<double>(i) * 0.5;
      double s = supergradient(y);
      if (s > prev + 1e-9)
        throw std::invalid_argument(
            "corrupted_gaussian: theta(sqrt(y)) is not concave for these parameters");
      prev = s;
    }
  }
}

double PriorDecomposition::theta(double z) const {
  if (z < 0.0) throw std::invalid_argument("theta: z must be non-negative");
  double lam = spec_.lambda;
  switch (spec_.kind) {
    case PriorKind::kTruncatedLinear:
      return std::min(z, lam);
    case PriorKind::kTruncatedQuadratic:
      return std::min(z * z, lam * lam);
    case PriorKind::kCauchy: {
      double r = z / lam;
      return 0.5 * lam * lam * std::log1p(r * r);
    }
    case PriorKind::kCorruptedGaussian:
      return corrupted_gaussian_theta(z, spec_.alpha, spec_.beta);
    case PriorKind::kConvexLinear:
      return z;
    case PriorKind::kConvexQuadratic:
      return z * z;
  }
  throw std::logic_error("theta: unsupported kind");
}

double PriorDecomposition::g(double z) const {
  if (z < 0.0) throw std::invalid_argument("g: z must be non-negative");
  switch (spec_.kind) {
    case PriorKind::kTruncatedLinear:
    case PriorKind::kTruncatedQuadratic:
    case PriorKind::kCauchy:
      if (z <= spec_.lambda) return theta(z);
      return theta_slope_ * (z - spec_.lambda) + theta_lambda_;
    case PriorKind::kCorruptedGaussian:
      return z * z;
    case PriorKind::kConvexLinear:
    case PriorKind::kConvexQuadratic:
      return theta(z);
  }
  throw std::logic_error("g: unsupported kind");
}

double PriorDecomposition::h(double y) const {
  if (y < 0.0) throw std::invalid_argument("h: y outside the range of g");
  switch (spec_.kind) {
    case PriorKind::kTruncatedLinear:
    case PriorKind::kTruncatedQuadratic:
    case PriorKind::kCauchy: {
      if (y <= theta_lambda_) return y;
      double z = (y + spec_.lambda * theta_slope_ - theta_lambda_) / theta_slope_;
      return theta(z);
    }
    case PriorKind::kCorruptedGaussian:
      return corrupted_gaussian_theta(std::sqrt(y), spec_.alpha, spec_.beta);
    case PriorKind::kConvexLinear:
    case PriorKind::kConvexQuadratic:
      return y;
  }
  throw std::logic_error("h: unsupported kind");
}

double PriorDecomposition::supergradient(double y) const {
  if (y < 0.0) throw std::invalid_argument("supergradient: y outside the range of g");
  switch (spec_.kind) {
    case PriorKind::kTruncatedLinear:
    case PriorKind::kTruncatedQuadratic:
      // h_b = min(y, theta(lambda)); right derivative at the kink is 0.
      return y < theta_lambda_ ? 1.0 : 0.0;
    case PriorKind::kCauchy: {
      if (y < theta_lambda_) return 1.0;
      double lam = spec_.lambda;
      double z = (y + lam * theta_slope_ - theta_lambda_) / theta_slope_;
      double r = z / lam;
      double theta_deriv = z / (1.0 + r * r);
      return theta_deriv / theta_slope_;
    }
    case PriorKind::kCorruptedGaussian:
      return corrupted_gaussian_slope(y, spec_.alpha, spec_.beta);
    case PriorKind::kConvexLinear:
    case PriorKind::kConvexQuadratic:
      return 1.0;
  }
  throw std::logic_error("supergradient: unsupported kind");
}

double PriorDecomposition::second_difference(int z) const {
  if (z < 0) throw std::invalid_argument("second_difference: z must be non-negative");
  // past the truncation point g is affine; return an exact zero so the
  // corresponding arcs are never materialized
  bool truncating = spec_.kind == PriorKind::kTruncatedLinear ||
                    spec_.kind == PriorKind::kTruncatedQuadratic ||
                    spec_.kind == PriorKind::kCauchy;
  if (truncating && z >= static_cast<int>(spec_.lambda) + 1) return 0.0;
  if (spec_.kind == PriorKind::kConvexLinear && z >= 1) return 0.0;
  double zp = static_cast<double>(z + 1);
  double zm = static_cast<double>(std::abs(z - 1));
  return g(zp) + g(zm) - 2.0 * g(static_cast<double>(z));
}

std::shared_ptr<const PriorDecomposition> decompose(const PriorSpec& spec) {
  return std::make_shared<const PriorDecomposition>(spec);
}

}  // namespace irgc
