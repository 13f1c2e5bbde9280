#ifndef IRGC_VISION_HPP
#define IRGC_VISION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "irgc/mrf.hpp"

namespace irgc {

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major

  std::uint8_t at(int r, int c) const {
    return pixels[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(c)];
  }
  std::uint8_t& at(int r, int c) {
    return pixels[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(c)];
  }
};

GrayImage make_image(int width, int height, std::uint8_t fill = 0);

enum class StereoMatcher { kAbsoluteDifference, kBirchfieldTomasi };

// Matching cost table f_p(d) for d in 0..disparities-1, node-major. A left
// pixel whose match at disparity d falls outside the right image gets the
// per-pixel maximum over in-bounds disparities, so border disparities are
// never artificially cheap.
std::vector<double> stereo_unaries(const GrayImage& left, const GrayImage& right,
                                   int disparities, StereoMatcher matcher);

struct GradientGammaRule {
  int threshold = 0;
  double gamma_low_gradient = 0.0;   // used when |I(p) - I(q)| <= threshold
  double gamma_high_gradient = 0.0;  // otherwise
};

// Per-edge gamma for a grid over the left image, in grid_edges order.
std::vector<double> stereo_gammas(const GrayImage& left, const GradientGammaRule& rule,
                                  int connectivity);

// Inpainting / denoising model: labels are the intensities {0, step, 2*step,
// ...} (label_step must divide 256), unary (I_p - k*step)^2 where observed and
// 0 elsewhere, truncated quadratic prior in label units, uniform gamma,
// 4-connected grid. An empty mask means fully observed.
MRFModel inpainting_model(const GrayImage& image, const std::vector<std::uint8_t>& observed,
                          int label_step, double gamma, double lambda);

// Binary PGM (P5), maxval <= 255.
GrayImage read_pgm(const std::string& path);
void write_pgm(const GrayImage& image, const std::string& path);

// Scales labels to intensities by floor(label * 255 / (L - 1)).
GrayImage labels_to_image(const Labeling& x, int width, int height, int label_count);

}  // namespace irgc

#endif  // IRGC_VISION_HPP
