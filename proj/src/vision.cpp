#include "irgc/vision.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace irgc {

GrayImage make_image(int width, int height, std::uint8_t fill) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("make_image: empty image");
  GrayImage img;
  img.width = width;
  img.height = height;
  img.pixels.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  return img;
}

namespace {

// Sampling-insensitive dissimilarity: compare I_L(p) against the interval
// spanned by the half-pixel interpolants around the right match, and
// symmetrically, taking the smaller of the two directed distances.
double birchfield_tomasi(const GrayImage& left, const GrayImage& right, int r, int c, int cr) {
  auto interval = [](const GrayImage& img, int row, int col, double& lo, double& hi) {
    double v = img.at(row, col);
    double vm = 0.5 * (v + img.at(row, std::max(col - 1, 0)));
    double vp = 0.5 * (v + img.at(row, std::min(col + 1, img.width - 1)));
    lo = std::min({v, vm, vp});
    hi = std::max({v, vm, vp});
  };
  double il = left.at(r, c);
  double ir = right.at(r, cr);
  double lo, hi;
  interval(right, r, cr, lo, hi);
  double d_lr = std::max({0.0, il - hi, lo - il});
  interval(left, r, c, lo, hi);
  double d_rl = std::max({0.0, ir - hi, lo - ir});
  return std::min(d_lr, d_rl);
}

}  // namespace

std::vector<double> stereo_unaries(const GrayImage& left, const GrayImage& right,
                                   int disparities, StereoMatcher matcher) {
  if (left.width != right.width || left.height != right.height)
    throw std::invalid_argument("stereo_unaries: image dimensions differ");
  if (disparities < 2) throw std::invalid_argument("stereo_unaries: need at least 2 disparities");

  std::vector<double> unary(static_cast<std::size_t>(left.width) * left.height * disparities, 0.0);
  for (int r = 0; r < left.height; ++r) {
    for (int c = 0; c < left.width; ++c) {
      std::size_t base =
          (static_cast<std::size_t>(r) * left.width + c) * static_cast<std::size_t>(disparities);
      double max_in_bounds = 0.0;
      for (int d = 0; d < disparities; ++d) {
        int cr = c - d;
        if (cr < 0) continue;
        double cost = matcher == StereoMatcher::kAbsoluteDifference
                          ? std::abs(static_cast<double>(left.at(r, c)) - right.at(r, cr))
                          : birchfield_tomasi(left, right, r, c, cr);
        unary[base + static_cast<std::size_t>(d)] = cost;
        max_in_bounds = std::max(max_in_bounds, cost);
      }
      for (int d = 0; d < disparities; ++d)
        if (c - d < 0) unary[base + static_cast<std::size_t>(d)] = max_in_bounds;
    }
  }
  return unary;
}

std::vector<double> stereo_gammas(const GrayImage& left, const GradientGammaRule& rule,
                                  int connectivity) {
  if (rule.gamma_low_gradient < 0.0 || rule.gamma_high_gradient < 0.0)
    throw std::invalid_argument("stereo_gammas: negative gamma");
  std::vector<double> gammas;
  for (auto [p, q] : grid_edges(left.width, left.height, connectivity)) {
    int grad = std::abs(static_cast<int>(left.pixels[static_cast<std::size_t>(p)]) -
                        static_cast<int>(left.pixels[static_cast<std::size_t>(q)]));
    gammas.push_back(grad <= rule.threshold ? rule.gamma_low_gradient : rule.gamma_high_gradient);
  }
  return gammas;
}

MRFModel inpainting_model(const GrayImage& image, const std::vector<std::uint8_t>& observed,
                          int label_step, double gamma, double lambda) {
  if (label_step <= 0 || 256 % label_step != 0)
    throw std::invalid_argument("inpainting_model: label_step must divide 256");
  std::size_t n = image.pixels.size();
  if (!observed.empty() && observed.size() != n)
    throw std::invalid_argument("inpainting_model: mask size mismatch");

  int labels = 256 / label_step;
  std::vector<double> unary(n * static_cast<std::size_t>(labels), 0.0);
  for (std::size_t p = 0; p < n; ++p) {
    if (!observed.empty() && !observed[p]) continue;
    double ip = image.pixels[p];
    for (int k = 0; k < labels; ++k) {
      double diff = ip - static_cast<double>(k * label_step);
      unary[p * static_cast<std::size_t>(labels) + static_cast<std::size_t>(k)] = diff * diff;
    }
  }
  return build_grid(image.width, image.height, 4, labels, unary, gamma,
                    decompose(PriorSpec::truncated_quadratic(lambda)));
}

namespace {

// Next header token, skipping whitespace and '#' comments.
int next_pgm_int(std::istream& in) {
  while (true) {
    int ch = in.peek();
    if (ch == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(ch)) {
      in.get();
    } else {
      break;
    }
  }
  int value;
  if (!(in >> value)) throw std::runtime_error("pgm: malformed header");
  return value;
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pgm: cannot open " + path);
  char m0 = 0, m1 = 0;
  in.get(m0).get(m1);
  if (m0 != 'P' || m1 != '5')
    throw std::runtime_error("pgm: unsupported format (expected binary P5): " + path);
  int width = next_pgm_int(in);
  int height = next_pgm_int(in);
  int maxval = next_pgm_int(in);
  if (width <= 0 || height <= 0) throw std::runtime_error("pgm: invalid dimensions: " + path);
  if (maxval <= 0 || maxval > 255) throw std::runtime_error("pgm: maxval out of range: " + path);
  in.get();  // single whitespace after maxval
  GrayImage img = make_image(width, height);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
    throw std::runtime_error("pgm: truncated pixel data: " + path);
  return img;
}

void write_pgm(const GrayImage& image, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("pgm: cannot write " + path);
  out << "P5\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw std::runtime_error("pgm: write failed: " + path);
}

GrayImage labels_to_image(const Labeling& x, int width, int height, int label_count) {
  if (static_cast<std::size_t>(width) * static_cast<std::size_t>(height) != x.size())
    throw std::invalid_argument("labels_to_image: size mismatch");
  GrayImage img = make_image(width, height);
  for (std::size_t i = 0; i < x.size(); ++i)
    img.pixels[i] = static_cast<std::uint8_t>(x[i] * 255 / (label_count - 1));
  return img;
}

}  // namespace irgc
