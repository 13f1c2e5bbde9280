#ifndef IRGC_MODEL_IO_HPP
#define IRGC_MODEL_IO_HPP

#include <iosfwd>
#include <string>

#include "irgc/mrf.hpp"

namespace irgc {

// Text model format:
//   n L prior_kind params...
//   n lines of L unary costs
//   edge lines: p q gamma
// prior_kind is one of truncated_linear, truncated_quadratic, cauchy (each
// followed by lambda), corrupted_gaussian (followed by alpha beta),
// convex_linear, convex_quadratic.
MRFModel read_model(std::istream& in, const std::string& name = "<stream>");
MRFModel read_model_file(const std::string& path);

void write_model(const MRFModel& model, std::ostream& out);
void write_model_file(const MRFModel& model, const std::string& path);

}  // namespace irgc

#endif  // IRGC_MODEL_IO_HPP
