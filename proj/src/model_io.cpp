#include "irgc/model_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace irgc {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& what) {
  std::ostringstream msg;
  msg << name << ":" << line << ": " << what;
  throw std::runtime_error(msg.str());
}

PriorSpec parse_prior(std::istringstream& in, const std::string& name, int line) {
  std::string kind;
  if (!(in >> kind)) parse_fail(name, line, "missing prior kind");
  auto need = [&](double& v, const char* what) {
    if (!(in >> v)) parse_fail(name, line, std::string("missing ") + what);
  };
  PriorSpec spec;
  if (kind == "truncated_linear" || kind == "truncated_quadratic" || kind == "cauchy") {
    double lambda;
    need(lambda, "lambda");
    if (kind == "truncated_linear") return PriorSpec::truncated_linear(lambda);
    if (kind == "truncated_quadratic") return PriorSpec::truncated_quadratic(lambda);
    return PriorSpec::cauchy(lambda);
  }
  if (kind == "corrupted_gaussian") {
    double alpha, beta;
    need(alpha, "alpha");
    need(beta, "beta");
    return PriorSpec::corrupted_gaussian(alpha, beta);
  }
  if (kind == "convex_linear") return PriorSpec::convex_linear();
  if (kind == "convex_quadratic") return PriorSpec::convex_quadratic();
  parse_fail(name, line, "unknown prior kind '" + kind + "'");
}

}  // namespace

MRFModel read_model(std::istream& in, const std::string& name) {
  int line_no = 0;
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw std::runtime_error(name + ": empty model file");
  std::istringstream header(line);
  int n, labels;
  if (!(header >> n >> labels)) parse_fail(name, line_no, "expected 'n L prior_kind params...'");
  if (n <= 0 || labels < 2) parse_fail(name, line_no, "invalid node or label count");
  PriorSpec spec = parse_prior(header, name, line_no);

  MRFModel model(n, labels, decompose(spec));
  for (int p = 0; p < n; ++p) {
    if (!next_line()) parse_fail(name, line_no, "missing unary line for node " + std::to_string(p));
    std::istringstream row(line);
    for (int l = 0; l < labels; ++l) {
      double cost;
      if (!(row >> cost))
        parse_fail(name, line_no, "expected " + std::to_string(labels) + " unary costs");
      model.unary(p, l) = cost;
    }
  }
  while (next_line()) {
    std::istringstream edge(line);
    int p, q;
    double gamma;
    if (!(edge >> p >> q >> gamma)) parse_fail(name, line_no, "expected edge 'p q gamma'");
    if (p < 0 || p >= n || q < 0 || q >= n)
      parse_fail(name, line_no, "edge references invalid node");
    try {
      model.add_edge(p, q, gamma);
    } catch (const std::exception& ex) {
      parse_fail(name, line_no, ex.what());
    }
  }
  return model;
}

MRFModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  return read_model(in, path);
}

void write_model(const MRFModel& model, std::ostream& out) {
  const PriorSpec& spec = model.prior().spec();
  out << std::setprecision(17);
  out << model.node_count() << " " << model.label_count() << " " << prior_kind_name(spec.kind);
  switch (spec.kind) {
    case PriorKind::kTruncatedLinear:
    case PriorKind::kTruncatedQuadratic:
    case PriorKind::kCauchy:
      out << " " << spec.lambda;
      break;
    case PriorKind::kCorruptedGaussian:
      out << " " << spec.alpha << " " << spec.beta;
      break;
    default:
      break;
  }
  out << "\n";
  for (int p = 0; p < model.node_count(); ++p) {
    for (int l = 0; l < model.label_count(); ++l)
      out << (l ? " " : "") << model.unary(p, l);
    out << "\n";
  }
  for (const MRFEdge& e : model.edges()) out << e.p << " " << e.q << " " << e.gamma << "\n";
}

void write_model_file(const MRFModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  write_model(model, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace irgc
