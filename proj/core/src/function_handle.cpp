#include "uniqlab/function_handle.hpp"

#include <cmath>
#include <regex>
#include <sstream>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"

namespace uniqlab::products {

namespace {

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

double log_abs_sin(std::complex<double> z) {
  const double x = z.real();
  const double y = std::abs(z.imag());
  if (y < 20.0) {
    const double s = std::sin(x);
    const double sh = std::sinh(y);
    return 0.5 * std::log(s * s + sh * sh);
  }
  // |sin z|^2 = (cosh 2y - cos 2x) / 2
  const double e = std::exp(-2.0 * y);
  return y - std::log(2.0) + 0.5 * std::log1p(e * e - 2.0 * std::cos(2.0 * x) * e);
}

FunctionHandle::FunctionHandle(std::string name, Evaluator f, std::optional<double> order,
                               LogAbsEvaluator log_abs)
    : name_(std::move(name)), f_(std::move(f)), order_(order), log_abs_(std::move(log_abs)) {
  if (!f_) throw PreconditionError("function handle needs an evaluator");
}

double FunctionHandle::log_abs(std::complex<double> z) const {
  if (log_abs_) return log_abs_(z);
  return std::log(std::abs(f_(z)));
}

nlohmann::json FunctionHandle::metadata() const {
  nlohmann::json j;
  j["name"] = name_;
  j["order"] = order_ ? nlohmann::json(*order_) : nlohmann::json(nullptr);
  return j;
}

FunctionHandle FunctionHandle::gaussian() {
  return FunctionHandle(
      "gaussian", [](std::complex<double> z) { return std::exp(-kPi * z * z); }, 2.0,
      [](std::complex<double> z) { return -kPi * (z * z).real(); });
}

FunctionHandle FunctionHandle::sinc() {
  return FunctionHandle(
      "sinc",
      [](std::complex<double> z) {
        if (z == std::complex<double>(0.0, 0.0)) return std::complex<double>(1.0, 0.0);
        return std::sin(kPi * z) / (kPi * z);
      },
      1.0,
      [](std::complex<double> z) {
        if (std::abs(z) < 1e-8) return 0.0;
        return log_abs_sin(kPi * z) - std::log(kPi * std::abs(z));
      });
}

FunctionHandle FunctionHandle::sine(double frequency) {
  return FunctionHandle(
      frequency == 1.0 ? "sine" : "sine(" + format_number(frequency) + ")",
      [frequency](std::complex<double> z) { return std::sin(kPi * frequency * z); }, 1.0,
      [frequency](std::complex<double> z) { return log_abs_sin(kPi * frequency * z); });
}

FunctionHandle FunctionHandle::sine_decay(double b, double d) {
  if (!(b > 0.0)) throw PreconditionError("sine_decay needs b > 0");
  return FunctionHandle(
      "sine_decay(" + format_number(b) + "," + format_number(d) + ")",
      [b, d](std::complex<double> z) {
        return std::sin(2.0 * kPi * b * z) * std::exp(-kPi * d * z);
      },
      1.0,
      [b, d](std::complex<double> z) {
        return log_abs_sin(2.0 * kPi * b * z) - kPi * d * z.real();
      });
}

FunctionHandle FunctionHandle::constant(std::complex<double> c) {
  return FunctionHandle(
      "constant(" + format_number(std::abs(c)) + ")", [c](std::complex<double>) { return c; },
      0.0, [c](std::complex<double>) { return std::log(std::abs(c)); });
}

FunctionHandle FunctionHandle::from_registry(const std::string& spec) {
  static const std::regex call(R"(^\s*([a-z_]+)\s*(?:\(([^)]*)\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, call)) {
    throw PreconditionError("unrecognised function spec: " + spec);
  }
  const std::string name = m[1];
  std::vector<double> args;
  if (m[2].matched) {
    std::stringstream ss(m[2].str());
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        args.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw PreconditionError("bad numeric argument in function spec: " + spec);
      }
    }
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw PreconditionError("wrong argument count in function spec: " + spec);
  };
  if (name == "gaussian") {
    need(0);
    return gaussian();
  }
  if (name == "sinc") {
    need(0);
    return sinc();
  }
  if (name == "sine") {
    if (args.empty()) return sine();
    need(1);
    return sine(args[0]);
  }
  if (name == "sine_decay") {
    need(2);
    return sine_decay(args[0], args[1]);
  }
  if (name == "constant") {
    need(1);
    return constant(args[0]);
  }
  throw PreconditionError("unknown built-in function: " + name);
}

}  // namespace uniqlab::products
