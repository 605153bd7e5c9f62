#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace uniqlab::products {

/// Deterministic entire-function evaluator with optional analytic log-modulus.
class FunctionHandle {
 public:
  using Evaluator = std::function<std::complex<double>(std::complex<double>)>;
  using LogAbsEvaluator = std::function<double(std::complex<double>)>;

  FunctionHandle(std::string name, Evaluator f, std::optional<double> order = std::nullopt,
                 LogAbsEvaluator log_abs = {});

  std::complex<double> operator()(std::complex<double> z) const { return f_(z); }
  /// log|f(z)|; uses the analytic form when supplied so large |z| does not overflow.
  double log_abs(std::complex<double> z) const;

  const std::string& name() const noexcept { return name_; }
  std::optional<double> order() const noexcept { return order_; }
  nlohmann::json metadata() const;

  static FunctionHandle gaussian();                          // exp(-pi z^2)
  static FunctionHandle sinc();                              // sin(pi z) / (pi z)
  static FunctionHandle sine(double frequency = 1.0);        // sin(pi frequency z)
  static FunctionHandle sine_decay(double b, double d);      // sin(2 pi b z) exp(-pi d z)
  static FunctionHandle constant(std::complex<double> c);

  /// "gaussian", "sinc", "sine", "sine(w)", "sine_decay(b,d)", "constant(c)".
  static FunctionHandle from_registry(const std::string& spec);

 private:
  std::string name_;
  Evaluator f_;
  std::optional<double> order_;
  LogAbsEvaluator log_abs_;
};

/// log|sin(z)| without overflow for large |Im z|.
double log_abs_sin(std::complex<double> z);

}  // namespace uniqlab::products
