#pragma once

#include <complex>

namespace gammabnd {

enum class Method { laurent, power, reciprocal, dirichlet, integral };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::laurent: return "laurent";
    case Method::power: return "power";
    case Method::reciprocal: return "reciprocal";
    case Method::dirichlet: return "dirichlet";
    case Method::integral: return "integral";
  }
  return "unknown";
}

// Result of any series (or quadrature) evaluation: the value, which indices
// were summed, and a rigorous bound on the omitted tail modulus.  On success
// tail_bound <= the requested tolerance.  For Method::integral, n_pos holds
// the integrand evaluation count instead of a series index.  peak_term (the
// largest summed term modulus) records the cancellation scale: |value| can be
// far below it, which bounds the meaningful accuracy of residual checks.
struct SeriesEval {
  std::complex<double> value;
  long n_neg = 0;
  long n_pos = 0;
  double tail_bound = 0.0;
  Method method = Method::laurent;
  double peak_term = 0.0;

  long terms() const { return n_pos - n_neg + 1; }
};

}  // namespace gammabnd
