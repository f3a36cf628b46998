#pragma once

#include <stdexcept>
#include <string>

namespace cdwt {

// Thrown when a truncated series fails to meet its tolerance within the
// allowed number of terms.  Carries the partial sum so callers can still
// inspect how far the sum got.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& what, double partial, long terms)
      : std::runtime_error(what), partial_sum(partial), terms_used(terms) {}

  double partial_sum;
  long terms_used;
};

}  // namespace cdwt
