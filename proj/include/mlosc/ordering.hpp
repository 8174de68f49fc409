#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlosc/errors.hpp"

namespace mlosc {

/// Absolute tolerance for the weight-sum and exponent-sum constraints.
inline constexpr double kOrderingTol = 1e-12;

/// One term w * m^alpha p m^beta p m^gamma of a kinetic-energy ordering.
/// The exponents must satisfy alpha + beta + gamma = -1.
struct OrderingTerm {
  double w;
  double alpha;
  double beta;
  double gamma;
};

/// A weighted list of ordering terms with sum(w) = 1.
struct Ordering {
  std::vector<OrderingTerm> terms;
  std::optional<std::string> name;
};

/// Weighted means that fully determine the reduced Schrodinger equation.
/// beta_bar is eliminated by the constraint and carries no field.
struct OrderingMeans {
  double alpha_bar;
  double gamma_bar;
  double alphagamma_bar;
};

enum class Hermiticity { Hermitian, NonHermitian };

/// Validates the constraints and returns the ordering.
/// Throws ConstraintViolation naming the offending term (or the weight sum).
Ordering make_ordering(std::vector<OrderingTerm> terms,
                       std::optional<std::string> name = std::nullopt);

OrderingMeans derived_means(const Ordering& ordering);

/// Hermitian iff alpha_bar == gamma_bar within kOrderingTol.
Hermiticity classify_hermiticity(const OrderingMeans& means);

/// Preset term lists: ben-daniel-duke, zhu-kroemer, mathews-lakshmanan,
/// carinena.  Weyl ordering is not representable as a term list and is
/// rejected as unknown.
Ordering named_scheme(std::string_view name);

std::vector<std::string> known_scheme_names();

}  // namespace mlosc
