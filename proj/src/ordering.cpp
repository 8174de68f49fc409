#include "mlosc/ordering.hpp"

#include <cmath>
#include <sstream>

namespace mlosc {

Ordering make_ordering(std::vector<OrderingTerm> terms,
                       std::optional<std::string> name) {
  if (terms.empty()) {
    throw ConstraintViolation(0, "non-empty", "ordering requires at least one term");
  }
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const OrderingTerm& t = terms[i];
    const double exponent_sum = t.alpha + t.beta + t.gamma;
    if (std::abs(exponent_sum + 1.0) > kOrderingTol) {
      std::ostringstream msg;
      msg << "term " << i << ": alpha+beta+gamma = " << exponent_sum
          << ", expected -1";
      throw ConstraintViolation(i, "exponent-sum", msg.str());
    }
    weight_sum += t.w;
  }
  if (std::abs(weight_sum - 1.0) > kOrderingTol) {
    std::ostringstream msg;
    msg << "weight sum = " << weight_sum << ", expected 1";
    throw ConstraintViolation(terms.size(), "weight-sum", msg.str());
  }
  return Ordering{std::move(terms), std::move(name)};
}

OrderingMeans derived_means(const Ordering& ordering) {
  OrderingMeans m{0.0, 0.0, 0.0};
  for (const OrderingTerm& t : ordering.terms) {
    m.alpha_bar += t.w * t.alpha;
    m.gamma_bar += t.w * t.gamma;
    m.alphagamma_bar += t.w * t.alpha * t.gamma;
  }
  return m;
}

Hermiticity classify_hermiticity(const OrderingMeans& means) {
  return std::abs(means.alpha_bar - means.gamma_bar) <= kOrderingTol
             ? Hermiticity::Hermitian
             : Hermiticity::NonHermitian;
}

Ordering named_scheme(std::string_view name) {
  if (name == "ben-daniel-duke") {
    return make_ordering({{1.0, 0.0, -1.0, 0.0}}, std::string(name));
  }
  if (name == "zhu-kroemer") {
    return make_ordering({{1.0, -0.5, 0.0, -0.5}}, std::string(name));
  }
  if (name == "mathews-lakshmanan") {
    return make_ordering({{0.5, 0.0, 0.0, -1.0}, {0.5, -1.0, 0.0, 0.0}},
                         std::string(name));
  }
  if (name == "carinena") {
    return make_ordering({{1.0, -0.5, -0.5, 0.0}}, std::string(name));
  }
  // Weyl ordering has no finite term list of this form; deliberately absent.
  throw UnknownScheme("unknown ordering scheme: " + std::string(name));
}

std::vector<std::string> known_scheme_names() {
  return {"ben-daniel-duke", "zhu-kroemer", "mathews-lakshmanan", "carinena"};
}

}  // namespace mlosc
