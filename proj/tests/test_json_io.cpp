#include <doctest.h>

#include "mlosc/json_io.hpp"

using namespace mlosc;

TEST_CASE("ordering JSON round-trip preserves terms and name") {
  const Ordering original = named_scheme("mathews-lakshmanan");
  const Ordering restored = ordering_from_json(ordering_to_json(original));
  REQUIRE(restored.terms.size() == original.terms.size());
  for (std::size_t i = 0; i < original.terms.size(); ++i) {
    CHECK(restored.terms[i].w == original.terms[i].w);
    CHECK(restored.terms[i].alpha == original.terms[i].alpha);
    CHECK(restored.terms[i].beta == original.terms[i].beta);
    CHECK(restored.terms[i].gamma == original.terms[i].gamma);
  }
  CHECK(restored.name == original.name);

  const OrderingMeans a = derived_means(original);
  const OrderingMeans b = derived_means(restored);
  CHECK(a.alpha_bar == b.alpha_bar);
  CHECK(a.gamma_bar == b.gamma_bar);
  CHECK(a.alphagamma_bar == b.alphagamma_bar);
}

TEST_CASE("ordering ingestion validates the constraints") {
  const nlohmann::json bad{
      {"terms", {{{"w", 1.0}, {"alpha", 0.0}, {"beta", 0.0}, {"gamma", 0.0}}}}};
  CHECK_THROWS_AS(ordering_from_json(bad), ConstraintViolation);
}

TEST_CASE("params JSON round-trip") {
  const OscillatorParams p(2.5, -1.0, 0.5);
  const OscillatorParams q = params_from_json(params_to_json(p));
  CHECK(q.k == p.k);
  CHECK(q.lambda == p.lambda);
  CHECK(q.hbar == p.hbar);
}

TEST_CASE("spectrum serialization carries the schema fields") {
  const OscillatorParams p(25.0, -1.0, 1.0);
  const nlohmann::json j =
      spectrum_to_json(bound_spectrum_negative(p, OrderingMeans{-0.5, -0.5, 0.0}));
  CHECK(j["regime"] == "negative-lambda");
  CHECK(j["finite"] == true);
  CHECK(j["n_max"] == 4);
  CHECK(j["mu"].get<double>() == doctest::Approx(5.0));
  CHECK(j["d_tilde"].get<double>() == doctest::Approx(5.0));
  REQUIRE(j["levels"].size() == 5);
  CHECK(j["levels"][0]["n"] == 0);
  CHECK(j["levels"][0]["nu"].get<double>() == doctest::Approx(-5.0));
  CHECK(j["levels"][0]["E"].get<double>() == doctest::Approx(2.0));

  // The harmonic regime has no Legendre degree: nu serializes as null.
  const nlohmann::json h =
      spectrum_to_json(harmonic_spectrum(OscillatorParams(1.0, 0.0, 1.0), 1));
  CHECK(h["levels"][0]["nu"].is_null());
  CHECK(h["mu"].is_null());
}

TEST_CASE("report serialization mirrors the struct") {
  const VerificationReport report =
      make_report("demo", 0.5, 1.0, {{"detail", 2.0}});
  const nlohmann::json j = report_to_json(report);
  CHECK(j["check_name"] == "demo");
  CHECK(j["max_error"] == 0.5);
  CHECK(j["tolerance"] == 1.0);
  CHECK(j["passed"] == true);
  CHECK(j["details"]["detail"] == 2.0);
}
