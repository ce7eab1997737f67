#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bse/beam_splitter.hpp"
#include "bse/states.hpp"
#include "bse/verify.hpp"

using namespace bse;

TEST_SUITE_BEGIN("beam_splitter");

TEST_CASE("parameter construction keeps R^2 + T^2 = 1") {
  for (double r : {0.0, 0.05, 0.3, 0.9, 1.0}) {
    const BeamSplitterParams p = BeamSplitterParams::from_reflectivity(r, 0.4);
    CHECK(p.reflectivity() == doctest::Approx(r).epsilon(1e-14));
    CHECK(p.reflectivity() * p.reflectivity() + p.transmission() * p.transmission() ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(BeamSplitterParams::from_reflectivity(-0.1), std::domain_error);
  CHECK_THROWS_AS(BeamSplitterParams::from_reflectivity(1.5), std::domain_error);
  CHECK_THROWS_AS(BeamSplitterParams(-0.1), std::domain_error);
  CHECK(weak_regime(BeamSplitterParams::from_reflectivity(0.1)));
  CHECK_FALSE(weak_regime(BeamSplitterParams::from_reflectivity(0.5)));
}

TEST_CASE("fock matrix elements") {
  const BeamSplitterParams p = BeamSplitterParams::from_reflectivity(0.3, 0.9);
  CHECK(bs_coefficient(0, 0, p) == Complex{1.0, 0.0});
  CHECK(std::abs(bs_coefficient(1, 0, p) - Complex{p.transmission(), 0.0}) <= 1e-15);
  CHECK(std::abs(bs_coefficient(1, 1, p) - std::polar(0.3, 0.9)) <= 1e-15);
  CHECK_THROWS_AS(bs_coefficient(2, 3, p), std::domain_error);
  CHECK_THROWS_AS(bs_coefficient(2, -1, p), std::domain_error);
}

TEST_CASE("matrix elements of one photon level resolve the identity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> theta(0.0, std::acos(-1.0));
  std::uniform_real_distribution<double> phi(0.0, 6.28);
  for (int trial = 0; trial < 25; ++trial) {
    const BeamSplitterParams p(theta(rng), phi(rng));
    double total = 0.0;
    for (int k = 0; k <= 7; ++k) total += std::norm(bs_coefficient(7, k, p));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("single photon on a balanced splitter") {
  const BeamSplitterParams p(std::acos(-1.0) / 2.0, 0.0);  // T = R = 1/sqrt(2)
  const TwoModeState out = apply_bs_exact(make_fock(1), p);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(out.amplitude(0, 1) - Complex{inv_sqrt2, 0.0}) <= 1e-15);
  CHECK(std::abs(out.amplitude(1, 0) - Complex{inv_sqrt2, 0.0}) <= 1e-15);
}

TEST_CASE("vacuum is invariant") {
  const TwoModeState out =
      apply_bs_exact(make_fock(0), BeamSplitterParams::from_reflectivity(0.3, 1.1));
  CHECK(out.amplitude(0, 0) == Complex{1.0, 0.0});
  CHECK(out.squared_norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("two photons split into the three expected amplitudes") {
  const double r = 0.35, phi = 0.8;
  const BeamSplitterParams p = BeamSplitterParams::from_reflectivity(r, phi);
  const double t = p.transmission();
  const TwoModeState out = apply_bs_exact(make_fock(2), p);
  CHECK(std::abs(out.amplitude(0, 2) - Complex{t * t, 0.0}) <= 1e-14);
  CHECK(std::abs(out.amplitude(1, 1) - std::sqrt(2.0) * std::polar(r * t, phi)) <= 1e-14);
  CHECK(std::abs(out.amplitude(2, 0) - std::polar(r * r, 2.0 * phi)) <= 1e-14);
}

TEST_CASE("the splitter is unitary on a state corpus") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> theta(0.0, std::acos(-1.0));
  std::vector<SingleModeState> corpus{make_fock(7), make_coherent({Complex{1.3, 0.4}}),
                                      make_even_cat({Complex{1.1, 0.0}}),
                                      make_squeezed_vacuum({0.8, 0.3})};
  for (int i = 0; i < 10; ++i) corpus.push_back(random_state(rng, 35));
  for (const SingleModeState& psi : corpus) {
    const BeamSplitterParams p(theta(rng), 0.77);
    CHECK(std::abs(apply_bs_exact(psi, p).squared_norm() - psi.squared_norm()) <= 1e-12);
  }
}

TEST_CASE("photon number is conserved exactly") {
  const BeamSplitterParams p = BeamSplitterParams::from_reflectivity(0.4, 0.2);
  for (int n : {0, 1, 4, 9}) {
    const TwoModeState out = apply_bs_exact(make_fock(n), p);
    for (int k = 0; k <= out.k_max(); ++k)
      for (int m = 0; m <= out.m_max(); ++m)
        if (k + m != n) CHECK(out.amplitude(k, m) == Complex{0.0, 0.0});
  }
}

TEST_CASE("weak split of a number state") {
  const int n = 4;
  const BeamSplitterParams p = BeamSplitterParams::from_reflectivity(0.08, 0.5);
  const double t = p.transmission();
  const WeakSplitResult w = weak_split(make_fock(n), p);

  CHECK(std::abs(w.u.amplitude(n) - Complex{std::pow(t, n), 0.0}) <= 1e-14);
  for (int i = 0; i < n; ++i) CHECK(w.u.amplitude(i) == Complex{0.0, 0.0});
  CHECK(std::abs(w.v.amplitude(n - 1) - Complex{std::sqrt(4.0) * std::pow(t, n - 1), 0.0}) <=
        1e-14);
  CHECK(w.mu == doctest::Approx(std::pow(t, n)).epsilon(1e-14));
  CHECK(w.nu == doctest::Approx(2.0 * std::pow(t, n - 1)).epsilon(1e-14));
  CHECK_FALSE(w.u.is_normalized());
  CHECK_FALSE(w.v.is_normalized());
}

TEST_CASE("weak split of an even cat gives transmission-scaled cats") {
  const Complex alpha{1.4, 0.0};
  const BeamSplitterParams p = BeamSplitterParams::from_reflectivity(0.1, 0.0);
  const Complex t_alpha = p.transmission() * alpha;
  const WeakSplitResult w = weak_split(make_even_cat({alpha}), p);

  const SingleModeState even_scaled = make_even_cat({t_alpha});
  for (int nn = 0; nn <= w.u.n_max(); ++nn)
    CHECK(std::abs(w.u.amplitude(nn) / w.mu - even_scaled.amplitude(nn)) <= 1e-10);

  const SingleModeState odd_scaled = make_odd_cat({t_alpha});
  for (int nn = 0; nn <= w.v.n_max(); ++nn)
    CHECK(std::abs(w.v.amplitude(nn) / w.nu - odd_scaled.amplitude(nn)) <= 1e-10);
}

TEST_CASE("weak split of the vacuum") {
  const WeakSplitResult w =
      weak_split(make_fock(0), BeamSplitterParams::from_reflectivity(0.1, 0.0));
  CHECK(w.u.amplitude(0) == Complex{1.0, 0.0});
  CHECK(w.v.squared_norm() == 0.0);
  CHECK(w.nu == 0.0);
  CHECK(w.mu == 1.0);
}

TEST_CASE("mu and nu are the norms of u and v") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const WeakSplitResult w = weak_split(random_state(rng, 20),
                                         BeamSplitterParams::from_reflectivity(0.12, 1.3));
    CHECK(std::abs(w.mu - w.u.norm()) <= 1e-12);
    CHECK(std::abs(w.nu - w.v.norm()) <= 1e-12);
  }
}

TEST_CASE("exact output restricted to one weak photon matches the split") {
  const BeamSplitterParams p = BeamSplitterParams::from_reflectivity(0.07, 0.9);
  const SingleModeState psi = make_coherent({Complex{1.2, 0.5}});
  const TwoModeState exact = apply_bs_exact(psi, p);
  const WeakSplitResult w = weak_split(psi, p);
  const Complex one_photon_prefactor = std::polar(p.reflectivity(), p.phi());
  for (int m = 0; m <= exact.m_max(); ++m) {
    CHECK(std::abs(exact.amplitude(0, m) - w.u.amplitude(m)) <= 1e-13);
    CHECK(std::abs(exact.amplitude(1, m) - one_photon_prefactor * w.v.amplitude(m)) <= 1e-13);
  }
}

TEST_CASE("residual of zero- and one-photon inputs vanishes") {
  const BeamSplitterParams p = BeamSplitterParams::from_reflectivity(0.2, 0.0);
  CHECK(truncation_residual(make_fock(0), p) == 0.0);
  CHECK(truncation_residual(make_fock(1), p) == 0.0);
}

TEST_CASE("residual of |5> scales as the fourth power of reflectivity") {
  std::vector<std::pair<double, double>> points;
  for (double r : {0.1, 0.05, 0.025})
    points.emplace_back(r,
                        truncation_residual(make_fock(5), BeamSplitterParams::from_reflectivity(r)));
  const double slope = log_log_slope(points);
  CHECK(slope == doctest::Approx(4.0).epsilon(0.03));
}

TEST_CASE("weak-port probability bookkeeping closes") {
  std::mt19937_64 rng(17);
  std::vector<SingleModeState> corpus{make_fock(3), make_coherent({Complex{1.0, 0.0}}),
                                      make_even_cat({Complex{1.2, 0.0}}),
                                      make_squeezed_vacuum({0.8, 0.0})};
  for (int i = 0; i < 10; ++i) corpus.push_back(random_state(rng, 25));
  for (const SingleModeState& psi : corpus) {
    const BeamSplitterParams p = BeamSplitterParams::from_reflectivity(0.09, 0.4);
    const WeakSplitResult w = weak_split(psi, p);
    const double r = p.reflectivity();
    const double total = w.mu * w.mu + r * r * w.nu * w.nu + truncation_residual(psi, p);
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_SUITE_END();
