#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "ocnr/catalog.hpp"
#include "ocnr/oracle.hpp"
#include "ocnr/spectrum.hpp"

using namespace ocnr;

namespace {

constexpr double kPi = std::numbers::pi;

FiniteInstance three_level() {
  FiniteInstance inst;
  inst.a = ComplexMatrix(3, 3);
  inst.a(0, 0) = 3.0;
  inst.a(1, 1) = 2.0;
  inst.a(2, 2) = 1.0;
  inst.c = {1.0, 1.0, 0.0};
  return inst;
}

double unitary_defect(const ComplexMatrix& u) {
  const std::size_t n = u.rows();
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += std::conj(u(k, i)) * u(k, j);
      if (i == j) dot -= 1.0;
      defect += std::norm(dot);
    }
  return std::sqrt(defect);
}

}  // namespace

TEST_CASE("finite instance validation") {
  FiniteInstance bad;
  bad.a = ComplexMatrix(2, 3);
  bad.c = {1.0, 0.5};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad.a = ComplexMatrix(2, 2);
  bad.c = {1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad.c = {0.5, 1.0};  // increasing
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("haar orbit cloud is deterministic and confined to the range") {
  const FiniteInstance inst = three_level();
  const std::vector<Complex> cloud = haar_orbit_cloud(inst, 200, 9);
  REQUIRE(cloud.size() == 200);
  CHECK(haar_orbit_cloud(inst, 200, 9) == cloud);

  const std::vector<Complex> other = haar_orbit_cloud(inst, 200, 10);
  bool any_different = false;
  for (std::size_t i = 0; i < cloud.size(); ++i)
    any_different = any_different || cloud[i] != other[i];
  CHECK(any_different);

  // trace(X diag(3,2,1)) with diag(X) majorized by (1,1,0): real, in [3, 5]
  for (const Complex& z : cloud) {
    CHECK(std::abs(z.imag()) <= 1e-12);
    CHECK(z.real() >= 3.0 - 1e-9);
    CHECK(z.real() <= 5.0 + 1e-9);
  }

  FiniteInstance big;
  big.a = ComplexMatrix(13, 13);
  big.c.assign(13, 0.0);
  CHECK_THROWS_AS(haar_orbit_cloud(big, 1, 0), std::domain_error);
}

TEST_CASE("boundary maximizer realizes the sorted eigenvalue pairing") {
  const FiniteInstance inst = three_level();

  const BoundaryMaximizer fwd = boundary_maximizer(inst, 0.0);
  CHECK(fwd.value == doctest::Approx(5.0).epsilon(1e-12));
  const BoundaryMaximizer bwd = boundary_maximizer(inst, kPi);
  CHECK(bwd.value == doctest::Approx(-3.0).epsilon(1e-12));

  // the witness matrix is hermitian with trace(c) and achieves the value
  for (const BoundaryMaximizer* bm : {&fwd, &bwd}) {
    Complex tr = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      tr += bm->x(i, i);
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(std::abs(bm->x(i, j) - std::conj(bm->x(j, i))) <= 1e-12);
    }
    CHECK(std::abs(tr - Complex{2.0, 0.0}) <= 1e-12);
  }
  Complex txa = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) txa += fwd.x(i, k) * inst.a(k, i);
  CHECK(std::abs(txa.real() - fwd.value) <= 1e-12);

  // non-normal instance: the rotated hermitian part of [[0,2],[0,0]] always
  // has top eigenvalue 1, so the directional maximum is 1 in every direction
  FiniteInstance nil;
  nil.a = ComplexMatrix(2, 2);
  nil.a(0, 1) = 2.0;
  nil.c = {1.0, 0.0};
  for (double theta : {0.0, 0.7, kPi / 2, 2.0}) {
    CHECK(boundary_maximizer(nil, theta).value == doctest::Approx(1.0).epsilon(1e-12));
  }

  // the Haar cloud never beats the directional maximum
  const std::vector<Complex> cloud = haar_orbit_cloud(inst, 500, 3);
  for (double theta : {0.0, kPi / 3}) {
    const double best = boundary_maximizer(inst, theta).value;
    for (const Complex& z : cloud)
      CHECK((std::polar(1.0, -theta) * z).real() <= best + 1e-9);
  }
}

TEST_CASE("random majorized spectra are majorized") {
  const std::vector<double> c = {5.0, 3.0, 2.0, 1.0};
  const SpectrumSeq cs{std::vector<double>(c)};

  CHECK(random_majorized(c, 0, 1) == c);
  CHECK(random_majorized({2.0}, 10, 1) == std::vector<double>{2.0});

  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const std::vector<double> x = random_majorized(c, 25, seed);
    REQUIRE(x.size() == c.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sum += x[i];
      if (i > 0) CHECK(x[i] <= x[i - 1] + 1e-12);
    }
    CHECK(sum == doctest::Approx(11.0).epsilon(1e-12));
    CHECK(is_majorized(SpectrumSeq{std::vector<double>(x)}, cs).verdict == Tristate::yes);
  }
}

TEST_CASE("realize_value finds unitaries hitting boundary and interior targets") {
  const FiniteInstance inst = three_level();

  const Realization edge = realize_value(inst, {5.0, 0.0}, 2, 11);
  CHECK(edge.residual <= 1e-9);
  CHECK(std::abs(edge.achieved - Complex{5.0, 0.0}) <= 1e-9);
  CHECK(unitary_defect(edge.u) <= 1e-10);

  const Realization mid = realize_value(inst, {4.2, 0.0}, 6, 11);
  CHECK(mid.residual <= 1e-6);
  CHECK(std::abs(mid.achieved - Complex{4.2, 0.0}) <= 1e-6);
  CHECK(unitary_defect(mid.u) <= 1e-10);
}

TEST_CASE("dichotomy simulation: essential escape carries the trace gap into W_ess") {
  const CatalogEntry& e = catalog_entry("two-clusters");  // clusters +1, -1; c = (2, 1)

  OrbitSequencePlan plan;
  plan.assignments.resize(2);
  plan.assignments[0].escaping = false;  // weight 2 pinned on the +1 cluster
  plan.assignments[0].slot = {PlacementSlot::Kind::tail, 0, 1};
  plan.assignments[1].escaping = true;  // weight 1 rides the -1 cluster outward
  plan.assignments[1].family = 1;
  plan.assignments[1].offset = 0;

  const DichotomyReport rep = dichotomy_sim(e.model, e.spectrum, plan, 1024);
  CHECK(rep.branch == 2);
  CHECK(rep.escaping_mass == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(rep.weak_limit_trace - Complex{2.0, 0.0}) <= 1e-15);
  CHECK(std::abs(rep.gap - Complex{-1.0, 0.0}) <= 1e-15);
  // gap = escaping_mass * nu with nu = -1 in W_ess = [-1, 1]
  CHECK(rep.gap_distance <= 1e-12);
  REQUIRE(rep.samples.size() == 11);  // k = 1, 2, 4, ..., 512, 1024
  CHECK(rep.samples.front().first == 1);
  CHECK(rep.samples.back().first == 1024);
  for (const auto& [k, v] : rep.samples) CHECK(std::abs(v - Complex{1.0, 0.0}) <= 1e-15);
}

TEST_CASE("dichotomy simulation: zero escaping mass is trace-norm convergence") {
  const CatalogEntry& e = catalog_entry("two-clusters");
  const SpectrumSeq c({2.0, 1.0, 0.0});

  OrbitSequencePlan plan;
  plan.assignments.resize(3);
  plan.assignments[0].slot = {PlacementSlot::Kind::tail, 0, 1};
  plan.assignments[1].slot = {PlacementSlot::Kind::tail, 1, 1};
  plan.assignments[2].escaping = true;  // weight 0 escapes: nothing is lost
  plan.assignments[2].family = 0;
  plan.assignments[2].offset = 5;

  const DichotomyReport rep = dichotomy_sim(e.model, c, plan, 256);
  CHECK(rep.branch == 1);
  CHECK(rep.escaping_mass == 0.0);
  CHECK(std::abs(rep.weak_limit_trace - Complex{1.0, 0.0}) <= 1e-15);
  CHECK(std::abs(rep.gap) <= 1e-15);
  CHECK(rep.gap_distance <= 1e-12);
}

TEST_CASE("orbit plans are validated") {
  const CatalogEntry& e = catalog_entry("two-clusters");

  OrbitSequencePlan never;
  never.assignments.resize(2);
  never.assignments[0].slot = {PlacementSlot::Kind::tail, 0, 1};
  never.assignments[1].slot = {PlacementSlot::Kind::tail, 1, 1};
  CHECK_THROWS_AS(dichotomy_sim(e.model, e.spectrum, never, 16), std::domain_error);

  OrbitSequencePlan collide;
  collide.assignments.resize(2);
  collide.assignments[0].escaping = true;
  collide.assignments[0].family = 0;
  collide.assignments[0].offset = 2;
  collide.assignments[1].escaping = true;
  collide.assignments[1].family = 0;
  collide.assignments[1].offset = 2;
  CHECK_THROWS_AS(dichotomy_sim(e.model, e.spectrum, collide, 16), std::invalid_argument);

  OrbitSequencePlan cross;  // escaping entries would sweep over the pinned slot
  cross.assignments.resize(2);
  cross.assignments[0].slot = {PlacementSlot::Kind::tail, 0, 5};
  cross.assignments[1].escaping = true;
  cross.assignments[1].family = 0;
  cross.assignments[1].offset = 1;
  CHECK_THROWS_AS(dichotomy_sim(e.model, e.spectrum, cross, 16), std::invalid_argument);

  OrbitSequencePlan ok;
  ok.assignments.resize(1);
  ok.assignments[0].escaping = true;
  ok.assignments[0].family = 0;
  ok.assignments[0].offset = 0;
  const SpectrumSeq infinite({1.0}, GeometricTail{0.5, 0.5});
  CHECK_THROWS_AS(dichotomy_sim(e.model, infinite, ok, 16), std::domain_error);
  CHECK_THROWS_AS(dichotomy_sim(e.model, SpectrumSeq({1.0}), ok, 0), std::invalid_argument);
}

TEST_CASE("tail compression differences vanish exactly once the window is cleared") {
  const CatalogEntry& e = catalog_entry("two-clusters");  // 2 tail families, no block

  OrbitSequencePlan plan;
  plan.assignments.resize(2);
  plan.assignments[0].slot = {PlacementSlot::Kind::tail, 0, 1};
  plan.assignments[1].escaping = true;  // family 1 occupies coordinates 1, 3, 5, ...
  plan.assignments[1].family = 1;
  plan.assignments[1].offset = 0;

  const TailCompressionReport rep =
      tail_compression_check(e.model, e.spectrum, plan, /*window=*/5, /*k_max=*/16);
  CHECK(rep.disjoint_from == 3);  // entries at steps 1, 2 sit inside coordinates {1, 3}
  REQUIRE(rep.differences.size() == 6);  // k = 1, 2, 3, 4, 8, 16
  for (const auto& [k, diff] : rep.differences) {
    if (k < rep.disjoint_from) {
      CHECK(diff == doctest::Approx(1.0).epsilon(1e-15));
    } else {
      CHECK(diff == 0.0);  // exact, not merely small
    }
  }

  // with a block in front the window must clear the block coordinates too
  const CatalogEntry& mixed = catalog_entry("mixed-block-clusters");  // 4x4 block, 3 families
  OrbitSequencePlan mplan;
  mplan.assignments.resize(3);
  mplan.assignments[0].slot = {PlacementSlot::Kind::block, 0, 1};
  mplan.assignments[1].slot = {PlacementSlot::Kind::block, 1, 1};
  mplan.assignments[2].escaping = true;  // family 2 occupies 6, 9, 12, ...
  mplan.assignments[2].family = 2;
  mplan.assignments[2].offset = 0;
  const TailCompressionReport mrep =
      tail_compression_check(mixed.model, mixed.spectrum, mplan, /*window=*/12, /*k_max=*/8);
  CHECK(mrep.disjoint_from == 3);
  for (const auto& [k, diff] : mrep.differences) {
    if (k >= mrep.disjoint_from) CHECK(diff == 0.0);
    else CHECK(diff == doctest::Approx(0.5).epsilon(1e-15));
  }
}
