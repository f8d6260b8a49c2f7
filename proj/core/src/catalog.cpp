#include "ocnr/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ocnr {

namespace {

TailEntryFamily exact_cluster(Complex value) {
  TailEntryFamily f;
  f.value = value;
  f.mode = TailMode::exact;
  return f;
}

TailEntryFamily approach(Complex value, Complex direction, TailLaw law, double scale,
                         double ratio = 0.5) {
  TailEntryFamily f;
  f.value = value;
  f.mode = TailMode::approach;
  f.direction = direction / std::abs(direction);
  f.law = law;
  f.scale = scale;
  f.ratio = ratio;
  return f;
}

ComplexMatrix block2(Complex a11, Complex a12, Complex a21, Complex a22) {
  ComplexMatrix m(2, 2);
  m(0, 0) = a11;
  m(0, 1) = a12;
  m(1, 0) = a21;
  m(1, 1) = a22;
  return m;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.name = "three-step";
    e.description = "selfadjoint block diag(3,2,1) with a zero cluster, c = (1,1)";
    e.model.finite_block = ComplexMatrix::diag(std::vector<double>{3.0, 2.0, 1.0});
    e.model.tail = {exact_cluster(0.0)};
    e.spectrum = SpectrumSeq({1.0, 1.0});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "nilpotent-disk";
    e.description = "nilpotent 2x2 block over a zero cluster; the range is a disk";
    e.model.finite_block = block2(0.0, 2.0, 0.0, 0.0);
    e.model.tail = {exact_cluster(0.0)};
    e.spectrum = SpectrumSeq({1.0});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "two-clusters";
    e.description = "purely essential model with clusters at +1 and -1, c = (2,1)";
    e.model.finite_block = ComplexMatrix(0, 0);
    e.model.tail = {exact_cluster(1.0), exact_cluster(-1.0)};
    e.spectrum = SpectrumSeq({2.0, 1.0});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "mixed-block-clusters";
    e.description = "non-normal 4x4 block with three clusters, c = (1.5,1,0.5)";
    ComplexMatrix m(4, 4);
    const Complex rows[4][4] = {
        {{0.31, 0.52}, {-0.41, 0.17}, {0.05, -0.33}, {0.27, 0.04}},
        {{0.12, -0.61}, {-0.22, 0.08}, {0.44, 0.29}, {-0.15, 0.36}},
        {{-0.53, 0.11}, {0.33, -0.27}, {0.18, 0.40}, {0.21, -0.09}},
        {{0.07, 0.23}, {-0.19, -0.45}, {0.56, 0.02}, {-0.34, 0.13}},
    };
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    e.model.finite_block = m;
    e.model.tail = {exact_cluster(1.0), exact_cluster(-1.0), exact_cluster(Complex{0.0, 1.0})};
    e.spectrum = SpectrumSeq({1.5, 1.0, 0.5});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "split-harmonic";
    e.description =
        "block diag(1,-1) with harmonic tails into 0 from both sides; "
        "c geometric with ratio 1/2 gives endpoints at +/- log 2";
    e.model.finite_block = ComplexMatrix::diag(std::vector<double>{1.0, -1.0});
    e.model.tail = {approach(0.0, 1.0, TailLaw::harmonic, 1.0),
                    approach(0.0, -1.0, TailLaw::harmonic, 1.0)};
    e.spectrum = SpectrumSeq({}, GeometricTail{1.0, 0.5});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "closed-pair";
    e.description = "block diag(2,-2) over clusters at +/- 1; the range is closed";
    e.model.finite_block = ComplexMatrix::diag(std::vector<double>{2.0, -2.0});
    e.model.tail = {exact_cluster(1.0), exact_cluster(-1.0)};
    e.spectrum = SpectrumSeq({1.0});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "approach-below";
    e.description =
        "zero block under a cluster approached strictly from below; "
        "the supremum direction is never attained, the range is not closed";
    e.model.finite_block = ComplexMatrix::diag(std::vector<double>{0.0});
    e.model.tail = {approach(1.0, -1.0, TailLaw::harmonic, 0.5)};
    e.spectrum = SpectrumSeq({1.0});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "geometric-drift";
    e.description =
        "non-selfadjoint block, a geometric approach family along e^{i pi/4} "
        "and an off-axis cluster; c has a geometric tail";
    e.model.finite_block = block2({0.8, 0.0}, {0.3, 0.1}, {-0.1, 0.2}, {-0.5, 0.0});
    e.model.tail = {approach(Complex{0.0, 1.0}, std::polar(1.0, std::numbers::pi / 4.0),
                             TailLaw::geometric, 0.7, 0.6),
                    exact_cluster(Complex{-0.5, -0.3})};
    e.spectrum = SpectrumSeq({1.2, 0.8}, GeometricTail{0.5, 0.4});
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  throw std::out_of_range("catalog: no model named '" + name + "'");
}

}  // namespace ocnr
