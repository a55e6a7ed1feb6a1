#include "cdid/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cdid {

namespace {

void check_fits(const ComplexField& f, std::size_t row, std::size_t col, std::size_t n1,
                std::size_t n2) {
  if (n1 == 0 || n2 == 0 || row + n1 > f.height() || col + n2 > f.width()) {
    throw std::out_of_range("patch at (" + std::to_string(row) + "," + std::to_string(col) +
                            ") of size " + std::to_string(n1) + "x" + std::to_string(n2) +
                            " does not fit a " + std::to_string(f.height()) + "x" +
                            std::to_string(f.width()) + " field");
  }
}

std::vector<std::size_t> axis_positions(std::size_t extent, std::size_t patch, std::size_t step) {
  std::vector<std::size_t> out;
  const std::size_t last = extent - patch;
  for (std::size_t p = 0; p <= last; p += step) out.push_back(p);
  if (out.back() != last) out.push_back(last);
  return out;
}

double squared_distance(const ComplexField& f, std::size_t r0, std::size_t c0, std::size_t r1,
                        std::size_t c1, std::size_t n1, std::size_t n2) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n1; ++i) {
    const cplx* a = &f(r0 + i, c0);
    const cplx* b = &f(r1 + i, c1);
    for (std::size_t j = 0; j < n2; ++j) {
      const double dr = a[j].real() - b[j].real();
      const double di = a[j].imag() - b[j].imag();
      acc += dr * dr + di * di;
    }
  }
  return acc;
}

struct Candidate {
  double d2;
  std::size_t raster;
  Coord at;
};

}  // namespace

CMatrix extract_patch(const ComplexField& f, std::size_t row, std::size_t col, std::size_t n1,
                      std::size_t n2) {
  check_fits(f, row, col, n1, n2);
  CMatrix p(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n2));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f(row + i, col + j);
    }
  }
  return p;
}

double patch_distance(const CMatrix& p, const CMatrix& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw std::invalid_argument("patch_distance: shape mismatch");
  }
  return (p - q).norm();
}

CTensor gather_patches(const ComplexField& f, const std::vector<Coord>& coords, std::size_t n1,
                       std::size_t n2) {
  CTensor t({n1, n2, coords.size()});
  auto dst = t.data();
  std::size_t k = 0;
  for (const auto& c : coords) {
    check_fits(f, c.row, c.col, n1, n2);
    // Tensor element (i, j, k) sits at i + n1*(j + n2*k).
    for (std::size_t j = 0; j < n2; ++j) {
      for (std::size_t i = 0; i < n1; ++i) dst[i + n1 * (j + n2 * k)] = f(c.row + i, c.col + j);
    }
    ++k;
  }
  return t;
}

PatchGroup match_group(const ComplexField& f, std::size_t ref_row, std::size_t ref_col,
                       const FilterConfig& cfg) {
  const std::size_t n1 = cfg.n1;
  const std::size_t n2 = cfg.n2;
  check_fits(f, ref_row, ref_col, n1, n2);
  const std::size_t w = cfg.search_radius();
  const std::size_t r_lo = ref_row > w ? ref_row - w : 0;
  const std::size_t c_lo = ref_col > w ? ref_col - w : 0;
  const std::size_t r_hi = std::min(ref_row + w, f.height() - n1);
  const std::size_t c_hi = std::min(ref_col + w, f.width() - n2);

  std::vector<Candidate> cands;
  cands.reserve((r_hi - r_lo + 1) * (c_hi - c_lo + 1));
  for (std::size_t r = r_lo; r <= r_hi; ++r) {
    for (std::size_t c = c_lo; c <= c_hi; ++c) {
      if (r == ref_row && c == ref_col) continue;
      cands.push_back({squared_distance(f, ref_row, ref_col, r, c, n1, n2), r * f.width() + c, {r, c}});
    }
  }

  const std::size_t keep = std::min(cfg.j_max - 1, cands.size());
  auto before = [](const Candidate& a, const Candidate& b) {
    return a.d2 < b.d2 || (a.d2 == b.d2 && a.raster < b.raster);
  };
  std::partial_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(keep), cands.end(),
                    before);

  PatchGroup g;
  g.ref_index = 0;
  g.coords.reserve(keep + 1);
  g.distances.reserve(keep + 1);
  g.coords.push_back({ref_row, ref_col});
  g.distances.push_back(0.0);
  for (std::size_t i = 0; i < keep; ++i) {
    g.coords.push_back(cands[i].at);
    g.distances.push_back(std::sqrt(cands[i].d2));
  }
  g.patches = gather_patches(f, g.coords, n1, n2);
  return g;
}

std::vector<Coord> reference_positions(std::size_t height, std::size_t width,
                                       const FilterConfig& cfg) {
  if (height < cfg.n1 || width < cfg.n2) {
    throw std::invalid_argument("field is smaller than the patch size");
  }
  if (cfg.step == 0) throw std::invalid_argument("step must be positive");
  const auto rows = axis_positions(height, cfg.n1, cfg.step);
  const auto cols = axis_positions(width, cfg.n2, cfg.step);
  std::vector<Coord> out;
  out.reserve(rows.size() * cols.size());
  for (auto r : rows) {
    for (auto c : cols) out.push_back({r, c});
  }
  return out;
}

}  // namespace cdid
