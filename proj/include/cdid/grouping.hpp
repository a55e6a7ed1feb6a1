#pragma once

#include <cstddef>
#include <vector>

#include "cdid/config.hpp"
#include "cdid/field.hpp"
#include "cdid/tensor.hpp"

namespace cdid {

/// Stack of matched patches, dims [n1, n2, J], plus where each patch came from.
/// coords[ref_index] is the reference; the remaining entries follow in
/// (distance, raster) order.
struct PatchGroup {
  CTensor patches;
  std::vector<Coord> coords;
  std::vector<double> distances;  // Euclidean distance to the reference, per patch
  std::size_t ref_index = 0;

  std::size_t size() const noexcept { return coords.size(); }
};

/// Copy of the n1 x n2 block whose upper-left corner is (row, col).
CMatrix extract_patch(const ComplexField& f, std::size_t row, std::size_t col, std::size_t n1,
                      std::size_t n2);

/// sqrt(sum |p - q|^2).
double patch_distance(const CMatrix& p, const CMatrix& q);

/// Stacks the patches at `coords` into an [n1, n2, J] tensor.
CTensor gather_patches(const ComplexField& f, const std::vector<Coord>& coords, std::size_t n1,
                       std::size_t n2);

/// Block matching inside the clipped (2w+1)^2 window around the reference.
/// Keeps the reference plus the j_max - 1 nearest other candidates.
PatchGroup match_group(const ComplexField& f, std::size_t ref_row, std::size_t ref_col,
                       const FilterConfig& cfg);

/// Raster scan of reference corners with stride cfg.step; the last valid row
/// and column offsets are always included so every pixel is covered.
std::vector<Coord> reference_positions(std::size_t height, std::size_t width,
                                       const FilterConfig& cfg);

}  // namespace cdid
