#pragma once

#include "cdid/field.hpp"

namespace cdid {

/// Itoh-style path unwrapping: down the first column, then along each row.
/// Every increment along the path lies in (-pi, pi]. Only reliable when true
/// neighbour steps stay below pi and the noise is moderate.
RealField unwrap_simple(const RealField& wrapped);

}  // namespace cdid
