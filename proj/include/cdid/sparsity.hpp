#pragma once

#include <variant>

#include "cdid/config.hpp"
#include "cdid/grouping.hpp"
#include "cdid/hosvd.hpp"

namespace cdid {

/// Group representation: complex [n1,n2,J] for ComplexDomain, real
/// [n1,n2,J,2] for ReIm and AmPhase.
using DomainTensor = std::variant<CTensor, RTensor>;

/// HOSVD spectrum of one group in its sparsity domain, with the group's
/// coordinates carried along for aggregation.
struct GroupSpectrum {
  std::variant<HosvdFactors<cplx>, HosvdFactors<double>> factors;
  SparsityType sparsity = SparsityType::ComplexDomain;
  std::vector<Coord> coords;
  std::size_t ref_index = 0;
};

/// AmPhase slabs are (|u|, arg u) with arg in [-pi, pi) and arg(0) = 0.
DomainTensor to_domain(const CTensor& patches, SparsityType s);
DomainTensor to_domain(const PatchGroup& g, SparsityType s);

/// Inverse of to_domain. AmPhase amplitudes are clamped at zero before
/// recombining a*exp(j*phi).
CTensor from_domain(const DomainTensor& t, SparsityType s);
PatchGroup from_domain(const DomainTensor& t, SparsityType s, const PatchGroup& meta);

/// to_domain followed by hosvd.
GroupSpectrum analyze_group(const PatchGroup& g, SparsityType s);

/// hosvd_synthesis followed by from_domain.
PatchGroup synthesize_group(const GroupSpectrum& spec, std::size_t n1, std::size_t n2);

}  // namespace cdid
