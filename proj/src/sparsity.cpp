#include "cdid/sparsity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdid/sim/wrap.hpp"

namespace cdid {

DomainTensor to_domain(const CTensor& patches, SparsityType s) {
  if (patches.order() != 3) throw std::invalid_argument("to_domain: expected an order-3 group");
  if (s == SparsityType::ComplexDomain) return patches;

  const auto& d = patches.dims();
  RTensor out({d[0], d[1], d[2], 2});
  const std::size_t n = patches.size();
  auto src = patches.data();
  auto dst = out.data();
  if (s == SparsityType::ReIm) {
    for (std::size_t i = 0; i < n; ++i) {
      dst[i] = src[i].real();
      dst[n + i] = src[i].imag();
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(src[i]);
      dst[i] = a;
      dst[n + i] = a == 0.0 ? 0.0 : wrap(std::arg(src[i]));
    }
  }
  return out;
}

DomainTensor to_domain(const PatchGroup& g, SparsityType s) { return to_domain(g.patches, s); }

CTensor from_domain(const DomainTensor& t, SparsityType s) {
  if (s == SparsityType::ComplexDomain) {
    const auto* c = std::get_if<CTensor>(&t);
    if (c == nullptr || c->order() != 3) {
      throw std::invalid_argument("from_domain: complex sparsity needs an order-3 complex tensor");
    }
    return *c;
  }
  const auto* r = std::get_if<RTensor>(&t);
  if (r == nullptr || r->order() != 4 || r->dim(3) != 2) {
    throw std::invalid_argument("from_domain: real sparsity needs an [n1,n2,J,2] real tensor");
  }
  const auto& d = r->dims();
  CTensor out({d[0], d[1], d[2]});
  const std::size_t n = out.size();
  auto src = r->data();
  auto dst = out.data();
  if (s == SparsityType::ReIm) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = cplx(src[i], src[n + i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) dst[i] = std::polar(std::max(src[i], 0.0), src[n + i]);
  }
  return out;
}

PatchGroup from_domain(const DomainTensor& t, SparsityType s, const PatchGroup& meta) {
  PatchGroup g;
  g.patches = from_domain(t, s);
  if (g.patches.dim(2) != meta.coords.size()) {
    throw std::invalid_argument("from_domain: group length does not match coordinates");
  }
  g.coords = meta.coords;
  g.distances = meta.distances;
  g.ref_index = meta.ref_index;
  return g;
}

GroupSpectrum analyze_group(const PatchGroup& g, SparsityType s) {
  GroupSpectrum out;
  out.sparsity = s;
  out.coords = g.coords;
  out.ref_index = g.ref_index;
  auto dom = to_domain(g, s);
  if (auto* c = std::get_if<CTensor>(&dom)) {
    out.factors = hosvd(*c);
  } else {
    out.factors = hosvd(std::get<RTensor>(dom));
  }
  return out;
}

PatchGroup synthesize_group(const GroupSpectrum& spec, std::size_t n1, std::size_t n2) {
  DomainTensor dom = std::visit(
      [](const auto& f) -> DomainTensor { return hosvd_synthesis(f); }, spec.factors);
  PatchGroup g;
  g.patches = from_domain(dom, spec.sparsity);
  if (g.patches.dim(0) != n1 || g.patches.dim(1) != n2 || g.patches.dim(2) != spec.coords.size()) {
    throw std::invalid_argument("synthesize_group: spectrum dims do not match the group");
  }
  g.coords = spec.coords;
  g.ref_index = spec.ref_index;
  return g;
}

}  // namespace cdid
