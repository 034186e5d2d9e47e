#pragma once

#include <vector>

#include "frieze/domain.hpp"
#include "frieze/frieze.hpp"

namespace frieze {

struct BoundData {
  Scalar P;  // max |d_i|
  Scalar M;  // min nonzero modulus of the domain
  int n;     // height, m - 3
  Scalar B;  // P^2 (P M + (n - 1) P^2 + M) / M^2
};

/// Cap on |q_i| for every frieze with boundary b over a domain of minimal
/// modulus M. Throws std::invalid_argument if M <= 0, or if P < 1 (scale the
/// boundary and domain by 1/P first; enumerate_friezes does this itself).
BoundData quiddity_bound(const BoundarySequence& b, const Scalar& M);

/// What enumerate_friezes actually searches: the boundary and domain after
/// scaling by `scale` (1 unless P < 1) and the bound on that search.
struct EnumerationPlan {
  Scalar scale;
  BoundarySequence boundary;
  DomainSpec domain;
  BoundData bound;
};

/// Throws std::invalid_argument if a boundary entry is outside the domain.
EnumerationPlan plan_enumeration(const BoundarySequence& b, const DomainSpec& d);

/// Every frieze with boundary b whose entries all lie in d without zero,
/// sorted. Depth-first over q_0, q_1, ... with each row extended as far as
/// the fixed quiddity entries allow and rejected on the first entry outside
/// the domain. Subtrees for different q_0 run as OpenMP tasks.
std::vector<FriezeMap> enumerate_friezes(const BoundarySequence& b, const DomainSpec& d);

/// Single-threaded reference for enumerate_friezes.
std::vector<FriezeMap> enumerate_friezes_serial(const BoundarySequence& b,
                                                const DomainSpec& d);

}  // namespace frieze
