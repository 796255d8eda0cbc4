#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "emsurf/curve.hpp"

namespace emsurf {

// Kodaira type of a singular fiber of the elliptic modular surface.
// Local Euler numbers: e(I_n) = n, e(I_n*) = n + 6, e(IV*) = 8.
struct FiberType {
  enum class Kind { In, InStar, IVStar };
  Kind kind = Kind::In;
  int64_t n = 1;  // multiplicity parameter; ignored for IV*

  int64_t local_euler() const;
  std::string name() const;  // "I4", "I1*", "IV*"
  bool operator==(const FiberType&) const = default;
};

inline FiberType fiber_In(int64_t n) { return {FiberType::Kind::In, n}; }
inline FiberType fiber_InStar(int64_t n) { return {FiberType::Kind::InStar, n}; }
inline FiberType fiber_IVStar() { return {FiberType::Kind::IVStar, 0}; }

// One singular fiber per cusp and per order-3 elliptic point.
struct Fiber {
  std::string base;  // cusp label, or "e0", "e1", ... for elliptic points
  FiberType type;
};

struct FiberConfiguration {
  std::vector<Fiber> fibers;
};

struct SurfaceInvariants {
  int64_t euler = 0;  // topological Euler number, = 12*chi
  int64_t chi = 0;    // holomorphic Euler characteristic chi(O)
  int64_t q = 0;      // irregularity, = genus of the base curve
  int64_t p_g = 0;    // geometric genus, = chi - 1 + q
  int64_t deg_l = 0;  // degree of the fundamental line bundle, = chi
};

// Regular cusp of width h -> I_h; irregular cusp of width h -> I_h*;
// order-3 elliptic point -> IV*.
FiberConfiguration fiber_configuration(const CurveInvariants& ci);

int64_t euler_number(const FiberConfiguration& fc);

// chi = e/12; throws if 12 does not divide e (a wrong fiber assignment
// would trip exactly here).
SurfaceInvariants surface_invariants(const CurveInvariants& ci,
                                     const FiberConfiguration& fc);

// Informative label from (chi, q): rational / K3 / properly elliptic.
std::string_view kodaira_class(const SurfaceInvariants& si);

}  // namespace emsurf
