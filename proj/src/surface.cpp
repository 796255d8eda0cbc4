#include "emsurf/surface.hpp"

#include <stdexcept>

namespace emsurf {

int64_t FiberType::local_euler() const {
  switch (kind) {
    case Kind::In: return n;
    case Kind::InStar: return n + 6;
    case Kind::IVStar: return 8;
  }
  throw std::logic_error("unreachable fiber kind");
}

std::string FiberType::name() const {
  switch (kind) {
    case Kind::In: return "I" + std::to_string(n);
    case Kind::InStar: return "I" + std::to_string(n) + "*";
    case Kind::IVStar: return "IV*";
  }
  throw std::logic_error("unreachable fiber kind");
}

FiberConfiguration fiber_configuration(const CurveInvariants& ci) {
  if (ci.eps2 != 0)
    throw std::domain_error("fiber assignment requires eps2 = 0");
  FiberConfiguration fc;
  for (const Cusp& c : ci.cusps)
    fc.fibers.push_back({c.label, c.regular ? fiber_In(c.psl_width)
                                            : fiber_InStar(c.psl_width)});
  for (int64_t k = 0; k < ci.eps3; ++k)
    fc.fibers.push_back({"e" + std::to_string(k), fiber_IVStar()});
  return fc;
}

int64_t euler_number(const FiberConfiguration& fc) {
  int64_t e = 0;
  for (const Fiber& f : fc.fibers) e += f.type.local_euler();
  return e;
}

SurfaceInvariants surface_invariants(const CurveInvariants& ci,
                                     const FiberConfiguration& fc) {
  SurfaceInvariants si;
  si.euler = euler_number(fc);
  if (si.euler % 12 != 0)
    throw std::domain_error("Euler number " + std::to_string(si.euler) +
                            " is not divisible by 12; fiber typing is wrong");
  si.chi = si.euler / 12;
  si.q = ci.genus;
  si.p_g = si.chi - 1 + si.q;
  si.deg_l = si.chi;
  if (si.chi < 1 || si.p_g < 0)
    throw std::domain_error("inconsistent surface invariants: chi = " +
                            std::to_string(si.chi) +
                            ", p_g = " + std::to_string(si.p_g));
  return si;
}

std::string_view kodaira_class(const SurfaceInvariants& si) {
  if (si.chi == 1 && si.q == 0) return "rational";
  if (si.chi == 2 && si.q == 0) return "K3";
  return "properly elliptic";
}

}  // namespace emsurf
