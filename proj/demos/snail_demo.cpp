// Walks one parameter triple through the library: shape, extrema, an
// extremal function and a membership test.
#include <cstdio>

#include "snail/classes.hpp"

int main() {
  using namespace snail;
  const SnailParams p = validate_params(-0.3, 0.6, 0.4);

  const DomainClass dc = classify_domain(p);
  std::printf("kind %s, shape %s\n", std::string(to_string(dc.kind)).c_str(),
              std::string(to_string(dc.shape)).c_str());

  const ReExtrema re = re_extrema(p);
  std::printf("Re L on the circle: [%.9f, %.9f] (%s)\n", *re.L0, *re.M0, re.branch.c_str());
  const ModulusExtrema m = modulus_extrema(p, 0.5);
  std::printf("|L| on |z| = 0.5: [%.9f, %.9f]\n", m.min_mod, m.max_mod);

  const Polyline pl = boundary_polyline(p, 8);
  for (const BoundaryPoint& b : pl.points) {
    std::printf("  theta %.4f  w = %+.6f %+.6fi\n", b.theta, b.u, b.v);
  }

  const ExtremalSpec psi{p, 1, ExtremalFamily::Psi};
  const CoveredRadius cr = covered_radius(psi);
  std::printf("Psi: -Psi(-1) = %.9f, min |Psi| on the circle = %.9f\n", cr.minus_f_minus_one,
              cr.boundary_min);

  const ClassSpec st{p, ClassKind::Starlike};
  if (class_admissible(st).admissible) {
    const MembershipVerdict v = membership(st, FunctionHandle::monomial(2, 0.1));
    const SubordinationVerdict s = subordination_check(st, FunctionHandle::monomial(2, 0.1));
    std::printf("z + 0.1 z^2: closed form %s (bound %.6f), oracle %s (margin %.3e)\n",
                v.member ? "member" : "not a member", v.bound, s.accepted ? "accepts" : "rejects",
                s.worst_margin);
  } else {
    std::printf("starlike class not admissible for this gamma\n");
  }
  return 0;
}
