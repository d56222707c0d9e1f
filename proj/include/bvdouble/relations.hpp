#pragma once

#include "bvdouble/scalars.hpp"

namespace bvdouble {

/**
 * Residuals of the A-infinity relations up to the pentagon, generic over the element type.
 *
 * Ops needs Q(x), mu(x, y) and nu(x, y, z); homotopy_commutativity also needs m(x, y).
 * Elements need degree(), +, - and multiplication by GaussRational.
 */
template <class Ops, class E>
E q_derivation_residual(const Ops& o, const E& a1, const E& a2) {
  return o.Q(o.mu(a1, a2)) - o.mu(o.Q(a1), a2) - o.mu(a1, o.Q(a2)) * sign(a1.degree());
}

template <class Ops, class E>
E homotopy_commutativity_residual(const Ops& o, const E& a1, const E& a2) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  E lhs = o.mu(a1, a2) - o.mu(a2, a1) * sign(d1 * d2);
  E rhs = o.Q(o.m(a1, a2)) + o.m(o.Q(a1), a2) + o.m(a1, o.Q(a2)) * sign(d1);
  return lhs - rhs;
}

template <class Ops, class E>
E homotopy_associativity_residual(const Ops& o, const E& a1, const E& a2, const E& a3) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  E lhs = o.mu(o.mu(a1, a2), a3) - o.mu(a1, o.mu(a2, a3));
  E rhs = o.Q(o.nu(a1, a2, a3)) + o.nu(o.Q(a1), a2, a3) + o.nu(a1, o.Q(a2), a3) * sign(d1) +
          o.nu(a1, a2, o.Q(a3)) * sign(d1 + d2);
  return lhs - rhs;
}

template <class Ops, class E>
E pentagon_residual(const Ops& o, const E& a1, const E& a2, const E& a3, const E& a4) {
  E lhs = o.mu(a1, o.nu(a2, a3, a4)) * sign(a1.degree()) + o.mu(o.nu(a1, a2, a3), a4);
  E rhs = o.nu(o.mu(a1, a2), a3, a4) - o.nu(a1, o.mu(a2, a3), a4) + o.nu(a1, a2, o.mu(a3, a4));
  return lhs - rhs;
}

/// Sum over (1,2)-shuffles of nu.
template <class Ops, class E>
E shuffle12_residual(const Ops& o, const E& a1, const E& a2, const E& a3) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  const int d3 = a3.degree();
  return o.nu(a1, a2, a3) - o.nu(a2, a1, a3) * sign(d1 * d2) + o.nu(a2, a3, a1) * sign(d1 * (d2 + d3));
}

/// Sum over (2,1)-shuffles of nu.
template <class Ops, class E>
E shuffle21_residual(const Ops& o, const E& a1, const E& a2, const E& a3) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  const int d3 = a3.degree();
  return o.nu(a1, a2, a3) - o.nu(a1, a3, a2) * sign(d2 * d3) + o.nu(a3, a1, a2) * sign(d3 * (d1 + d2));
}

}  // namespace bvdouble
