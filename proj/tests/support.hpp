#pragma once

#include "bvdouble/scalars.hpp"
#include "doctest.h"

namespace bvtest {

using bvdouble::FourierScalar;
using bvdouble::GaussRational;
using bvdouble::Rational;

inline GaussRational q(long num, long den = 1) { return GaussRational(Rational(num, den)); }
inline GaussRational qi(long num, long den = 1) { return GaussRational(Rational(0), Rational(num, den)); }

inline FourierScalar mode(std::vector<int> k, GaussRational c = GaussRational(1)) {
  return FourierScalar::mode(k, c);
}

/// Runs body(rng, i) for n samples on a fixed stream.
template <class F>
void for_samples(int n, std::uint64_t seed, F&& body) {
  bvdouble::Rng rng(seed);
  for (int i = 0; i < n; ++i) body(rng, i);
}

}  // namespace bvtest
