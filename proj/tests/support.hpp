#pragma once

// Seeded generators for property-style tests.

#include <random>
#include <vector>

#include "dseries/fps.hpp"
#include "dseries/scalar.hpp"

namespace dseries::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rat rat(long range = 9) {
    long den = integer(1, range);
    return Rat(integer(-range, range), den);
  }

  Rat nonzero_rat(long range = 9) {
    Rat r;
    while (r.is_zero()) r = rat(range);
    return r;
  }

  LPoly lpoly(int max_degree = 3) {
    std::vector<Rat> c;
    int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(rat());
    return LPoly(std::move(c));
  }

  LPoly nonzero_lpoly(int max_degree = 3) {
    LPoly p;
    while (p.is_zero()) p = lpoly(max_degree);
    return p;
  }

  Scalar scalar(Ring r) {
    switch (r) {
      case Ring::Q: return rat();
      case Ring::QL: return lpoly();
      case Ring::QLrat: return LRat::reduce(lpoly(2), nonzero_lpoly(2));
    }
    return Scalar();
  }

  Series series(std::size_t order, Ring r = Ring::Q) {
    std::vector<Scalar> c;
    for (std::size_t n = 0; n <= order; ++n) c.push_back(scalar(r).promoted(r));
    return Series(std::move(c), r);
  }

  // Constant term 1, random tail.
  Series unit_series(std::size_t order, Ring r = Ring::Q) {
    std::vector<Scalar> c = series(order, r).coeffs();
    c[0] = Scalar(1).promoted(r);
    return Series(std::move(c), r);
  }

  DeltaSeries delta(std::size_t order, Ring r = Ring::Q) {
    std::vector<Scalar> c = series(order, r).coeffs();
    c[0] = Scalar(0).promoted(r);
    c[1] = Scalar(nonzero_rat(4)).promoted(r);
    return DeltaSeries(Series(std::move(c), r));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace dseries::testing
