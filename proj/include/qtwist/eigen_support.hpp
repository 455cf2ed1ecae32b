#pragma once

#include <Eigen/Core>

#include "qtwist/ratfunc.hpp"

// Register the exact scalars with Eigen so dense matrices over them work
// with plain arithmetic (no decompositions are used on these types).
namespace Eigen {

template <>
struct NumTraits<qtwist::Rational> : GenericNumTraits<qtwist::Rational> {
  typedef qtwist::Rational Real;
  typedef qtwist::Rational NonInteger;
  typedef qtwist::Rational Nested;
  typedef qtwist::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qtwist::RatFunc> : GenericNumTraits<qtwist::RatFunc> {
  typedef qtwist::RatFunc Real;
  typedef qtwist::RatFunc NonInteger;
  typedef qtwist::RatFunc Nested;
  typedef qtwist::RatFunc Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 200,
    MulCost = 200
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qtwist {

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;
using MatF = Mat<RatFunc>;
using VecF = Vec<RatFunc>;

}  // namespace qtwist
