#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "qspec/error.hpp"
#include "qspec/qmatrix.hpp"

namespace qspec::test {

inline constexpr double kPi = std::numbers::pi;

inline double dist(const Quaternion& a, const Quaternion& b) { return (a - b).abs(); }
inline double dist(const QMatrix& a, const QMatrix& b) { return (a - b).frobenius(); }
inline double dist(const CMatrix& a, const CMatrix& b) { return (a - b).norm(); }

/// Kind of the qspec::Error thrown by f; fails the test if nothing is thrown.
inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Domain;
}

inline Quaternion cis(double t) { return {std::cos(t), std::sin(t), 0.0, 0.0}; }

}  // namespace qspec::test
