#pragma once

namespace qspec {

/// Numerical thresholds shared by all modules. Defaults are the documented ones.
struct Tolerances {
  double real = 1e-12;     ///< |Im q| below this collapses a sphere to a real point
  double sym = 1e-10;      ///< chi-image symmetry residual
  double sing = 1e-12;     ///< relative smallest singular value for invertibility
  double cluster = 1e-8;   ///< eigenvalue / eigen-angle grouping
  double spec = 1e-8;      ///< resolvent guard distance to the S-spectrum
  double quad = 1e-7;      ///< contour quadrature accuracy
  double psd = 1e-10;      ///< positive semidefiniteness slack
  double slice = 1e-9;     ///< even/odd checks of slice functions
};

inline constexpr Tolerances default_tolerances{};

}  // namespace qspec
