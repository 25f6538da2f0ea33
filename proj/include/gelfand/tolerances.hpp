#pragma once

namespace gelfand {

// Numeric policy, stated once. Construction-time checks use the 1e-9
// tolerance (absolute on eigenvalues, relative on residuals); classification
// and extraction checks use 1e-8 to absorb error growth through composition.
inline constexpr double kConstructionTol = 1e-9;
inline constexpr double kClassifyTol = 1e-8;
inline constexpr double kTriangleTol = 1e-7;

// Jacobi eigensolver: converged when the off-diagonal Frobenius norm drops
// below kJacobiTol * (1 + ||H||_F), within kJacobiMaxSweeps cyclic sweeps.
inline constexpr double kJacobiTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Dist entries are clamped to [0,1] inside this window at construction;
// entries extracted from PU maps or states get the wider window.
inline constexpr double kDistClampTol = 1e-12;
inline constexpr double kExtractionTol = 1e-8;

}  // namespace gelfand
