#pragma once

#include <vector>

namespace ksync {

/// Eigenvalues of a symmetric n*n matrix (row-major), ascending.
///
/// Cyclic Jacobi rotations; sweeps continue until the off-diagonal Frobenius
/// norm drops below 1e-12. Robust for the symmetric matrices used here
/// (Laplacians up to a few hundred vertices); not meant for large n.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

}  // namespace ksync
