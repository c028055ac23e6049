#pragma once

#include "vlab/geom.hpp"
#include "vlab/sym_matrix.hpp"

namespace vlab {

struct EigenDecomposition {
    Vec values;  // nondecreasing
    Mat vectors; // column i pairs with values[i]

    double reconstruction_residual(const SymMatrix& X) const;
};

// Cyclic Jacobi sweeps. Stops when the off-diagonal Frobenius mass drops
// below 1e-14 * ||X||_F (hard cap 50 sweeps). Ties are broken by the stable
// order of the sweep, so equal eigenvalues keep a deterministic frame.
EigenDecomposition eigenvalues_sorted(const SymMatrix& X);

} // namespace vlab
