#ifndef SATAKE_KERNELS_HPP
#define SATAKE_KERNELS_HPP

#include "satake/lie.hpp"

// The Killing and Jacobi kernels in a serial reference version and an
// OpenMP version. Both produce identical results.
namespace satake::kernels {

Matrix killing_serial(const LieAlgebra& l);
Matrix killing_parallel(const LieAlgebra& l);

JacobiReport jacobi_serial(const LieAlgebra& l);
JacobiReport jacobi_parallel(const LieAlgebra& l);

/// Thread count used by the parallel kernels (SATAKE_THREADS or the OpenMP
/// default).
int thread_count();

}  // namespace satake::kernels

#endif  // SATAKE_KERNELS_HPP
