#ifndef HEUNTRA_HEUNTRA_HPP
#define HEUNTRA_HEUNTRA_HPP

#include "heuntra/error.hpp"
#include "heuntra/special.hpp"
#include "heuntra/recursion_coeffs.hpp"
#include "heuntra/symmetric_eigen.hpp"
#include "heuntra/jacobi.hpp"
#include "heuntra/params.hpp"
#include "heuntra/system.hpp"
#include "heuntra/polynomials.hpp"
#include "heuntra/tridiag.hpp"
#include "heuntra/equivalence.hpp"
#include "heuntra/solver.hpp"

#endif  // HEUNTRA_HEUNTRA_HPP
