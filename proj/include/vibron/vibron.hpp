#ifndef VIBRON_VIBRON_HPP
#define VIBRON_VIBRON_HPP

#include "vibron/basis.hpp"
#include "vibron/coefficients.hpp"
#include "vibron/entanglement.hpp"
#include "vibron/fockspace.hpp"
#include "vibron/position.hpp"
#include "vibron/scan.hpp"
#include "vibron/solver.hpp"
#include "vibron/special.hpp"
#include "vibron/tridiag.hpp"
#include "vibron/variational.hpp"

#endif
