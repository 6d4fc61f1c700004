#pragma once

// Umbrella header for the exact Hopf/group-algebra workbench.

#include "grouplike_kit/error.hpp"
#include "grouplike_kit/exp_lie.hpp"
#include "grouplike_kit/fdalgebra.hpp"
#include "grouplike_kit/group_algebra.hpp"
#include "grouplike_kit/group_spec.hpp"
#include "grouplike_kit/hopf.hpp"
#include "grouplike_kit/linalg.hpp"
#include "grouplike_kit/matrix.hpp"
#include "grouplike_kit/poly.hpp"
#include "grouplike_kit/quotient_ring.hpp"
#include "grouplike_kit/roots.hpp"
#include "grouplike_kit/scalar.hpp"
#include "grouplike_kit/serialize.hpp"
#include "grouplike_kit/spectrum.hpp"
#include "grouplike_kit/standard_algebras.hpp"
#include "grouplike_kit/verify_suites.hpp"
