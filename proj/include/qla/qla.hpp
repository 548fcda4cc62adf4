#pragma once

// Umbrella header: exact-arithmetic construction and verification of
// quadratic Lie superalgebras of basic type.

#include "qla/algebra.hpp"
#include "qla/build.hpp"
#include "qla/casimir.hpp"
#include "qla/cli.hpp"
#include "qla/decompose.hpp"
#include "qla/grading.hpp"
#include "qla/matrix.hpp"
#include "qla/rational.hpp"
#include "qla/roots.hpp"
#include "qla/verify.hpp"
