#pragma once

#include "aledg/adapt.hpp"
#include "aledg/basis.hpp"
#include "aledg/errors.hpp"
#include "aledg/euler.hpp"
#include "aledg/flux.hpp"
#include "aledg/harness.hpp"
#include "aledg/io.hpp"
#include "aledg/limiter.hpp"
#include "aledg/mesh.hpp"
#include "aledg/motion.hpp"
#include "aledg/predictor.hpp"
#include "aledg/problems.hpp"
#include "aledg/riemann.hpp"
#include "aledg/solver.hpp"
#include "aledg/update.hpp"
