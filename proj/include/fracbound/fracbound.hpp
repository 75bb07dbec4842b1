#pragma once

#include "amconvex.hpp"
#include "bounds.hpp"
#include "error.hpp"
#include "fracint.hpp"
#include "harness/config.hpp"
#include "harness/sanity.hpp"
#include "harness/sweep.hpp"
#include "identity.hpp"
#include "kernel.hpp"
#include "quad.hpp"
#include "specfun.hpp"
