#pragma once
// Umbrella header for the library (the CLI lives in wph/cli.hpp).

#include "arith.hpp"
#include "audit.hpp"
#include "error.hpp"
#include "gcd.hpp"
#include "height.hpp"
#include "local_height.hpp"
#include "point.hpp"
#include "scan.hpp"
#include "singular.hpp"
#include "subscheme.hpp"
#include "weights.hpp"
#include "wpoly.hpp"
