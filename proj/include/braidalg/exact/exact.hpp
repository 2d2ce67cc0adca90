#pragma once

#include "braidalg/exact/matrix.hpp"
#include "braidalg/exact/multipoly.hpp"
#include "braidalg/exact/parse.hpp"
#include "braidalg/exact/ratfunc.hpp"
#include "braidalg/exact/rational.hpp"
#include "braidalg/exact/ring.hpp"

namespace braidalg::exact {

using QMatrix = Matrix<Rational>;
using RMatrix = Matrix<RatFunc>;

}  // namespace braidalg::exact
