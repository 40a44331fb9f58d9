#pragma once

#include "hsum/bernoulli.hpp"
#include "hsum/closed_form.hpp"
#include "hsum/composition.hpp"
#include "hsum/expr.hpp"
#include "hsum/mhs.hpp"
#include "hsum/polynomial.hpp"
#include "hsum/rational.hpp"
#include "hsum/reducer.hpp"
#include "hsum/stuffle.hpp"
#include "hsum/sums.hpp"
#include "hsum/verify.hpp"
