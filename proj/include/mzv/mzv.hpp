#pragma once

/// Umbrella header.

#include "mzv/bernoulli.hpp"
#include "mzv/blocked_series.hpp"
#include "mzv/closed_form.hpp"
#include "mzv/continuation.hpp"
#include "mzv/errors.hpp"
#include "mzv/gaussian_rational.hpp"
#include "mzv/index_combinatorics.hpp"
#include "mzv/multi_index.hpp"
#include "mzv/polynomial.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/raabe.hpp"
#include "mzv/rational.hpp"
#include "mzv/scalar.hpp"
