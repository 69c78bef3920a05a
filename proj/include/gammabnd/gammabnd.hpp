#pragma once

#include "gammabnd/accum.hpp"
#include "gammabnd/boundary.hpp"
#include "gammabnd/contour.hpp"
#include "gammabnd/dirichlet.hpp"
#include "gammabnd/errors.hpp"
#include "gammabnd/gamma.hpp"
#include "gammabnd/halfplane.hpp"
#include "gammabnd/laurent.hpp"
#include "gammabnd/log_complex.hpp"
#include "gammabnd/parallel.hpp"
#include "gammabnd/parameters.hpp"
#include "gammabnd/series_eval.hpp"
#include "gammabnd/thresholds.hpp"
#include "gammabnd/verify.hpp"
#include "gammabnd/version.hpp"
