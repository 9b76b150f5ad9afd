#ifndef ZONEST_ZONEST_HPP_
#define ZONEST_ZONEST_HPP_

#include "zonest/config.hpp"
#include "zonest/errors.hpp"
#include "zonest/expr.hpp"
#include "zonest/filter.hpp"
#include "zonest/interval.hpp"
#include "zonest/io.hpp"
#include "zonest/lp.hpp"
#include "zonest/mixmono.hpp"
#include "zonest/model.hpp"
#include "zonest/rng.hpp"
#include "zonest/runner.hpp"
#include "zonest/scenario.hpp"
#include "zonest/sets.hpp"

#endif  // ZONEST_ZONEST_HPP_
