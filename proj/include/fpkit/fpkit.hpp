#pragma once

#include "fpkit/classifier.hpp"
#include "fpkit/exact_algebra.hpp"
#include "fpkit/fixed_point_data.hpp"
#include "fpkit/genus_engine.hpp"
#include "fpkit/identity_suite.hpp"
#include "fpkit/multigraph.hpp"
#include "fpkit/outcome.hpp"
