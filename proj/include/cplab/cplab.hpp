#pragma once

#include "cplab/catalan.hpp"
#include "cplab/experiment.hpp"
#include "cplab/gamma.hpp"
#include "cplab/graph.hpp"
#include "cplab/io.hpp"
#include "cplab/matching.hpp"
#include "cplab/oracle.hpp"
#include "cplab/pattern.hpp"
#include "cplab/quadruple.hpp"
#include "cplab/rng.hpp"
#include "cplab/sampler.hpp"
#include "cplab/summary.hpp"
#include "cplab/union_find.hpp"
