#pragma once

#include "globrig/census.hpp"
#include "globrig/classify.hpp"
#include "globrig/connectivity.hpp"
#include "globrig/distance_regular.hpp"
#include "globrig/errors.hpp"
#include "globrig/generators.hpp"
#include "globrig/graph.hpp"
#include "globrig/io.hpp"
#include "globrig/metrics.hpp"
#include "globrig/oracle.hpp"
#include "globrig/report.hpp"
#include "globrig/rigidity.hpp"
#include "globrig/symmetry.hpp"
