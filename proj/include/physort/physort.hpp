#pragma once

#include <physort/algorithms.hpp>
#include <physort/analysis.hpp>
#include <physort/bounds.hpp>
#include <physort/engine.hpp>
#include <physort/error.hpp>
#include <physort/grid.hpp>
#include <physort/oracle.hpp>
#include <physort/random_config.hpp>
#include <physort/trace_io.hpp>
#include <physort/verify.hpp>
