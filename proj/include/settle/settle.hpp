#pragma once

#include "settle/bounds.hpp"
#include "settle/grid.hpp"
#include "settle/io.hpp"
#include "settle/modelgen.hpp"
#include "settle/patterns.hpp"
#include "settle/row_ops.hpp"
#include "settle/solvers.hpp"
