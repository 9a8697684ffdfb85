#pragma once

#include "deltak/chromatic.hpp"
#include "deltak/closed_forms.hpp"
#include "deltak/coloring.hpp"
#include "deltak/coloring_io.hpp"
#include "deltak/error.hpp"
#include "deltak/family_spec.hpp"
#include "deltak/generators.hpp"
#include "deltak/graph.hpp"
#include "deltak/graph_io.hpp"
#include "deltak/heuristic.hpp"
#include "deltak/solver.hpp"
