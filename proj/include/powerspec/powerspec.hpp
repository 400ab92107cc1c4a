#pragma once

#include "charpoly.hpp"
#include "connectivity.hpp"
#include "exact_linalg.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "group_spec.hpp"
#include "group_structure.hpp"
#include "number_theory.hpp"
#include "pgroup.hpp"
#include "power_graph.hpp"
#include "spectrum.hpp"
#include "twins.hpp"
#include "verify.hpp"
