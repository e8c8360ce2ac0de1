#pragma once

#include "lozenge/bigcount.hpp"
#include "lozenge/condensation.hpp"
#include "lozenge/dual_graph.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/io.hpp"
#include "lozenge/lattice_region.hpp"
#include "lozenge/matching.hpp"
#include "lozenge/superposition.hpp"
#include "lozenge/svg.hpp"
