#pragma once

// Exact computation of centralizer isomorphism types in 1-connected simple
// compact Lie groups: root data, Weyl-cell geometry, local types by diagram
// deletion, and covering kernels with explicit generators.

#include "liecell/deficiency.hpp"
#include "liecell/diagram.hpp"
#include "liecell/errors.hpp"
#include "liecell/kernel.hpp"
#include "liecell/lattice.hpp"
#include "liecell/lietype.hpp"
#include "liecell/local_type.hpp"
#include "liecell/numeric.hpp"
#include "liecell/report.hpp"
#include "liecell/root_system.hpp"
#include "liecell/weyl_cell.hpp"
