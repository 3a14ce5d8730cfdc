#pragma once

#include "efpoly/affine_map.hpp"
#include "efpoly/ef_analysis.hpp"
#include "efpoly/hpoly.hpp"

namespace efpoly {

// Independent pair: P over x, Q over y. P is the single point (6, 0); Q is
// the segment from (3/2, 9/2) to (6, 0).

/// {x : x1 - x2 >= 6, 0 <= x1 <= 6, 0 <= x2 <= 5}
HPoly indep_p();
/// {y : y1 + y2 = 6, y1 >= 3/2, y2 >= 0}
HPoly indep_q();
/// P written over (x, y) with a zero y block.
HPoly indep_p_lifted();
/// Q written over (x, y) with a zero x block, equality split into two rows.
HPoly indep_q_lifted();
/// x = [[1, 1], [0, 0]] y, which carries Q onto P.
AffineMapSpec indep_map();

// Coupled pair for construct_mutual_augmentation.

/// {x >= 0 : 2 x1 + x2 <= 6}
HPoly coupled_p1();
/// {w >= 0 : 18 w1 - w2 <= 23, 59 w1 + w3 <= 84}
HPoly coupled_p2();
/// B1 = [[-1, 2], [3, -4]], B2 = [[5, -6, 7], [-10, 9, -8]], C1 = [7], C2 = diag(2, 1/2).
AugmentationSpec coupled_spec();

}  // namespace efpoly
