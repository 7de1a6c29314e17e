#ifndef ORBRR_WORKED_EXAMPLES_HPP
#define ORBRR_WORKED_EXAMPLES_HPP

#include "orbrr/hilbert.hpp"
#include "orbrr/search.hpp"

namespace orbrr::examples {

// The worked examples shipped with the tool: weighted hypersurfaces with
// their orbifold baskets, used by the `golden` subcommand and the
// acceptance suite.

VarietyDescriptor x11();    // K3 surface of degree 11 in P(1,2,3,5)
VarietyDescriptor x80();    // Calabi-Yau threefold of degree 80 in P(3,5,7,25,40)
VarietyDescriptor x12();    // threefold of degree 12 in P(1,2,2,3,4)
VarietyDescriptor x10();    // fourfold of degree 10 in P(1,1,1,2,2,2)
VarietyDescriptor x36();    // fourfold of degree 36 in P(1,4,5,6,9,10)
VarietyDescriptor deg16();  // fourfold of degree 16 in P(1,1,1,3,3,8)
VarietyDescriptor deg13();  // fourfold of degree 13 in P(1,1,1,3,3,5)

// the dimension-3 candidate hunt: plurigenera 1,1,2, curves 1/2(1,1) and
// 1/3(1,2), dissident points 1/9(1,2,6) and 1/6(1,2,3)
SearchTemplate dimension3_search();
std::vector<GridRange> dimension3_ranges();

}  // namespace orbrr::examples

#endif
