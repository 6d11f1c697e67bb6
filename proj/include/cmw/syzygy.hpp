#ifndef CMW_SYZYGY_HPP
#define CMW_SYZYGY_HPP

#include <vector>

#include "cmw/groebner.hpp"

namespace cmw {

// Generators of the syzygy module of the given columns, over the polynomial
// ring itself. Computed from one stacked Groebner basis: columns are adjoined
// unit tails and the component-elimination order projects out the relations.
// Every returned vector s satisfies sum_j s_j * cols[j] = 0 exactly (checked).
std::vector<VecPoly> syzygies(const FreeMod& target, const std::vector<VecPoly>& cols,
                              const std::vector<int>& coldegs, const GBOptions& opt = {});

// Generators of { v in W1 : T(v) lies in span(relations) }, where T is given
// by its columns tcols (images of the W1 basis inside W2). Contains ker T.
std::vector<VecPoly> preimage(const FreeMod& w1, const FreeMod& w2,
                              const std::vector<VecPoly>& tcols,
                              const std::vector<VecPoly>& relations,
                              const std::vector<int>& reldegs, const GBOptions& opt = {});

}  // namespace cmw

#endif
