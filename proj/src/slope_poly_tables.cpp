// Term tables for the f/g/r slope-polynomial families and the B..F cubic
// coefficient displays. Generated from the source transcription; the applied
// per-term corrections are listed in docs/transcription.md and exposed via
// slope_poly_fixes() / cubic_coeff_fixes().

#include "arcgeom/slope_polys.hpp"

namespace arcgeom::tables {

const SlopeTerm kF1[] = {
    {-1,{2,1,1,1,0,0},0,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,1,1,0,0,1},0,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,1,0,1,0,0},1,{3,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{2,1,0,0,1,1},0,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,1,0,0,1,0},1,{4,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,1,0,0,0,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{2,0,1,1,0,0},1,{2,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,0,1,0,0,1},1,{2,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,0,0,1,1,1},0,{0,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{2,0,0,1,1,0},1,{4,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,0,0,1,0,1},1,{3,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,0,0,1,0,0},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{2,0,0,1,0,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{2,0,0,0,0,1},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,1,1,1,1,0},0,{0,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,1,1,0,0},1,{1,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,0,1,0},1,{4,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,0,0,1},1,{1,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,1,0,0,1},1,{5,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,0,0,0},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,1,0,1,1,0},1,{3,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,0,1,0,0},2,{1,3,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},1,{1,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},1,{5,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,0,0,1,0},2,{1,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,0,0,1,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,1,0,0,1,0},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{1,1,0,0,0,0},1,{1,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,0,1,1,1,1},0,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,1,1,0},1,{2,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,1,1,1,0},1,{4,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,1,0,1},1,{3,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,1,0,0},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,1,1,0,0},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,0,1,1,0,0},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,1,1,0,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{1,0,1,0,1,1},1,{2,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,0,0,1},2,{2,5,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,0,0,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{1,0,1,0,0,1},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,1,0,0,0},1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,1,0,0,0},1,{2,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{1,0,0,1,1,1},1,{5,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,0,1,1,0},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,0,1,1,0},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{1,0,0,1,1,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,0,1,1,0},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,0,1,0,1},2,{3,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,0,1,0,0},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,0,0,1,0,0},1,{3,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{1,0,0,0,1,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{1,0,0,0,1,0},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,0,0,0,1,0},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,0,0,1},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{1,0,0,0,0,0},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{1,0,0,0,0,0},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,1,1,1,1,0},1,{1,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,1,1,0,1,0},2,{1,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,0,0,1},2,{1,5,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,0,0,0},1,{1,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,1,0,1,1,0},2,{1,3,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,0,0,1,1},2,{1,5,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,0,0,1,0},1,{1,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,1,0,0,1,0},1,{1,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,1,1,1},1,{5,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,1,1,0},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,1,1,0},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,1,1,0},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,1,1,0},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,1,1,1,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,1,1,0},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,1,0,1},2,{3,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,1,0,0},1,{3,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{2,5,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,0},1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,1,0,1,0},1,{2,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}},
    {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,0,0,1,1,0},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,0,0,1,0},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,0,0,1,0},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}},
};
const std::size_t kF1Count = sizeof(kF1) / sizeof(SlopeTerm);

const SlopeTerm kF2[] = {
    {-2,{2,1,1,1,0,0},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {2,{2,1,1,0,0,1},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-2,{2,1,0,1,0,0},2,{0,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {-2,{2,1,0,0,1,1},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-2,{2,1,0,0,1,0},2,{0,4,0,0,0,0},0,{0,0,0,0,0,0}}, {-2,{2,1,0,0,0,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-2,{2,0,1,1,0,0},2,{0,2,0,0,0,0},0,{0,0,0,0,0,0}}, {2,{2,0,1,0,0,1},2,{0,2,0,0,0,0},0,{0,0,0,0,0,0}}, {2,{2,0,0,1,1,1},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {2,{2,0,0,1,1,0},2,{0,4,0,0,0,0},0,{0,0,0,0,0,0}}, {2,{2,0,0,1,0,1},2,{0,3,0,0,0,0},0,{0,0,0,0,0,0}}, {-2,{2,0,0,1,0,0},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {2,{2,0,0,1,0,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {2,{2,0,0,0,0,1},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,1,1,1,1,0},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,1,1,1,0},1,{4,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,1,0,1},1,{3,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,1,0,1},1,{5,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,1,1,0,0},2,{0,1,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,1,0,0},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,1,0,0},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,1,1,0,0},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{1,1,1,1,0,0},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,1,1,1,0,0},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{1,1,1,1,0,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,1,1,1,0,0},0,{0,0,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{1,1,1,0,1,1},1,{2,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,1,0,1,1},1,{4,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,0,1,0},2,{0,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,0,1,0},2,{2,4,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,1,0,0,1},2,{0,1,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,0,0,1},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,0,0,1},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,1,0,0,1},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,1,1,0,0,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,1,1,0,0,1},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{1,1,1,0,0,1},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,1,1,0,0,1},0,{0,0,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{1,1,1,0,0,0},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{1,1,1,0,0,0},1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,1,0,1,1,1},1,{1,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,1,1,1},1,{3,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,0,1,1,0},2,{0,3,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,0,1,1,0},2,{1,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,0,1,0,1},2,{1,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,0,1,0,1},2,{3,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,1,0,0},3,{0,1,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,1,0,0},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{1,1,0,1,0,0},1,{1,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,1,0,1,0,0},1,{3,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{1,1,0,1,0,0},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{1,1,0,1,0,0},1,{3,0,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},2,{0,1,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,0,0,1,1},2,{4,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{1,1,0,0,1,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{1,1,0,0,1,1},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,1,0,0,1,1},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},0,{0,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,{1,1,0,0,1,0},3,{0,1,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,0,0,1,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,1,0,0,1,0},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{1,1,0,0,1,0},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{1,1,0,0,1,0},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,1,0,0,1,0},1,{4,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {1,{1,1,0,0,0,1},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,1,0,0,0,1},1,{5,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,1,0,0,0,0},2,{0,1,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{1,1,0,0,0,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{1,1,0,0,0,0},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{1,1,0,0,0,0},0,{0,0,0,0,0,0},2,{3,5,0,0,0,0}},
    {-1,{1,0,1,1,1,1},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,1,1,1},1,{2,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,1,1,0},2,{0,2,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,1,1,1,0},2,{0,4,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,1,0,1},2,{0,3,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,1,0,1},2,{2,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,1,1,0,0},1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,0,1,1,0,0},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,1,1,0,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{1,0,1,1,0,0},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,0,1,1,0,0},1,{2,0,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{1,0,1,0,1,1},2,{0,2,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,1,0,1,1},2,{2,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,0,0,1},3,{0,2,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,0,0,1},1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{1,0,1,0,0,1},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,1,0,0,1},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,0,1,0,0,1},1,{2,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{1,0,1,0,0,1},1,{2,0,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{1,0,1,0,0,0},2,{0,2,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,1,0,0,0},2,{0,2,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{1,0,0,1,1,1},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,0,1,1,1},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,0,1,1,1},2,{4,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,0,0,1,1,1},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,0,0,1,1,1},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,1,1,1},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{1,0,0,1,1,1},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,0,1,1,1},0,{0,0,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{1,0,0,1,1,0},3,{0,3,4,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,0,0,1,1,0},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,0,1,1,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,0,1,1,0},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{1,0,0,1,1,0},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{1,0,0,1,1,0},1,{4,0,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{1,0,0,1,0,1},3,{0,3,5,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,0,0,1,0,1},1,{3,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,0,0,1,0,1},1,{3,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,0,1,0,1},1,{3,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,{1,0,0,1,0,1},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,1,0,1},1,{5,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,0,1,0,0},2,{0,3,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{1,0,0,1,0,0},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{1,0,0,1,0,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{1,0,0,1,0,0},0,{0,0,0,0,0,0},2,{2,5,0,0,0,0}},
    {1,{1,0,0,1,0,0},0,{0,0,0,0,0,0},2,{3,5,0,0,0,0}}, {-1,{1,0,0,0,1,1},1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,0,0,0,1,1},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{1,0,0,0,1,0},2,{0,4,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,0,0,0,1,0},2,{0,4,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,0,0,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{1,0,0,0,0,1},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{1,0,0,0,0,1},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{1,0,0,0,0,1},0,{0,0,0,0,0,0},2,{2,5,0,0,0,0}},
    {-1,{1,0,0,0,0,0},1,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{1,0,0,0,0,0},1,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,1,1,1,1,1},1,{1,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,1,1,1,1,1},1,{5,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,1,1,0},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,1,1,1,0},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,1,1,1,1,0},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,1,1,1,0,1},2,{1,5,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,1,0,1},2,{3,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,1,1,0,0},1,{1,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {1,{0,1,1,1,0,0},1,{3,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,1,1,0,1,1},2,{1,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,0,1,1},2,{2,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,1,1,0,1,0},3,{1,2,4,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,1,0,1,0},1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,1,1,0,1,0},1,{2,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,1,1,0,1,0},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,1,1,0,1,0},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,1,1,0,1,0},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,1,1,0,0,1},3,{1,2,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,1,0,0,1},1,{1,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,1,1,0,0,1},1,{1,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {1,{0,1,1,0,0,1},1,{5,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,1,1,0,0,1},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,1,1,0,0,1},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,1,1,0,0,0},2,{1,2,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,1,1,0,0,0},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}}, {-1,{0,1,1,0,0,0},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}},
    {1,{0,1,1,0,0,0},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,1,0,1,1,1},2,{1,3,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,0,1,1,1},2,{1,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,1,0,1,1,0},3,{1,3,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,0,1,1,0},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,1,0,1,1,0},1,{1,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,1,0,1,1,0},1,{1,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,1,0,1,1,0},1,{3,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,1,0,1,1,0},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,1,0,1,0,0},2,{1,3,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,1,0,1,0,0},2,{1,3,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{0,1,0,0,1,1},3,{1,4,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,1,0,0,1,1},1,{1,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,1,0,0,1,1},1,{1,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,1,0,0,1,1},1,{1,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,{0,1,0,0,1,1},1,{5,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,1,0,0,1,1},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,1,0,0,1,0},2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,1,0,0,1,0},2,{1,4,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {-1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,1,0,0,0,1},2,{1,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,1,0,0,0,1},2,{1,5,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,1,0,0,0,0},1,{1,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,1,0,0,0,0},1,{1,0,0,0,0,0},2,{3,5,0,0,0,0}},
    {-1,{0,0,1,1,1,1},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,1,1,1},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,1,1,1},2,{4,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,1,1,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,1,1,1},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,1,1,1},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,1,1,1,1},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,1,1,1},0,{0,0,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{0,0,1,1,1,0},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,1,1,1,0},1,{4,0,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{0,0,1,1,0,1},3,{2,3,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,1,0,1},1,{3,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,1,1,0,1},1,{3,0,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{0,0,1,1,0,1},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,1,0,1},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,1,0,1},1,{5,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,1,0,0},2,{2,3,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{1,5,0,0,0,0}},
    {1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{2,5,0,0,0,0}}, {-1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{3,5,0,0,0,0}}, {-1,{0,0,1,0,1,1},3,{2,4,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,1,1},1,{2,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},1,{2,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,1},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{0,0,1,0,0,1},2,{2,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},2,{2,5,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{1,5,0,0,0,0}}, {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {-1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{2,5,0,0,0,0}}, {1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{0,4,0,0,0,0}}, {-1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{3,5,0,0,0,0}},
    {-1,{0,0,0,1,1,1},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,1,1,1},1,{5,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,0,1,1,0},2,{3,4,0,0,0,0},1,{0,0,0,0,0,0}},
    {1,{0,0,0,1,1,0},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,0,1,1,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,1,1,0},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {1,{0,0,0,1,0,1},2,{3,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,1,0,1},2,{3,5,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {-1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{1,5,0,0,0,0}}, {-1,{0,0,0,0,1,1},2,{4,5,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,5,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{1,5,0,0,0,0}}, {1,{0,0,0,0,0,1},1,{5,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,0,0,0,1},1,{5,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{0,2,4,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,3,5,0,0,0}},
};
const std::size_t kF2Count = sizeof(kF2) / sizeof(SlopeTerm);

const SlopeTerm kF3[] = {
    {-1,{2,1,1,1,0,0},2,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,1,1,0,0,1},2,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,1,0,1,0,0},3,{0,0,3,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{2,1,0,0,1,1},2,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,1,0,0,1,0},3,{0,0,4,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,1,0,0,0,0},2,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{2,0,1,1,0,0},3,{0,0,2,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,0,1,0,0,1},3,{0,0,2,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,0,0,1,1,1},2,{0,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{2,0,0,1,1,0},3,{0,0,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,0,0,1,0,1},3,{0,0,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,0,0,1,0,0},2,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{2,0,0,1,0,0},2,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{2,0,0,0,0,1},2,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,1,1,1,1,0},2,{0,4,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,1,1,0,1},2,{0,3,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,1,0,1},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,1,0,0},3,{0,1,2,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,1,1,0,0},3,{0,2,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,1,0,0},1,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{1,1,1,1,0,0},1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{1,1,1,1,0,0},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,1,1,1,0,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,1,1,1,0,0},1,{0,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {1,{1,1,1,0,1,1},2,{0,2,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,0,1,1},2,{0,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,0,1,0},3,{0,2,4,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,1,0,0,1},3,{0,1,2,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,0,0,1},1,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,1,1,0,0,1},1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{1,1,1,0,0,1},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,1,1,0,0,1},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,1,1,0,0,1},1,{0,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {1,{1,1,1,0,0,0},2,{0,2,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,1,0,1,1,1},2,{0,1,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,1,1,1},2,{0,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,0,1,1,0},3,{0,1,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,0,1,0,1},3,{0,1,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,1,0,1},3,{0,3,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,0,1,0,0},2,{0,1,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,1,0,1,0,0},2,{0,1,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,1,0,1,0,0},2,{0,3,0,0,0,0},1,{0,0,0,0,0,0}},
    {1,{1,1,0,1,0,0},2,{0,3,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,1,0,1,0,0},2,{0,3,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},3,{0,4,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,0,0,1,1},1,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{1,1,0,0,1,1},1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{1,1,0,0,1,1},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},1,{0,0,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{1,1,0,0,1,0},2,{0,4,0,0,0,0},1,{0,0,0,0,0,0}},
    {1,{1,1,0,0,1,0},2,{0,4,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,1,0,0,1,0},2,{0,4,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{1,1,0,0,0,1},2,{0,1,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{1,1,0,0,0,1},2,{0,5,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,1,0,0,0,0},1,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{1,1,0,0,0,0},1,{0,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {-1,{1,1,0,0,0,0},1,{0,0,0,0,0,0},2,{3,5,0,0,0,0}}, {-1,{1,0,1,1,1,1},2,{0,2,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,1,0,1},3,{0,2,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,1,1,0,0},2,{0,2,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,0,1,1,0,0},2,{0,2,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{1,0,1,0,1,1},3,{0,2,4,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,0,1,0,0,1},2,{0,2,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,0,1,0,0,1},2,{0,2,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,1,0,0,1},2,{0,2,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,{1,0,0,1,1,1},3,{0,3,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,0,1,1,1},3,{0,4,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,0,1,1,1},1,{0,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{1,0,0,1,1,1},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,1,1,1},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,0,0,1,1,1},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{1,0,0,1,1,1},1,{0,0,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{1,0,0,1,1,0},2,{0,4,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{1,0,0,1,1,0},2,{0,4,0,0,0,0},1,{5,0,0,0,0,0}},
    {1,{1,0,0,1,0,1},2,{0,3,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,0,0,1,0,1},2,{0,3,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,0,1,0,1},2,{0,3,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,{1,0,0,1,0,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,1,0,1},2,{0,5,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,0,0,1,0,0},1,{0,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {1,{1,0,0,1,0,0},1,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{1,0,0,1,0,0},1,{0,0,0,0,0,0},2,{2,5,0,0,0,0}}, {1,{1,0,0,1,0,0},1,{0,0,0,0,0,0},2,{3,5,0,0,0,0}},
    {-1,{1,0,0,0,1,1},2,{0,4,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,0,0,1},1,{0,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{1,0,0,0,0,1},1,{0,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {1,{1,0,0,0,0,1},1,{0,0,0,0,0,0},2,{2,5,0,0,0,0}}, {-1,{0,1,1,1,1,1},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,1,1,1},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,1,1,1,1,1},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,1,1,1},2,{4,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,1,1,1,1},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {1,{0,1,1,1,1,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,1,1,1,1,1},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,1,1,1,1,1},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,1,1,1,1,1},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,1,1,1,1,1},0,{0,0,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{0,1,1,1,1,0},1,{4,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,{0,1,1,1,0,1},3,{1,2,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,1,0,1},3,{2,3,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,1,1,0,1},1,{3,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,1,1,1,0,1},1,{3,0,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{0,1,1,1,0,1},1,{5,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,1,1,1,0,1},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,1,1,1,0,1},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,1,1,1,0,1},1,{5,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,1,1,1,0,0},2,{1,2,0,0,0,0},1,{5,0,0,0,0,0}},
    {1,{0,1,1,1,0,0},2,{2,3,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{0,1,1,1,0,0},0,{0,0,0,0,0,0},2,{0,5,0,0,0,0}}, {1,{0,1,1,1,0,0},0,{0,0,0,0,0,0},2,{1,5,0,0,0,0}},
    {-1,{0,1,1,1,0,0},0,{0,0,0,0,0,0},2,{2,5,0,0,0,0}}, {1,{0,1,1,1,0,0},0,{0,0,0,0,0,0},2,{3,5,0,0,0,0}}, {-1,{0,1,1,0,1,1},3,{1,2,4,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,1,1,0,1,1},3,{2,4,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,0,1,1},1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,1,1,0,1,1},1,{2,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,1,1,0,1,1},1,{2,0,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{0,1,1,0,1,1},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,1,1,0,1,1},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,1,1,0,1,1},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,1,1,0,1,0},2,{2,4,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{0,1,1,0,0,1},2,{1,2,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,1,1,0,0,1},2,{1,2,0,0,0,0},1,{5,0,0,0,0,0}}, {1,{0,1,1,0,0,1},2,{2,5,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,1,1,0,0,1},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {1,{0,1,1,0,0,1},0,{0,0,0,0,0,0},2,{0,5,0,0,0,0}}, {1,{0,1,1,0,0,1},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,1,1,0,0,1},0,{0,0,0,0,0,0},2,{1,5,0,0,0,0}},
    {-1,{0,1,1,0,0,1},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,1,1,0,0,1},0,{0,0,0,0,0,0},2,{2,5,0,0,0,0}}, {1,{0,1,1,0,0,0},1,{2,0,0,0,0,0},2,{3,5,0,0,0,0}},
    {-1,{0,1,0,1,1,1},3,{1,3,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,0,1,1,1},3,{1,4,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,0,1,1,1},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,1,0,1,1,1},1,{1,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,1,0,1,1,1},1,{1,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,1,0,1,1,1},1,{1,0,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,{0,1,0,1,1,1},1,{3,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,1,0,1,1,1},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,1,0,1,1,0},2,{1,4,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,{0,1,0,1,0,1},2,{1,3,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,1,0,1,0,1},2,{1,3,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,{0,1,0,1,0,1},2,{1,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,1,0,1,0,1},2,{1,5,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,1,0,1,0,1},2,{3,5,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,1,0,1,0,1},2,{3,5,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,1,0,1,0,0},1,{1,0,0,0,0,0},2,{2,5,0,0,0,0}}, {1,{0,1,0,1,0,0},1,{1,0,0,0,0,0},2,{3,5,0,0,0,0}}, {-1,{0,1,0,1,0,0},1,{3,0,0,0,0,0},2,{0,5,0,0,0,0}},
    {1,{0,1,0,1,0,0},1,{3,0,0,0,0,0},2,{1,5,0,0,0,0}}, {-1,{0,1,0,0,1,1},2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,1,0,0,1,1},2,{4,5,0,0,0,0},1,{0,0,0,0,0,0}},
    {1,{0,1,0,0,1,1},2,{4,5,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,1,0,0,1,1},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,1,0,0,1,1},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {-1,{0,1,0,0,1,1},0,{0,0,0,0,0,0},2,{0,5,0,0,0,0}}, {1,{0,1,0,0,1,1},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,1,0,0,1,1},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}},
    {1,{0,1,0,0,1,1},0,{0,0,0,0,0,0},2,{1,5,0,0,0,0}}, {-1,{0,1,0,0,1,0},1,{4,0,0,0,0,0},2,{0,5,0,0,0,0}}, {1,{0,1,0,0,1,0},1,{4,0,0,0,0,0},2,{1,5,0,0,0,0}},
    {-1,{0,1,0,0,0,1},1,{1,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,1,0,0,0,1},1,{1,0,0,0,0,0},2,{2,5,0,0,0,0}}, {-1,{0,1,0,0,0,1},1,{5,0,0,0,0,0},2,{0,3,0,0,0,0}},
    {1,{0,1,0,0,0,1},1,{5,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,1,0,0,0,0},0,{0,0,0,0,0,0},3,{0,3,5,0,0,0}}, {1,{0,1,0,0,0,0},0,{0,0,0,0,0,0},3,{1,3,5,0,0,0}},
    {-1,{0,0,1,1,1,1},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,1,0,1},2,{2,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,1,0,0},1,{2,0,0,0,0,0},2,{0,5,0,0,0,0}},
    {-1,{0,0,1,0,1,1},2,{2,4,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{2,0,0,0,0,0},2,{0,4,0,0,0,0}}, {1,{0,0,1,0,0,1},1,{2,0,0,0,0,0},2,{0,5,0,0,0,0}},
    {-1,{0,0,0,1,1,1},2,{3,4,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,0,1,1,1},2,{4,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,1,1,1},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {1,{0,0,0,1,1,1},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,0,1,1,1},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}}, {1,{0,0,0,1,1,1},0,{0,0,0,0,0,0},2,{0,5,0,0,0,0}},
    {1,{0,0,0,1,1,0},1,{4,0,0,0,0,0},2,{0,5,0,0,0,0}}, {-1,{0,0,0,1,0,1},1,{3,0,0,0,0,0},2,{0,4,0,0,0,0}}, {1,{0,0,0,1,0,1},1,{3,0,0,0,0,0},2,{0,5,0,0,0,0}},
    {-1,{0,0,0,1,0,1},1,{5,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,0,1,0,1},1,{5,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,0,1,0,0},0,{0,0,0,0,0,0},3,{0,2,5,0,0,0}},
    {1,{0,0,0,1,0,0},0,{0,0,0,0,0,0},3,{0,3,5,0,0,0}}, {-1,{0,0,0,0,1,1},1,{4,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,0,0,0,1},0,{0,0,0,0,0,0},3,{0,2,4,0,0,0}},
    {1,{0,0,0,0,0,1},0,{0,0,0,0,0,0},3,{0,2,5,0,0,0}},
};
const std::size_t kF3Count = sizeof(kF3) / sizeof(SlopeTerm);

const SlopeTerm kF4[] = {
    {1,{2,1,1,1,0,0},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,1,1,0,0,1},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,1,0,1,0,0},2,{0,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{2,1,0,0,1,1},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,1,0,0,1,0},2,{0,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,1,0,0,0,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{2,0,1,1,0,0},2,{0,2,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,0,1,0,0,1},2,{0,2,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,0,0,1,1,1},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{2,0,0,1,1,0},2,{0,4,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{2,0,0,1,0,1},2,{0,3,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{2,0,0,1,0,0},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{2,0,0,1,0,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{2,0,0,0,0,1},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,1,1,1,1,1},0,{0,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,1,1,1,0},1,{0,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,1,1,0},1,{4,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,1,0,1},1,{3,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,1,1,1,0,0},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,1,0,0},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,1,1,0,0},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{1,1,1,1,0,0},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,1,1,1,0,0},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,1,1,1,0,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{1,1,1,0,1,1},1,{2,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,0,1,0},2,{0,4,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,0,1,0},2,{2,4,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,1,0,0,1},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,0,0,1},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,1,0,0,1},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {1,{1,1,1,0,0,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,1,1,0,0,1},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,1,1,0,0,0},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{1,1,1,0,0,0},1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,1,0,1,1,1},1,{1,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,1,1,0},2,{0,3,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,1,0,1,1,0},2,{1,4,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,1,0,1,0,1},2,{1,3,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,0,1,0,0},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{1,1,0,1,0,0},1,{1,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,1,0,1,0,0},1,{3,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,1,0,1,0,0},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{1,1,0,0,1,1},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,1,0,0,1,1},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,1,0,0,1,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{1,1,0,0,1,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,1,0,0,1,0},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,1,0,0,1,0},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{1,1,0,0,1,0},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,1,0,0,0,1},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,1,0,0,0,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}},
    {-1,{1,1,0,0,0,0},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{1,0,1,1,1,0},2,{0,2,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,1,0,0},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{1,0,1,0,1,0},3,{0,2,4,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,0,0,1},3,{0,2,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,0,0,1},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{1,0,1,0,0,0},2,{0,2,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{1,0,0,1,1,1},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,0,1,1,1},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{1,0,0,1,1,0},3,{0,3,4,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,0,1,1,0},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,1,1,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{1,0,0,1,1,0},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{1,0,0,1,1,0},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,0,0,1,0,1},3,{0,3,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,0,1,0,1},1,{3,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{1,0,0,1,0,0},2,{0,3,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,0,1,0,0},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {-1,{1,0,0,1,0,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{1,0,0,0,1,0},2,{0,4,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,0,0,0,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{1,0,0,0,0,1},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{1,0,0,0,0,0},1,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,1,1,1,1,1},1,{5,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,1,1,1,1,0},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,1,1,0},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,1,1,1,0},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,1,1,1,1,0},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,1,1,1,0,1},2,{3,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,1,1,1,0,0},1,{3,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,1,1,0,1,1},2,{2,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,1,0,1,0},3,{1,2,4,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,1,1,0,1,0},1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,1,1,0,1,0},1,{2,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,1,1,0,1,0},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {1,{0,1,1,0,1,0},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,1,1,0,1,0},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,1,1,0,0,1},3,{1,2,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,1,1,0,0,1},1,{5,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,1,1,0,0,1},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,1,1,0,0,1},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,1,1,0,0,0},2,{1,2,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,1,1,0,0,0},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}}, {1,{0,1,1,0,0,0},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}},
    {-1,{0,1,1,0,0,0},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,1,0,1,1,1},2,{1,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,0,1,1,0},3,{1,3,4,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,1,0,1,1,0},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,1,0,1,1,0},1,{1,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,1,0,1,1,0},1,{1,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,1,0,1,1,0},1,{3,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,1,0,1,1,0},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,1,0,1,0,1},3,{1,3,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,1,0,1,0,0},2,{1,3,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,1,0,0,1,1},1,{5,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,1,0,0,1,1},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,1,0,0,1,0},2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,1,0,0,0,1},2,{1,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,1,0,0,0,0},1,{1,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,1,1,1,0},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},2,{2,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{0,4,0,0,0,0}}, {-1,{0,0,0,1,1,1},1,{5,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,0,1,1,0},2,{3,4,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,1,1,0},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,0,1,1,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}},
    {-1,{0,0,0,1,1,0},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}}, {-1,{0,0,0,1,0,1},2,{3,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,0,0,0,1},1,{5,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{0,2,4,0,0,0}},
};
const std::size_t kF4Count = sizeof(kF4) / sizeof(SlopeTerm);

const SlopeTerm kG1[] = {
    {-1,{0,1,1,0,1,0},1,{4,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,0,1,0},1,{2,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,0,0,1},1,{1,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,1,1,0,0,1},1,{5,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,1,0,0,0},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,1,0,0,0},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,1,0,0,1,1},1,{1,0,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,1,0,0,1,1},1,{5,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,1,0,0,1,0},2,{1,4,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,1,0,0,1,0},0,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,1,0,0,0,0},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,1,0,0,0,0},1,{1,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},1,{2,0,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},1,{4,0,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},2,{2,5,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,0,0,1,1},2,{4,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,0,0,0,1},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,0,0,0,1},1,{5,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{2,2,0,0,0,0}}, {2,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{3,3,0,0,0,0}}, {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{3,4,0,0,0,0}},
};
const std::size_t kG1Count = sizeof(kG1) / sizeof(SlopeTerm);

const SlopeTerm kG2[] = {
    {1,{0,0,1,1,1,1},2,{0,1,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,1,1,1},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,1,1,1},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,1,1,1},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,1,1,1},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,1,1,1},2,{4,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,1,1,0},3,{0,2,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,1,1,0},3,{0,3,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,1,1,0},1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,1,1,1,0},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,1,1,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,1,1,0},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,1,1,1,0},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,1,1,1,0},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,1,1,0},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,1,1,0},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,1,1,0},1,{4,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,1,1,0},1,{4,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,1,1,0,1},3,{0,1,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,1,0,1},3,{0,3,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,1,0,1},3,{1,2,5,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,1,0,1},3,{2,3,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,1,0,1},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,1,0,1},1,{3,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,1,0,1},1,{3,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,1,0,1},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,1,0,1},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,1,1,0,1},1,{5,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,1,0,0},4,{0,1,2,3,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,1,0,0},2,{0,3,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,1,1,0,0},2,{1,2,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,1,1,0,0},2,{1,2,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,1,0,0},2,{1,2,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,1,1,0,0},2,{1,2,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,1,0,0},2,{1,2,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,1,0,0},2,{2,3,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,1,0,0},2,{2,3,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,1,0,0},2,{2,3,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,1,0,0},2,{2,3,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}},
    {-1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{1,1,0,0,0,0}}, {2,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-2,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{2,2,0,0,0,0}}, {2,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {-1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{3,3,0,0,0,0}}, {1,{0,0,1,1,0,0},0,{0,0,0,0,0,0},2,{3,4,0,0,0,0}},
    {1,{0,0,1,0,1,1},3,{0,1,4,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},3,{0,2,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},3,{1,2,4,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},3,{2,4,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,1},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},1,{2,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},1,{2,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,1},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,1,0},2,{0,2,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},2,{0,2,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,1,0,1,0},2,{0,4,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},2,{0,4,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},4,{0,1,2,5,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,0,1},2,{0,1,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,0,1},2,{0,5,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,0,1},2,{1,2,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},2,{1,2,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,0,0,1},2,{1,2,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},2,{1,2,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,0,1},2,{2,5,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{0,1,0,0,0,0}}, {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}},
    {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{1,1,0,0,0,0}}, {-2,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}}, {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{2,2,0,0,0,0}}, {-1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}}, {1,{0,0,1,0,0,0},3,{0,1,2,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,1,0,0,0},3,{0,1,2,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,1,0,0,0},1,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,1,0,0,0},1,{0,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {-1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{3,3,0,0,0,0}},
    {1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{3,4,0,0,0,0}}, {-1,{0,0,0,1,1,1},3,{1,3,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,0,1,1,1},3,{1,4,5,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,0,1,1,1},1,{1,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,1,1,1},1,{1,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,1,1,1},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,0,1,1,1},1,{5,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,1,1,0},4,{0,1,3,4,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,0,1,1,0},2,{0,3,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,0,1,1,0},2,{1,4,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,1,1,0},2,{1,4,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,1,1,0},2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,0,1,1,0},2,{1,4,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,0,1,1,0},2,{1,4,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,0,1,1,0},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {1,{0,0,0,1,1,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,0,1,1,0},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}}, {1,{0,0,0,1,0,1},2,{1,3,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,0,1,0,1},2,{1,3,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,1,0,1},2,{1,3,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,0,1,0,1},2,{1,3,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,0,1,0,1},2,{1,5,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,0,1,0,1},2,{1,5,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,0,1,0,1},2,{3,5,0,0,0,0},1,{0,0,0,0,0,0}},
    {1,{0,0,0,1,0,1},2,{3,5,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,1,0,0},3,{0,1,3,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,0,1,0,0},3,{0,1,3,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,0,1,0,0},1,{1,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,0,1,0,0},1,{1,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,1,0,0},1,{1,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,0,1,0,0},1,{1,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,0,1,0,0},1,{1,0,0,0,0,0},2,{2,2,0,0,0,0}}, {2,{0,0,0,1,0,0},1,{1,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {-1,{0,0,0,1,0,0},1,{1,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,0,1,0,0},1,{1,0,0,0,0,0},2,{3,3,0,0,0,0}}, {1,{0,0,0,1,0,0},1,{1,0,0,0,0,0},2,{3,4,0,0,0,0}},
    {1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{0,3,0,0,0,0}},
    {-1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{0,4,0,0,0,0}}, {-1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{1,1,0,0,0,0}}, {1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,0,1,0,0},1,{3,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,0,0,1,1},4,{0,1,4,5,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,0,0,1,1},2,{0,5,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},2,{4,5,0,0,0,0},1,{0,0,0,0,0,0}},
    {1,{0,0,0,0,1,1},2,{4,5,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,1,0,0,0,0}},
    {1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,0,0,1,0},3,{0,1,4,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,0,0,1,0},3,{0,1,4,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,0,0,1,0},1,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{0,1,0,0,0,0}},
    {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{1,1,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,0,0,0,1},3,{0,1,5,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,0,0,0,1},3,{0,1,5,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,0,0,0,1},1,{1,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,0,0,0,1},1,{1,0,0,0,0,0},2,{1,2,0,0,0,0}}, {1,{0,0,0,0,0,1},1,{1,0,0,0,0,0},2,{2,2,0,0,0,0}},
    {-1,{0,0,0,0,0,1},1,{1,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,0,0,0,1},1,{5,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,0,0,1},1,{5,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{0,0,0,0,0,0},2,{0,1,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,0,0,0,0},2,{0,1,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,0,0,0,0},2,{0,1,0,0,0,0},2,{3,3,0,0,0,0}},
    {1,{0,0,0,0,0,0},2,{0,1,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{0,1,3,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{0,2,3,0,0,0}},
    {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{0,3,3,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{0,3,4,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,1,3,0,0,0}},
    {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,2,3,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{0,3,3,0,0,0}}, {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,3,4,0,0,0}},
};
const std::size_t kG2Count = sizeof(kG2) / sizeof(SlopeTerm);

const SlopeTerm kG3[] = {
    {1,{1,0,1,0,1,2},2,{0,1,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,0,1,2},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,0,1,2},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,0,1,0,1,2},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,0,1,2},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,0,1,2},2,{4,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,0,1,0,1,1},3,{0,1,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,0,1,1},3,{0,2,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,0,1,1},3,{0,2,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,1,0,1,1},3,{0,3,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,0,1,1},1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,0,1,0,1,1},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{1,0,1,0,1,1},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,0,1,0,1,1},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{1,0,1,0,1,1},3,{1,2,4,0,0,0},0,{0,0,0,0,0,0}},
    {1,{1,0,1,0,1,1},3,{2,4,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,0,1,1},1,{2,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,0,1,0,1,1},1,{2,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{1,0,1,0,1,1},1,{4,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,1,0,1,1},1,{4,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,1,0,1,0},2,{0,2,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{1,0,1,0,1,0},2,{0,2,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,1,0,1,0},2,{0,4,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,0,1,0,1,0},2,{0,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{1,0,1,0,1,0},2,{2,4,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,0,1,0,1,0},2,{2,4,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,1,0,1,0},2,{2,4,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{1,0,1,0,1,0},2,{2,4,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,1,0,0,2},3,{0,1,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,0,0,2},3,{0,3,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,1,0,0,2},3,{1,2,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,0,0,2},3,{2,3,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,1,0,0,2},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{1,0,1,0,0,2},1,{3,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,1,0,0,2},1,{3,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,1,0,0,2},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{1,0,1,0,0,2},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,1,0,0,2},1,{5,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,1,0,0,1},4,{0,1,2,3,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,1,0,0,1},4,{0,1,2,5,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,1,0,0,1},2,{0,1,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,0,1,0,0,1},2,{0,3,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{1,0,1,0,0,1},2,{0,5,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,0,1,0,0,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,1,0,0,1},2,{1,2,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{1,0,1,0,0,1},2,{2,3,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,0,1,0,0,1},2,{2,3,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,1,0,0,1},2,{2,3,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{1,0,1,0,0,1},2,{2,3,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,1,0,0,1},2,{2,5,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{1,0,1,0,0,1},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{1,0,1,0,0,1},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{1,0,1,0,0,1},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{1,0,1,0,0,1},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {-1,{1,0,1,0,0,1},0,{0,0,0,0,0,0},2,{3,3,0,0,0,0}}, {1,{1,0,1,0,0,1},0,{0,0,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{1,0,1,0,0,0},3,{0,1,2,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{1,0,1,0,0,0},3,{0,1,2,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,1,0,0,0},1,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{1,0,1,0,0,0},1,{0,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {-1,{1,0,1,0,0,0},1,{2,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{1,0,1,0,0,0},1,{2,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{1,0,1,0,0,0},1,{2,0,0,0,0,0},2,{3,3,0,0,0,0}},
    {1,{1,0,1,0,0,0},1,{2,0,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{1,0,0,0,1,2},3,{0,1,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,0,0,1,2},3,{0,5,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{1,0,0,0,1,2},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,0,0,1,2},3,{3,4,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,0,0,1,2},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{1,0,0,0,1,2},3,{4,5,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,0,0,1,2},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{1,0,0,0,1,2},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{1,0,0,0,1,1},4,{0,1,4,5,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,0,0,1,1},2,{0,1,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,0,0,1,1},2,{0,1,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{1,0,0,0,1,1},4,{0,3,4,5,0,0},0,{0,0,0,0,0,0}}, {1,{1,0,0,0,1,1},2,{0,3,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,0,0,0,1,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {2,{1,0,0,0,1,1},2,{0,5,0,0,0,0},1,{3,0,0,0,0,0}}, {-2,{1,0,0,0,1,1},2,{0,5,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{1,0,0,0,1,1},2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{1,0,0,0,1,1},2,{3,4,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{1,0,0,0,1,1},2,{3,4,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,0,1,1},2,{3,4,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{1,0,0,0,1,1},2,{3,4,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{1,0,0,0,1,1},2,{4,5,0,0,0,0},1,{1,0,0,0,0,0}}, {2,{1,0,0,0,1,1},2,{4,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {-2,{1,0,0,0,1,1},2,{4,5,0,0,0,0},1,{3,0,0,0,0,0}}, {2,{1,0,0,0,1,1},2,{4,5,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{1,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {1,{1,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{1,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{1,0,0,0,1,1},0,{0,0,0,0,0,0},2,{2,2,0,0,0,0}},
    {-1,{1,0,0,0,1,1},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}}, {1,{1,0,0,0,1,1},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{1,0,0,0,1,0},3,{0,1,4,0,0,0},1,{3,0,0,0,0,0}},
    {1,{1,0,0,0,1,0},3,{0,1,4,0,0,0},1,{4,0,0,0,0,0}}, {1,{1,0,0,0,1,0},4,{0,3,4,5,0,0},1,{1,0,0,0,0,0}}, {-1,{1,0,0,0,1,0},1,{4,0,0,0,0,0},2,{1,4,0,0,0,0}},
    {1,{1,0,0,0,1,0},1,{4,0,0,0,0,0},2,{2,2,0,0,0,0}}, {-2,{1,0,0,0,1,0},1,{4,0,0,0,0,0},2,{2,3,0,0,0,0}}, {2,{1,0,0,0,1,0},1,{4,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {1,{1,0,0,0,1,0},1,{4,0,0,0,0,0},2,{3,3,0,0,0,0}}, {-2,{1,0,0,0,1,0},1,{4,0,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{1,0,0,0,1,0},1,{4,0,0,0,0,0},2,{4,4,0,0,0,0}},
    {1,{1,0,0,0,0,2},4,{0,1,3,5,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,0,0,0,2},4,{0,3,5,5,0,0},0,{0,0,0,0,0,0}}, {-1,{1,0,0,0,0,2},2,{1,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{1,0,0,0,0,2},2,{3,5,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,0,0,0,2},2,{3,5,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,0,0,0,2},2,{5,5,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{1,0,0,0,0,1},3,{0,1,3,0,0,0},1,{2,0,0,0,0,0}}, {-1,{1,0,0,0,0,1},3,{0,1,3,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,0,0,0,1},3,{0,1,3,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{1,0,0,0,0,1},3,{0,1,5,0,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,0,0,1},3,{0,1,5,0,0,0},1,{3,0,0,0,0,0}}, {1,{1,0,0,0,0,1},4,{0,3,5,5,0,0},1,{1,0,0,0,0,0}},
    {-1,{1,0,0,0,0,1},4,{0,3,5,5,0,0},1,{2,0,0,0,0,0}}, {1,{1,0,0,0,0,1},4,{0,3,5,5,0,0},1,{3,0,0,0,0,0}}, {-2,{1,0,0,0,0,1},4,{0,3,5,5,0,0},1,{4,0,0,0,0,0}},
    {-1,{1,0,0,0,0,1},1,{1,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{1,0,0,0,0,1},1,{3,0,0,0,0,0},2,{1,2,0,0,0,0}}, {1,{1,0,0,0,0,1},1,{3,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{1,0,0,0,0,1},1,{3,0,0,0,0,0},2,{2,2,0,0,0,0}}, {-2,{1,0,0,0,0,1},1,{3,0,0,0,0,0},2,{2,3,0,0,0,0}}, {1,{1,0,0,0,0,1},1,{3,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {1,{1,0,0,0,0,1},1,{3,0,0,0,0,0},2,{3,3,0,0,0,0}}, {-1,{1,0,0,0,0,1},1,{3,0,0,0,0,0},2,{3,4,0,0,0,0}}, {-1,{1,0,0,0,0,1},1,{5,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {2,{1,0,0,0,0,1},1,{5,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-2,{1,0,0,0,0,1},1,{5,0,0,0,0,0},2,{3,3,0,0,0,0}}, {2,{1,0,0,0,0,1},1,{5,0,0,0,0,0},2,{3,4,0,0,0,0}},
    {1,{1,0,0,0,0,0},2,{0,1,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{1,0,0,0,0,0},2,{0,1,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{1,0,0,0,0,0},2,{0,1,0,0,0,0},2,{3,3,0,0,0,0}},
    {1,{1,0,0,0,0,0},2,{0,1,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{1,0,0,0,0,0},2,{0,3,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{1,0,0,0,0,0},2,{0,3,0,0,0,0},2,{2,4,0,0,0,0}},
    {1,{1,0,0,0,0,0},2,{0,3,0,0,0,0},2,{3,4,0,0,0,0}}, {-1,{1,0,0,0,0,0},2,{0,3,0,0,0,0},2,{4,4,0,0,0,0}}, {-1,{1,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,2,3,0,0,0}},
    {1,{1,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,3,3,0,0,0}}, {-1,{1,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,3,4,0,0,0}}, {1,{1,0,0,0,0,0},0,{0,0,0,0,0,0},3,{2,2,3,0,0,0}},
    {-2,{1,0,0,0,0,0},0,{0,0,0,0,0,0},3,{2,3,3,0,0,0}}, {2,{1,0,0,0,0,0},0,{0,0,0,0,0,0},3,{2,3,4,0,0,0}}, {1,{1,0,0,0,0,0},0,{0,0,0,0,0,0},3,{3,3,3,0,0,0}},
    {-2,{1,0,0,0,0,0},0,{0,0,0,0,0,0},3,{3,3,4,0,0,0}}, {1,{1,0,0,0,0,0},0,{0,0,0,0,0,0},3,{3,4,4,0,0,0}}, {-1,{0,0,1,0,1,2},3,{1,2,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,1,2},3,{1,3,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,2},3,{1,4,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,2},1,{1,0,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,1,2},1,{1,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,2},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,1,2},3,{2,3,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,1,2},1,{5,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,2},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,1,2},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},4,{1,2,3,4,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{1,2,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{1,2,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},2,{1,4,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{1,4,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},2,{1,4,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{1,4,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,1,0,1,1},4,{2,3,4,5,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},2,{2,3,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{2,3,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{2,3,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},2,{2,3,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{2,3,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{2,5,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},2,{3,4,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{4,5,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{4,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}},
    {-1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{0,4,0,0,0,0}}, {-1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{1,1,0,0,0,0}}, {2,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{2,2,0,0,0,0}},
    {1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,1,0,1,0},3,{2,3,4,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,0,1,0},3,{2,3,4,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},3,{2,3,4,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,1,0},3,{2,3,4,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,1,0,1,0},1,{2,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{2,0,0,0,0,0},2,{0,4,0,0,0,0}}, {1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{0,1,0,0,0,0}},
    {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{1,1,0,0,0,0}}, {2,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{2,2,0,0,0,0}},
    {1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,1,0,0,2},4,{1,2,5,5,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,0,0,2},2,{1,3,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,0,2},2,{1,3,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,0,2},2,{1,3,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,0,2},2,{1,3,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,0,2},2,{1,5,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,0,2},4,{2,3,5,5,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,0,2},2,{3,5,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,1,0,0,2},2,{5,5,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,0,2},2,{5,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,1,0,0,1},3,{1,2,3,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},3,{1,2,3,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,0,1},3,{1,2,3,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},3,{1,2,3,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},3,{1,2,5,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,1,0,0,1},3,{1,2,5,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},3,{1,2,5,0,0,0},1,{2,0,0,0,0,0}}, {2,{0,0,1,0,0,1},3,{1,2,5,0,0,0},1,{3,0,0,0,0,0}}, {-2,{0,0,1,0,0,1},3,{1,2,5,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,1,0,0,1},1,{1,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{1,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,1,0,0,1},1,{1,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {-1,{0,0,1,0,0,1},1,{1,0,0,0,0,0},2,{3,3,0,0,0,0}}, {1,{0,0,1,0,0,1},1,{1,0,0,0,0,0},2,{3,4,0,0,0,0}}, {-1,{0,0,1,0,0,1},3,{2,3,5,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,0,0,1},3,{2,3,5,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},3,{2,3,5,0,0,0},1,{3,0,0,0,0,0}}, {2,{0,0,1,0,0,1},3,{2,3,5,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},1,{3,0,0,0,0,0},2,{0,4,0,0,0,0}}, {1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {-1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{1,1,0,0,0,0}}, {2,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {2,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{2,2,0,0,0,0}}, {1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {-2,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{0,4,0,0,0,0}},
    {-1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{2,3,0,0,0,0}},
    {-1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{3,3,0,0,0,0}}, {2,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{3,4,0,0,0,0}},
    {-1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{4,4,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{2,4,0,0,0,0}},
    {-1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{4,4,0,0,0,0}}, {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{0,1,4,0,0,0}},
    {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{0,2,4,0,0,0}}, {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,1,4,0,0,0}}, {2,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,2,4,0,0,0}},
    {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,3,4,0,0,0}}, {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,4,4,0,0,0}}, {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{2,2,4,0,0,0}},
    {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{2,3,4,0,0,0}}, {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{2,4,4,0,0,0}}, {-1,{0,0,0,0,1,2},4,{1,3,4,5,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,0,0,1,2},4,{1,4,5,5,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,0,0,1,2},2,{1,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,0,1,2},2,{1,5,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,0,0,1,2},2,{3,5,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,2},2,{5,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},3,{1,3,4,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,0,0,1,1},3,{1,3,4,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},3,{1,3,4,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,0,0,1,1},3,{1,4,5,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,0,0,1,1},3,{1,4,5,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,0,1,1},3,{1,4,5,0,0,0},1,{2,0,0,0,0,0}}, {-2,{0,0,0,0,1,1},3,{1,4,5,0,0,0},1,{3,0,0,0,0,0}},
    {2,{0,0,0,0,1,1},3,{1,4,5,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},1,{1,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,0,1,1},1,{1,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {1,{0,0,0,0,1,1},1,{1,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,0,0,1,1},1,{1,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,0,0,1,1},3,{3,4,5,0,0,0},1,{0,0,0,0,0,0}},
    {1,{0,0,0,0,1,1},3,{3,4,5,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,0,1,1},1,{3,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,0,0,1,1},1,{3,0,0,0,0,0},2,{1,1,0,0,0,0}},
    {1,{0,0,0,0,1,1},1,{3,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,0,0,1,1},1,{3,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,0,0,1,1},1,{3,0,0,0,0,0},2,{1,4,0,0,0,0}},
    {-1,{0,0,0,0,1,1},1,{5,0,0,0,0,0},2,{0,2,0,0,0,0}}, {2,{0,0,0,0,1,1},1,{5,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-2,{0,0,0,0,1,1},1,{5,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {-1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{0,4,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{1,3,0,0,0,0}},
    {-1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{2,3,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{2,4,0,0,0,0}},
    {1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{3,3,0,0,0,0}}, {-2,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{4,4,0,0,0,0}},
    {1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{0,3,0,0,0,0}},
    {-1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{0,4,0,0,0,0}}, {-1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{1,1,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,0,0,1,0},0,{0,0,0,0,0,0},3,{0,2,3,0,0,0}},
    {-1,{0,0,0,0,1,0},0,{0,0,0,0,0,0},3,{0,2,4,0,0,0}}, {-1,{0,0,0,0,1,0},0,{0,0,0,0,0,0},3,{0,3,3,0,0,0}}, {2,{0,0,0,0,1,0},0,{0,0,0,0,0,0},3,{0,3,4,0,0,0}},
    {-1,{0,0,0,0,1,0},0,{0,0,0,0,0,0},3,{0,4,4,0,0,0}}, {1,{0,0,0,0,0,2},3,{1,3,5,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,0,0,2},3,{1,3,5,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,0,0,0,2},3,{1,3,5,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,0,0,0,2},3,{1,3,5,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,0,0,0,2},3,{1,5,5,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,0,0,0,2},3,{1,5,5,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,0,0,0,2},3,{3,5,5,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,0,0,0,2},3,{3,5,5,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{0,4,0,0,0,0}},
    {-1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{1,2,0,0,0,0}}, {1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{1,4,0,0,0,0}},
    {1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{2,2,0,0,0,0}}, {-2,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{2,3,0,0,0,0}}, {1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{2,4,0,0,0,0}},
    {1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{3,3,0,0,0,0}}, {-1,{0,0,0,0,0,1},2,{1,3,0,0,0,0},2,{3,4,0,0,0,0}}, {-1,{0,0,0,0,0,1},2,{1,5,0,0,0,0},2,{0,2,0,0,0,0}},
    {1,{0,0,0,0,0,1},2,{1,5,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,0,0,1},2,{1,5,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,0,0,0,1},2,{1,4,0,0,0,0},2,{1,3,0,0,0,0}},
    {-1,{0,0,0,0,0,1},2,{1,4,0,0,0,0},2,{2,2,0,0,0,0}}, {3,{0,0,0,0,0,1},2,{1,5,0,0,0,0},2,{2,3,0,0,0,0}}, {-2,{0,0,0,0,0,1},2,{1,5,0,0,0,0},2,{2,4,0,0,0,0}},
    {-2,{0,0,0,0,0,1},2,{1,5,0,0,0,0},2,{3,3,0,0,0,0}}, {2,{0,0,0,0,0,1},2,{1,5,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{0,1,0,0,0,0}},
    {-1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{0,3,0,0,0,0}}, {-2,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{0,4,0,0,0,0}},
    {-1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{1,1,0,0,0,0}}, {1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{1,3,0,0,0,0}},
    {2,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{0,2,3,0,0,0}}, {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{0,3,3,0,0,0}},
    {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{0,3,4,0,0,0}}, {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{1,2,3,0,0,0}}, {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{1,2,4,0,0,0}},
    {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{1,3,3,0,0,0}}, {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{1,3,4,0,0,0}}, {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,2,3,0,0,0}},
    {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,2,4,0,0,0}}, {-2,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,3,3,0,0,0}}, {3,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,3,4,0,0,0}},
    {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,4,4,0,0,0}}, {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{3,3,3,0,0,0}}, {-2,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{3,3,4,0,0,0}},
    {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{3,4,4,0,0,0}}, {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,1,4,0,0,0}}, {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,2,4,0,0,0}},
    {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,3,4,0,0,0}}, {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,4,4,0,0,0}}, {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,1,4,0,0,0}},
    {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,2,4,0,0,0}}, {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,3,4,0,0,0}}, {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,4,4,0,0,0}},
};
const std::size_t kG3Count = sizeof(kG3) / sizeof(SlopeTerm);

const SlopeTerm kR1[] = {
    {1,{0,0,0,0,1,1},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,0,0,1,1},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},2,{4,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,0,0,1,0},3,{0,3,4,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,0,0,0,1},3,{0,3,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,0,0,0,1},1,{5,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,0,0,0,0},2,{0,3,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{3,3,0,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},2,{3,4,0,0,0,0}},
};
const std::size_t kR1Count = sizeof(kR1) / sizeof(SlopeTerm);

const SlopeTerm kR2[] = {
    {1,{0,0,1,0,1,2},2,{0,1,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,2},2,{0,5,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,2},2,{1,2,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,0,1,2},2,{2,3,0,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,2},2,{3,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,2},2,{4,5,0,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},2,{1,4,0,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,1},3,{0,2,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},3,{0,2,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},3,{0,3,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,1},1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},1,{0,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},1,{0,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},1,{0,0,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},3,{1,2,4,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},3,{2,4,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},1,{2,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,1},1,{2,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},1,{4,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,1,1},1,{4,0,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,1,0,1,0},2,{0,2,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,1,0,1,0},2,{0,2,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,1,0,1,0},2,{0,4,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},2,{0,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,1,0,1,0},2,{2,4,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,1,0,0,2},3,{0,1,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,0,2},3,{0,3,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,0,2},3,{1,2,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,0,2},3,{2,3,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,0,2},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,0,0,2},1,{3,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,0,2},1,{3,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,0,2},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,1,0,0,2},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,0,2},1,{5,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,0,1},4,{0,1,2,3,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},4,{0,1,2,5,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,0,1},2,{0,1,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},2,{0,3,0,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,1,0,0,1},2,{0,5,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},2,{1,2,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},2,{2,3,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,0,1},2,{2,3,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},2,{2,3,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,1,0,0,1},2,{2,3,0,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,1,0,0,1},2,{2,5,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {-1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{3,3,0,0,0,0}}, {1,{0,0,1,0,0,1},0,{0,0,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{0,0,1,0,0,0},3,{0,1,2,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,1,0,0,0},3,{0,1,2,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,1,0,0,0},1,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,1,0,0,0},1,{0,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {-1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{3,3,0,0,0,0}},
    {1,{0,0,1,0,0,0},1,{2,0,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{0,0,0,0,1,2},3,{0,1,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,0,0,1,2},3,{0,5,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,0,0,1,2},1,{1,0,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,0,0,1,2},3,{3,4,5,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,0,0,1,2},1,{3,0,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,0,0,1,2},3,{4,5,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,0,0,1,2},1,{5,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,0,1,2},1,{5,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,0,0,1,1},4,{0,1,4,5,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},2,{0,1,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,0,0,1,1},2,{0,1,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,0,0,1,1},4,{0,3,4,5,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,0,0,1,1},2,{0,3,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {2,{0,0,0,0,1,1},2,{0,5,0,0,0,0},1,{3,0,0,0,0,0}}, {-2,{0,0,0,0,1,1},2,{0,5,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,0,0,1,1},2,{3,4,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},2,{3,4,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,0,0,1,1},2,{3,4,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,0,0,1,1},2,{3,4,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},2,{4,5,0,0,0,0},1,{1,0,0,0,0,0}}, {2,{0,0,0,0,1,1},2,{4,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {-2,{0,0,0,0,1,1},2,{4,5,0,0,0,0},1,{3,0,0,0,0,0}}, {2,{0,0,0,0,1,1},2,{4,5,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{2,2,0,0,0,0}},
    {-1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}}, {1,{0,0,0,0,1,1},0,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,0,0,1,0},3,{0,1,4,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,0,0,1,0},3,{0,1,4,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,0,0,1,0},3,{0,3,4,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,1,0},3,{0,3,4,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,0,0,1,0},3,{0,3,4,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,0,0,1,0},3,{0,3,4,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{0,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {-1,{0,0,0,0,1,0},1,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{0,0,0,0,0,0},2,{3,3,0,0,0,0}}, {2,{0,0,0,0,1,0},1,{0,0,0,0,0,0},2,{3,4,0,0,0,0}},
    {-1,{0,0,0,0,1,0},1,{0,0,0,0,0,0},2,{4,4,0,0,0,0}}, {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{1,2,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {-1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{2,2,0,0,0,0}}, {-2,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {2,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{3,3,0,0,0,0}}, {-2,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{3,4,0,0,0,0}},
    {1,{0,0,0,0,1,0},1,{4,0,0,0,0,0},2,{4,4,0,0,0,0}}, {1,{0,0,0,0,0,2},4,{0,1,3,5,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,0,0,0,2},4,{0,3,5,5,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,0,0,0,2},2,{1,5,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,0,0,0,2},2,{3,5,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,0,0,0,2},2,{3,5,0,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,0,0,0,2},2,{5,5,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,0,0,0,1},3,{0,1,3,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,0,0,0,1},3,{0,1,3,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,0,0,0,1},3,{0,1,3,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,0,0,0,1},3,{0,1,5,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,0,0,0,1},3,{0,1,5,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,0,0,0,1},3,{0,3,5,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,0,0,0,1},3,{0,3,5,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,0,0,0,1},3,{0,3,5,0,0,0},1,{3,0,0,0,0,0}},
    {-2,{0,0,0,0,0,1},3,{0,3,5,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,0,0,0,1},1,{1,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},2,{2,2,0,0,0,0}}, {-2,{0,0,0,0,0,1},1,{3,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},2,{3,3,0,0,0,0}}, {-1,{0,0,0,0,0,1},1,{3,0,0,0,0,0},2,{3,4,0,0,0,0}},
    {-1,{0,0,0,0,0,1},1,{5,0,0,0,0,0},2,{1,3,0,0,0,0}}, {2,{0,0,0,0,0,1},1,{5,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-2,{0,0,0,0,0,1},1,{5,0,0,0,0,0},2,{3,3,0,0,0,0}},
    {2,{0,0,0,0,0,1},1,{5,0,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{0,0,0,0,0,0},2,{0,1,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,0,0,0,0},2,{0,1,0,0,0,0},2,{2,4,0,0,0,0}},
    {-1,{0,0,0,0,0,0},2,{0,1,0,0,0,0},2,{3,3,0,0,0,0}}, {1,{0,0,0,0,0,0},2,{0,1,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{0,0,0,0,0,0},2,{0,3,0,0,0,0},2,{1,4,0,0,0,0}},
    {-1,{0,0,0,0,0,0},2,{0,3,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,0,0,0,0,0},2,{0,3,0,0,0,0},2,{3,4,0,0,0,0}}, {-1,{0,0,0,0,0,0},2,{0,3,0,0,0,0},2,{4,4,0,0,0,0}},
    {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,2,3,0,0,0}}, {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,3,3,0,0,0}}, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,3,4,0,0,0}},
    {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{2,2,3,0,0,0}}, {-2,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{2,3,3,0,0,0}}, {2,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{2,3,4,0,0,0}},
    {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{3,3,3,0,0,0}}, {-2,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{3,3,4,0,0,0}}, {1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{3,4,4,0,0,0}},
};
const std::size_t kR2Count = sizeof(kR2) / sizeof(SlopeTerm);

const SlopeTerm kR3[] = {
    {1,{0,0,2,0,1,1},3,{0,1,2,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,2,0,1,1},3,{0,1,4,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,2,0,1,1},3,{1,2,2,0,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,2,0,1,1},3,{1,2,4,0,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,2,0,1,1},3,{2,2,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,2,0,1,1},3,{2,3,4,0,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,2,0,1,1},1,{2,0,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,2,0,1,1},1,{2,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,2,0,1,1},1,{2,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,2,0,1,1},1,{4,0,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,2,0,1,1},1,{4,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,2,0,1,1},1,{4,0,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,2,0,1,0},4,{0,2,2,3,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,2,0,1,0},4,{0,2,3,4,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,2,0,1,0},2,{0,2,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,2,0,1,0},2,{0,2,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,2,0,1,0},2,{0,4,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,2,0,1,0},2,{0,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,2,0,1,0},2,{2,2,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,2,0,1,0},2,{2,4,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,2,0,0,1},4,{0,1,2,3,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,2,0,0,1},4,{0,1,2,5,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,2,0,0,1},2,{0,1,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,2,0,0,1},4,{0,2,3,5,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,2,0,0,1},2,{0,5,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,2,0,0,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,2,0,0,1},4,{1,2,2,5,0,0},0,{0,0,0,0,0,0}},
    {-1,{0,0,2,0,0,1},2,{1,2,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,2,0,0,1},2,{1,2,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,2,0,0,1},2,{1,2,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,2,0,0,1},2,{1,2,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,2,0,0,1},4,{2,2,3,5,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,2,0,0,1},2,{2,3,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,2,0,0,1},2,{2,3,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,2,0,0,1},2,{2,3,0,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,2,0,0,1},2,{2,5,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,2,0,0,1},2,{2,5,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,2,0,0,1},0,{0,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,2,0,0,1},0,{0,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {1,{0,0,2,0,0,1},0,{0,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,2,0,0,1},0,{0,0,0,0,0,0},2,{1,1,0,0,0,0}}, {2,{0,0,2,0,0,1},0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,2,0,0,1},0,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,2,0,0,1},0,{0,0,0,0,0,0},2,{2,2,0,0,0,0}}, {1,{0,0,2,0,0,1},0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {1,{0,0,2,0,0,0},5,{0,1,2,2,3,0},0,{0,0,0,0,0,0}}, {-1,{0,0,2,0,0,0},3,{0,1,2,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,2,0,0,0},3,{0,1,2,0,0,0},1,{4,0,0,0,0,0}},
    {-1,{0,0,2,0,0,0},3,{0,2,3,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,2,0,0,0},1,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,2,0,0,0},1,{0,0,0,0,0,0},2,{2,4,0,0,0,0}},
    {-1,{0,0,2,0,0,0},3,{1,2,2,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,2,0,0,0},3,{1,2,2,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,2,0,0,0},3,{1,2,2,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,2,0,0,0},3,{1,2,2,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,2,0,0,0},3,{1,2,2,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,2,0,0,0},3,{2,2,3,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,2,0,0,0},3,{2,2,3,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,2,0,0,0},3,{2,2,3,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,2,0,0,0},3,{2,2,3,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{0,3,0,0,0,0}},
    {-1,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{1,1,0,0,0,0}}, {2,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{2,2,0,0,0,0}}, {1,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {-1,{0,0,2,0,0,0},1,{2,0,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,1,0,1,1},4,{0,1,3,4,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},4,{0,1,4,5,0,0},0,{0,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},2,{0,1,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,1,1},4,{0,2,3,5,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{0,5,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,1,1},4,{1,2,4,5,0,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{1,2,0,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},2,{1,2,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{1,2,0,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},4,{2,3,4,5,0,0},0,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{2,3,0,0,0,0},1,{0,0,0,0,0,0}}, {2,{0,0,1,0,1,1},2,{2,3,0,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},2,{2,5,0,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{3,4,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{3,4,0,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,0,1,1},2,{4,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,1,0,1,1},2,{4,5,0,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,1},2,{4,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{0,1,0,0,0,0}}, {1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{1,1,0,0,0,0}}, {-1,{0,0,1,0,1,1},0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,1,0,1,0},5,{0,1,2,3,4,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,1,0},3,{0,1,4,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},3,{0,1,4,0,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,1,0,1,0},3,{0,2,3,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,0},3,{0,2,3,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},3,{0,2,3,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,1,0,1,0},3,{0,2,3,0,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},3,{0,3,4,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,0},1,{0,0,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,1,0,1,0},1,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,1,0,1,0},1,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{0,0,0,0,0,0},2,{2,2,0,0,0,0}},
    {1,{0,0,1,0,1,0},1,{0,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{0,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,0,1,0,1,0},3,{1,2,4,0,0,0},1,{0,0,0,0,0,0}},
    {-1,{0,0,1,0,1,0},3,{1,2,4,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,1,0,1,0},3,{1,2,4,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},3,{1,2,4,0,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,1,0,1,0},3,{1,2,4,0,0,0},1,{4,0,0,0,0,0}}, {1,{0,0,1,0,1,0},3,{2,3,4,0,0,0},1,{1,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},3,{2,3,4,0,0,0},1,{2,0,0,0,0,0}},
    {1,{0,0,1,0,1,0},3,{2,3,4,0,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,1,0,1,0},3,{2,3,4,0,0,0},1,{4,0,0,0,0,0}}, {-2,{0,0,1,0,1,0},1,{2,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {1,{0,0,1,0,1,0},1,{2,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{2,0,0,0,0,0},2,{0,4,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{0,1,0,0,0,0}},
    {2,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{0,4,0,0,0,0}},
    {1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{1,1,0,0,0,0}}, {-2,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{1,2,0,0,0,0}}, {1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{2,2,0,0,0,0}}, {-1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {1,{0,0,1,0,1,0},1,{4,0,0,0,0,0},2,{2,4,0,0,0,0}}, {1,{0,0,1,0,0,1},5,{0,1,2,3,5,0},0,{0,0,0,0,0,0}}, {1,{0,0,1,0,0,1},3,{0,1,3,0,0,0},1,{2,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},3,{0,1,3,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,0,1},3,{0,1,5,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},3,{0,1,5,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},3,{0,3,5,0,0,0},1,{1,0,0,0,0,0}}, {-2,{0,0,1,0,0,1},3,{1,2,5,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,1,0,0,1},3,{1,2,5,0,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,1,0,0,1},1,{1,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,1,0,0,1},1,{1,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{1,0,0,0,0,0},2,{2,2,0,0,0,0}},
    {1,{0,0,1,0,0,1},1,{1,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,1,0,0,1},3,{2,3,5,0,0,0},1,{0,0,0,0,0,0}}, {1,{0,0,1,0,0,1},3,{2,3,5,0,0,0},1,{1,0,0,0,0,0}},
    {1,{0,0,1,0,0,1},3,{2,3,5,0,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,1,0,0,1},3,{2,3,5,0,0,0},1,{3,0,0,0,0,0}}, {1,{0,0,1,0,0,1},1,{3,0,0,0,0,0},2,{0,1,0,0,0,0}},
    {-1,{0,0,1,0,0,1},1,{3,0,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,1,0,0,1},1,{3,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{3,0,0,0,0,0},2,{1,1,0,0,0,0}},
    {1,{0,0,1,0,0,1},1,{3,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{3,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{0,3,0,0,0,0}},
    {1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{1,3,0,0,0,0}}, {-1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{2,2,0,0,0,0}},
    {1,{0,0,1,0,0,1},1,{5,0,0,0,0,0},2,{2,3,0,0,0,0}}, {2,{0,0,1,0,0,0},4,{0,1,2,3,0,0},1,{2,0,0,0,0,0}}, {-2,{0,0,1,0,0,0},4,{0,1,2,3,0,0},1,{3,0,0,0,0,0}},
    {1,{0,0,1,0,0,0},4,{0,1,2,3,0,0},1,{4,0,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{0,1,0,0,0,0},2,{2,3,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{0,1,0,0,0,0},2,{2,4,0,0,0,0}},
    {1,{0,0,1,0,0,0},2,{0,1,0,0,0,0},2,{3,3,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{0,1,0,0,0,0},2,{3,4,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{0,3,0,0,0,0},2,{1,4,0,0,0,0}},
    {-2,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{0,3,0,0,0,0}}, {2,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{1,2,0,0,0,0}},
    {-1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{1,3,0,0,0,0}}, {-2,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{2,2,0,0,0,0}}, {3,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{2,3,0,0,0,0}},
    {-2,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{3,3,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{1,2,0,0,0,0},2,{3,4,0,0,0,0}},
    {1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{0,2,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{0,3,0,0,0,0}},
    {-1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{0,4,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{1,1,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{1,4,0,0,0,0}},
    {1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{2,2,0,0,0,0}}, {-2,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{2,3,0,0,0,0}}, {1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{2,4,0,0,0,0}},
    {1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{3,3,0,0,0,0}}, {-1,{0,0,1,0,0,0},2,{2,3,0,0,0,0},2,{3,4,0,0,0,0}}, {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{0,1,2,0,0,0}},
    {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{0,1,3,0,0,0}}, {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{0,2,2,0,0,0}}, {2,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{0,2,3,0,0,0}},
    {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{0,3,3,0,0,0}}, {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{0,3,4,0,0,0}}, {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,1,2,0,0,0}},
    {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,1,3,0,0,0}}, {2,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,2,2,0,0,0}}, {-3,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,2,3,0,0,0}},
    {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,2,4,0,0,0}}, {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,3,3,0,0,0}}, {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{1,3,4,0,0,0}},
    {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{2,2,2,0,0,0}}, {2,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{2,2,3,0,0,0}}, {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{2,2,4,0,0,0}},
    {-1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{2,3,3,0,0,0}}, {1,{0,0,1,0,0,0},0,{0,0,0,0,0,0},3,{2,3,4,0,0,0}}, {-1,{0,0,0,0,1,1},5,{0,1,3,4,5,0},0,{0,0,0,0,0,0}},
    {1,{0,0,0,0,1,1},3,{0,3,5,0,0,0},1,{1,0,0,0,0,0}}, {1,{0,0,0,0,1,1},3,{1,4,5,0,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,0,0,1,1},1,{1,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {-1,{0,0,0,0,1,1},1,{1,0,0,0,0,0},2,{1,2,0,0,0,0}}, {1,{0,0,0,0,1,1},3,{3,4,5,0,0,0},1,{0,0,0,0,0,0}}, {-1,{0,0,0,0,1,1},3,{3,4,5,0,0,0},1,{1,0,0,0,0,0}},
    {-1,{0,0,0,0,1,1},1,{3,0,0,0,0,0},2,{0,1,0,0,0,0}}, {1,{0,0,0,0,1,1},1,{3,0,0,0,0,0},2,{1,1,0,0,0,0}}, {-1,{0,0,0,0,1,1},1,{5,0,0,0,0,0},2,{0,2,0,0,0,0}},
    {-1,{0,0,0,0,1,0},4,{0,1,3,4,0,0},1,{2,0,0,0,0,0}}, {1,{0,0,0,0,1,0},4,{0,1,3,4,0,0},1,{3,0,0,0,0,0}}, {-1,{0,0,0,0,1,0},4,{0,1,3,4,0,0},1,{4,0,0,0,0,0}},
    {1,{0,0,0,0,1,0},2,{0,3,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,0,0,1,0},2,{0,3,0,0,0,0},2,{1,3,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{0,3,0,0,0,0},2,{1,4,0,0,0,0}},
    {1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{1,2,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{2,2,0,0,0,0}},
    {-1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{2,3,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{1,4,0,0,0,0},2,{2,4,0,0,0,0}}, {-1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{0,1,0,0,0,0}},
    {1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{0,2,0,0,0,0}}, {-1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{0,4,0,0,0,0}},
    {1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{1,1,0,0,0,0}}, {-1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{1,2,0,0,0,0}}, {1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{1,3,0,0,0,0}},
    {-1,{0,0,0,0,1,0},2,{3,4,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,{0,0,0,0,1,0},0,{0,0,0,0,0,0},3,{0,2,2,0,0,0}}, {1,{0,0,0,0,1,0},0,{0,0,0,0,0,0},3,{0,2,3,0,0,0}},
    {-1,{0,0,0,0,1,0},0,{0,0,0,0,0,0},3,{0,2,4,0,0,0}}, {1,{0,0,0,0,0,1},4,{0,1,3,5,0,0},1,{2,0,0,0,0,0}}, {-1,{0,0,0,0,0,1},4,{0,1,3,5,0,0},1,{3,0,0,0,0,0}},
    {-1,{0,0,0,0,0,1},2,{1,5,0,0,0,0},2,{2,2,0,0,0,0}}, {1,{0,0,0,0,0,1},2,{1,5,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{0,2,0,0,0,0}},
    {1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{0,3,0,0,0,0}}, {1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,{0,0,0,0,0,1},2,{3,5,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,{0,0,0,0,0,0},3,{0,1,3,0,0,0},2,{2,2,0,0,0,0}}, {-2,{0,0,0,0,0,0},3,{0,1,3,0,0,0},2,{2,3,0,0,0,0}}, {1,{0,0,0,0,0,0},3,{0,1,3,0,0,0},2,{2,4,0,0,0,0}},
    {1,{0,0,0,0,0,0},3,{0,1,3,0,0,0},2,{3,3,0,0,0,0}}, {-1,{0,0,0,0,0,0},3,{0,1,3,0,0,0},2,{3,4,0,0,0,0}}, {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{0,2,2,0,0,0}},
    {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{0,2,3,0,0,0}}, {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{1,2,2,0,0,0}}, {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{1,2,3,0,0,0}},
    {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,2,2,0,0,0}}, {2,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,2,3,0,0,0}}, {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,2,4,0,0,0}},
    {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,3,3,0,0,0}}, {1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{2,3,4,0,0,0}}, {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,1,2,0,0,0}},
    {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,1,3,0,0,0}}, {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,2,2,0,0,0}}, {2,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,2,3,0,0,0}},
    {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,2,4,0,0,0}}, {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,3,3,0,0,0}}, {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{0,3,4,0,0,0}},
    {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,1,2,0,0,0}}, {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,1,3,0,0,0}}, {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,2,2,0,0,0}},
    {-2,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,2,3,0,0,0}}, {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,2,4,0,0,0}}, {1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,3,3,0,0,0}},
    {-1,{0,0,0,0,0,0},1,{3,0,0,0,0,0},3,{1,3,4,0,0,0}},
};
const std::size_t kR3Count = sizeof(kR3) / sizeof(SlopeTerm);

// corrections: remove_index < 0 means the printed term could not be represented
// in (y, a, gamma) form and was left out of the base table.
const SlopePolyFix kSlopeFixes[] = {
    {SlopePolyId::F2, -1, {-1,{1,0,1,1,0,0},3,{0,2,3,0,0,0},0,{0,0,0,0,0,0}}, "- y_0 y_2 y_3 a^{q^3q^2+1}"},
    {SlopePolyId::F2, -1, {-1,{1,0,0,1,0,0},2,{0,3,0,0,0,0},1,{1,0,0,0,0,0}}, "- y_0 y_3 a^{q^3+1}b^q"},
    {SlopePolyId::G2, 175, {-1,{0,0,0,0,0,0},0,{0,0,0,0,0,0},3,{1,3,3,0,0,0}}, "- \\gamma^{2q^3+1} (second occurrence)"},
    {SlopePolyId::G3, -1, {-1,{0,0,0,0,0,0},1,{1,0,0,0,0,0},3,{0,2,4,0,0,0}}, "- a^q \\gamma^{q^4+q^+12}"},
};
const std::size_t kSlopeFixCount = sizeof(kSlopeFixes) / sizeof(SlopePolyFix);

const CoefTerm kCubicB[] = {
    {1,0,{0,0,0,0,0,0},3,{0,1,3,0,0,0}}, {1,0,{0,0,0,0,0,0},3,{0,1,4,0,0,0}}, {1,0,{0,0,0,0,0,0},3,{0,2,3,0,0,0}}, {-1,0,{0,0,0,0,0,0},3,{0,2,5,0,0,0}},
    {-1,0,{0,0,0,0,0,0},3,{0,3,4,0,0,0}}, {-1,0,{0,0,0,0,0,0},3,{0,3,5,0,0,0}}, {-1,0,{0,0,0,0,0,0},3,{1,2,4,0,0,0}}, {-1,0,{0,0,0,0,0,0},3,{1,2,5,0,0,0}},
    {-1,0,{0,0,0,0,0,0},3,{1,3,4,0,0,0}}, {1,0,{0,0,0,0,0,0},3,{1,4,4,0,0,0}}, {1,0,{0,0,0,0,0,0},3,{2,3,5,0,0,0}}, {1,0,{0,0,0,0,0,0},3,{2,4,5,0,0,0}},
};
const std::size_t kCubicBCount = sizeof(kCubicB) / sizeof(CoefTerm);

const CoefTerm kCubicC[] = {
    {1,3,{0,1,4,0,0,0},0,{0,0,0,0,0,0}}, {1,3,{0,2,3,0,0,0},0,{0,0,0,0,0,0}}, {-1,3,{0,2,5,0,0,0},0,{0,0,0,0,0,0}}, {-1,3,{0,3,4,0,0,0},0,{0,0,0,0,0,0}},
    {1,1,{0,0,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,1,{0,0,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,3,{1,2,4,0,0,0},0,{0,0,0,0,0,0}}, {1,3,{2,4,5,0,0,0},0,{0,0,0,0,0,0}},
    {-1,1,{2,0,0,0,0,0},1,{1,0,0,0,0,0}}, {1,1,{2,0,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,1,{4,0,0,0,0,0},1,{3,0,0,0,0,0}}, {1,1,{4,0,0,0,0,0},1,{5,0,0,0,0,0}},
};
const std::size_t kCubicCCount = sizeof(kCubicC) / sizeof(CoefTerm);

const CoefTerm kCubicD[] = {
    {1,2,{0,2,0,0,0,0},1,{3,0,0,0,0,0}}, {-1,2,{0,2,0,0,0,0},1,{5,0,0,0,0,0}}, {1,2,{0,4,0,0,0,0},1,{1,0,0,0,0,0}}, {-1,2,{0,4,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,2,{2,4,0,0,0,0},1,{1,0,0,0,0,0}}, {1,2,{2,4,0,0,0,0},1,{5,0,0,0,0,0}},
};
const std::size_t kCubicDCount = sizeof(kCubicD) / sizeof(CoefTerm);

const CoefTerm kCubicE[] = {
    {1,2,{0,1,0,0,0,0},1,{3,0,0,0,0,0}}, {1,2,{0,1,0,0,0,0},1,{4,0,0,0,0,0}}, {1,2,{0,3,0,0,0,0},1,{1,0,0,0,0,0}}, {1,2,{0,3,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,2,{0,3,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,2,{0,3,0,0,0,0},1,{5,0,0,0,0,0}}, {-1,2,{0,5,0,0,0,0},1,{2,0,0,0,0,0}}, {-1,2,{0,5,0,0,0,0},1,{3,0,0,0,0,0}},
    {-1,2,{1,2,0,0,0,0},1,{4,0,0,0,0,0}}, {-1,2,{1,2,0,0,0,0},1,{5,0,0,0,0,0}}, {1,2,{1,4,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,2,{1,4,0,0,0,0},1,{2,0,0,0,0,0}},
    {-1,2,{1,4,0,0,0,0},1,{3,0,0,0,0,0}}, {1,2,{1,4,0,0,0,0},1,{5,0,0,0,0,0}}, {1,2,{2,3,0,0,0,0},1,{0,0,0,0,0,0}}, {1,2,{2,3,0,0,0,0},1,{5,0,0,0,0,0}},
    {-1,2,{2,5,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,2,{2,5,0,0,0,0},1,{1,0,0,0,0,0}}, {1,2,{2,5,0,0,0,0},1,{3,0,0,0,0,0}}, {1,2,{2,5,0,0,0,0},1,{4,0,0,0,0,0}},
    {-1,2,{3,4,0,0,0,0},1,{0,0,0,0,0,0}}, {-1,2,{3,4,0,0,0,0},1,{1,0,0,0,0,0}}, {1,2,{4,5,0,0,0,0},1,{1,0,0,0,0,0}}, {1,2,{4,5,0,0,0,0},1,{2,0,0,0,0,0}},
    {1,0,{0,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,0,{0,0,0,0,0,0},2,{0,5,0,0,0,0}}, {-1,0,{0,0,0,0,0,0},2,{1,2,0,0,0,0}}, {1,0,{0,0,0,0,0,0},2,{2,3,0,0,0,0}},
    {-1,0,{0,0,0,0,0,0},2,{3,4,0,0,0,0}}, {1,0,{0,0,0,0,0,0},2,{4,5,0,0,0,0}},
};
const std::size_t kCubicECount = sizeof(kCubicE) / sizeof(CoefTerm);

const CoefTerm kCubicF[] = {
    {1,1,{0,0,0,0,0,0},2,{1,3,0,0,0,0}}, {1,1,{0,0,0,0,0,0},2,{1,4,0,0,0,0}}, {1,1,{0,0,0,0,0,0},2,{2,3,0,0,0,0}}, {-1,1,{0,0,0,0,0,0},2,{2,5,0,0,0,0}},
    {-1,1,{0,0,0,0,0,0},2,{3,4,0,0,0,0}}, {-1,1,{0,0,0,0,0,0},2,{3,5,0,0,0,0}}, {1,1,{2,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,1,{2,0,0,0,0,0},2,{0,5,0,0,0,0}},
    {-1,1,{2,0,0,0,0,0},2,{1,4,0,0,0,0}}, {-1,1,{2,0,0,0,0,0},2,{1,5,0,0,0,0}}, {1,1,{2,0,0,0,0,0},2,{3,5,0,0,0,0}}, {1,1,{2,0,0,0,0,0},2,{4,5,0,0,0,0}},
    {1,1,{4,0,0,0,0,0},2,{0,1,0,0,0,0}}, {-1,1,{4,0,0,0,0,0},2,{0,3,0,0,0,0}}, {-1,1,{4,0,0,0,0,0},2,{1,2,0,0,0,0}}, {-1,1,{4,0,0,0,0,0},2,{1,3,0,0,0,0}},
    {1,1,{4,0,0,0,0,0},2,{1,5,0,0,0,0}}, {1,1,{4,0,0,0,0,0},2,{2,5,0,0,0,0}},
};
const std::size_t kCubicFCount = sizeof(kCubicF) / sizeof(CoefTerm);

const CubicCoefFix kCubicFixes[] = {
    {CubicCoefId::B, 9, {1,0,{0,0,0,0,0,0},3,{1,4,5,0,0,0}}, "+b^{q^4+q^4+q}"},
};
const std::size_t kCubicFixCount = sizeof(kCubicFixes) / sizeof(CubicCoefFix);

}  // namespace arcgeom::tables
