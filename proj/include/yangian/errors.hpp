#pragma once

#include <stdexcept>
#include <string>

namespace yangian {

#define YANGIAN_DEFINE_ERROR(NAME)                                  \
    struct NAME : std::runtime_error {                              \
        explicit NAME(const std::string& w) : std::runtime_error(w) {} \
    }

YANGIAN_DEFINE_ERROR(NonAffineResidual);
YANGIAN_DEFINE_ERROR(NonGenericResidual);
YANGIAN_DEFINE_ERROR(NonRationalLeading);
YANGIAN_DEFINE_ERROR(SiteCollision);
YANGIAN_DEFINE_ERROR(CentralityFailure);
YANGIAN_DEFINE_ERROR(NotHighestWeight);
YANGIAN_DEFINE_ERROR(RankTooSmall);
YANGIAN_DEFINE_ERROR(NonTriangular);
YANGIAN_DEFINE_ERROR(UnsupportedTarget);
YANGIAN_DEFINE_ERROR(NotBetaAdmissible);
YANGIAN_DEFINE_ERROR(NonUnitResidual);
YANGIAN_DEFINE_ERROR(ParameterMismatch);
YANGIAN_DEFINE_ERROR(DegenerateArgument);

#undef YANGIAN_DEFINE_ERROR

}  // namespace yangian
