// errors.hpp -- exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace lutzlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define LUTZLAB_ERROR(Name)                                            \
    struct Name : Error {                                              \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

LUTZLAB_ERROR(IllFormedAtom);
LUTZLAB_ERROR(DomainPole);
LUTZLAB_ERROR(UnboundOpaque);
LUTZLAB_ERROR(ChartMismatch);
LUTZLAB_ERROR(DegreeZero);
LUTZLAB_ERROR(BadAssignment);
LUTZLAB_ERROR(PoleOnRegion);
LUTZLAB_ERROR(NotTopDegree);
LUTZLAB_ERROR(ZeroVolume);
LUTZLAB_ERROR(VanishingForm);
LUTZLAB_ERROR(NotTransverse);
LUTZLAB_ERROR(BadBlendRange);
LUTZLAB_ERROR(PathEscapedRegion);
LUTZLAB_ERROR(MaxStepsExceeded);
LUTZLAB_ERROR(CurveThroughOrigin);
LUTZLAB_ERROR(PositivityNotFound);
LUTZLAB_ERROR(ProfileViolation);
LUTZLAB_ERROR(IllegalStep);
LUTZLAB_ERROR(BadIndex);
LUTZLAB_ERROR(UnknownConstruction);
LUTZLAB_ERROR(BadSlice);
LUTZLAB_ERROR(BadRegion);

#undef LUTZLAB_ERROR

}  // namespace lutzlab
