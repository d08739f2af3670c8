#pragma once

#include <stdexcept>
#include <string>

namespace slicereg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SLICEREG_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

// quaternion
SLICEREG_DEFINE_ERROR(NonUnitRotor);
SLICEREG_DEFINE_ERROR(NotAUnitVector);

// slice_series
SLICEREG_DEFINE_ERROR(ZeroBase);
SLICEREG_DEFINE_ERROR(AsymmetryDetected);
SLICEREG_DEFINE_ERROR(NotInvertibleAtOrigin);
SLICEREG_DEFINE_ERROR(StepOutOfDomain);

// majorant
SLICEREG_DEFINE_ERROR(DomainError);
SLICEREG_DEFINE_ERROR(QuadratureFailure);

// poisson
SLICEREG_DEFINE_ERROR(BoundaryTooClose);

// lipschitz
SLICEREG_DEFINE_ERROR(DegeneratePlan);
SLICEREG_DEFINE_ERROR(SingularPoint);

// verify
SLICEREG_DEFINE_ERROR(NotIntrinsic);
SLICEREG_DEFINE_ERROR(NoAdmissibleSamples);

// io
SLICEREG_DEFINE_ERROR(ParseError);
SLICEREG_DEFINE_ERROR(ValidationError);
SLICEREG_DEFINE_ERROR(IOError);

#undef SLICEREG_DEFINE_ERROR

}  // namespace slicereg
