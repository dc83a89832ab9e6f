#pragma once

#include <stdexcept>
#include <string>

namespace wco {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define WCO_DECLARE_ERROR(Name)        \
  class Name : public Error {          \
  public:                              \
    using Error::Error;                \
  }

WCO_DECLARE_ERROR(PoleError);
WCO_DECLARE_ERROR(PoleOnDiscError);
WCO_DECLARE_ERROR(DegenerateInputError);
WCO_DECLARE_ERROR(SpecError);
WCO_DECLARE_ERROR(ZeroDenominatorError);
WCO_DECLARE_ERROR(KernelPoleError);
WCO_DECLARE_ERROR(ConditionError);
WCO_DECLARE_ERROR(NonConvergenceError);
WCO_DECLARE_ERROR(ShapeError);
WCO_DECLARE_ERROR(DomainError);
WCO_DECLARE_ERROR(DimensionError);
WCO_DECLARE_ERROR(NotLinearFractionalError);
WCO_DECLARE_ERROR(DivergentAreaIntegralError);
WCO_DECLARE_ERROR(ZeroOmegaError);
WCO_DECLARE_ERROR(ParseError);

#undef WCO_DECLARE_ERROR

}  // namespace wco
