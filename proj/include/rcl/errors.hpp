#pragma once

#include <stdexcept>
#include <string>

namespace rcl {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define RCL_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                     \
  public:                                                         \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  }

RCL_DEFINE_ERROR(DimensionMismatch);
RCL_DEFINE_ERROR(NonHermitian);
RCL_DEFINE_ERROR(IndefiniteMatrix);
RCL_DEFINE_ERROR(OutsideDisk);
RCL_DEFINE_ERROR(SingularConstantTerm);
RCL_DEFINE_ERROR(ConstantTermNotIdentity);
RCL_DEFINE_ERROR(DegreeTooLow);
RCL_DEFINE_ERROR(ValidationFailed);
RCL_DEFINE_ERROR(GenerationFailed);
RCL_DEFINE_ERROR(ParameterNotSchur);
RCL_DEFINE_ERROR(ResidualTooLarge);
RCL_DEFINE_ERROR(NotPositiveReal);
RCL_DEFINE_ERROR(NotScalar);
RCL_DEFINE_ERROR(SolutionInvalid);
RCL_DEFINE_ERROR(ParameterNotInSOmega);

#undef RCL_DEFINE_ERROR

}  // namespace rcl
