#pragma once

#include <stdexcept>
#include <string>

namespace tgh {

/// Base of every error raised by the toolkit. `kind()` is a stable
/// machine-readable tag used in CLI reports.
class Error : public std::runtime_error
{
public:
  Error(std::string kind, const std::string & message)
  : std::runtime_error(message), m_kind(std::move(kind))
  {}

  const std::string & kind() const { return m_kind; }

private:
  std::string m_kind;
};

/// An error that carries the offending numerical value (a residual, an
/// eigenvalue).
class ValuedError : public Error
{
public:
  ValuedError(std::string kind, const std::string & message, double value)
  : Error(std::move(kind), message), m_value(value)
  {}

  double value() const { return m_value; }

private:
  double m_value;
};

#define TGH_DEFINE_ERROR(Name)                                           \
  class Name : public Error                                              \
  {                                                                      \
  public:                                                                \
    explicit Name(const std::string & message) : Error(#Name, message) {} \
  };

#define TGH_DEFINE_VALUED_ERROR(Name)                                    \
  class Name : public ValuedError                                        \
  {                                                                      \
  public:                                                                \
    Name(const std::string & message, double value)                      \
    : ValuedError(#Name, message, value)                                 \
    {}                                                                   \
  };

TGH_DEFINE_ERROR(DimensionMismatch)
TGH_DEFINE_ERROR(InvalidArgument)
TGH_DEFINE_ERROR(DegeneratePlane)
TGH_DEFINE_ERROR(NotHelixOrderTwo)
TGH_DEFINE_ERROR(NotRecognized)
TGH_DEFINE_ERROR(MetricDegenerate)
TGH_DEFINE_ERROR(StepRejected)
TGH_DEFINE_ERROR(IrregularCurve)
TGH_DEFINE_ERROR(GradientDegenerate)
TGH_DEFINE_ERROR(SyntaxError)
TGH_DEFINE_ERROR(UnknownName)
TGH_DEFINE_ERROR(BadParams)

TGH_DEFINE_VALUED_ERROR(JacobiViolation)
TGH_DEFINE_VALUED_ERROR(NotPositiveDefinite)
TGH_DEFINE_VALUED_ERROR(NonUnitVector)
TGH_DEFINE_VALUED_ERROR(IdealResidualExceeded)
TGH_DEFINE_VALUED_ERROR(NotTotallyGeodesic)

#undef TGH_DEFINE_ERROR
#undef TGH_DEFINE_VALUED_ERROR

} // namespace tgh
