#ifndef RMJAC_ERROR_HPP
#define RMJAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rmjac {

enum class ErrorKind {
  MixedFields,
  DivisionByZero,
  NotMonic,
  EvenDegree,
  NotSquarefree,
  CharacteristicTwo,
  InvalidDivisor,
  MixedCurves,
  FieldTooSmall,
  DegreeTooLarge,
  DegenerateSupport,
  ExtensionTooLarge,
  TooLarge,
  NoRoots,
  NoMatch,
  BadEigenvalue,
  WrongCharacteristic,
  SingularCurve,
  NoTauInField,
  BadParameter,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace rmjac

#endif
