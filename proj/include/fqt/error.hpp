#pragma once

#include <stdexcept>
#include <string>

namespace fqt {

// All library failures carry a stable machine-readable code alongside the
// human-readable message.  The CLI maps codes to exit status: ParseError and
// configuration problems exit 2, every other Error exits 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define FQT_DEFINE_ERROR(Name)                             \
  class Name : public Error {                              \
   public:                                                 \
    explicit Name(const std::string& message)              \
        : Error(#Name, message) {}                         \
  }

FQT_DEFINE_ERROR(DivisionByZero);
FQT_DEFINE_ERROR(FieldMismatch);
FQT_DEFINE_ERROR(InvalidFieldSpec);
FQT_DEFINE_ERROR(InfinityNotExpandable);
FQT_DEFINE_ERROR(InfinityNotDecomposable);
FQT_DEFINE_ERROR(InvalidPoint);
FQT_DEFINE_ERROR(DistinctnessViolated);
FQT_DEFINE_ERROR(MalformedCF);
FQT_DEFINE_ERROR(InvalidGenerator);
FQT_DEFINE_ERROR(SingularMatrix);
FQT_DEFINE_ERROR(ReductionDiverged);
FQT_DEFINE_ERROR(InvalidVertex);
FQT_DEFINE_ERROR(AnchorOffGeodesic);
FQT_DEFINE_ERROR(NotInDomain);
FQT_DEFINE_ERROR(InvalidStepCount);
FQT_DEFINE_ERROR(BallTooLarge);
FQT_DEFINE_ERROR(OutOfBall);
FQT_DEFINE_ERROR(ParseError);

#undef FQT_DEFINE_ERROR

}  // namespace fqt
