#pragma once

#include <stdexcept>
#include <string>

namespace fairtest {

// Base for every error raised by the harness. `kind()` is the stable
// identifier written into run logs.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define FAIRTEST_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

FAIRTEST_DEFINE_ERROR(ParseError);
FAIRTEST_DEFINE_ERROR(ValidationError);
FAIRTEST_DEFINE_ERROR(UnknownAttribute);
FAIRTEST_DEFINE_ERROR(MissingAssignment);
FAIRTEST_DEFINE_ERROR(EmptyResult);
FAIRTEST_DEFINE_ERROR(PreconditionError);
FAIRTEST_DEFINE_ERROR(TransportError);
FAIRTEST_DEFINE_ERROR(AuthError);
FAIRTEST_DEFINE_ERROR(MalformedResponse);
FAIRTEST_DEFINE_ERROR(StorageError);
FAIRTEST_DEFINE_ERROR(EmptyText);
FAIRTEST_DEFINE_ERROR(SchemaError);
FAIRTEST_DEFINE_ERROR(MixedCampaign);
FAIRTEST_DEFINE_ERROR(IoError);
FAIRTEST_DEFINE_ERROR(ConfigError);
FAIRTEST_DEFINE_ERROR(MissingStageInput);
FAIRTEST_DEFINE_ERROR(UsageError);

#undef FAIRTEST_DEFINE_ERROR

// HTTP 429. Carries the server's Retry-After hint in seconds (0 if absent).
class RateLimited : public Error {
 public:
  RateLimited(const std::string& message, double retry_after_s)
      : Error("RateLimited", message), retry_after_s_(retry_after_s) {}

  double retry_after_s() const noexcept { return retry_after_s_; }

 private:
  double retry_after_s_;
};

}  // namespace fairtest
