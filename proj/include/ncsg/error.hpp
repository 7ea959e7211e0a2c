#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncsg {

enum class Errc {
  PlatformMismatch,
  InvalidArgument,
  NonInvertible,
  InfinitePlatform,
  IndexTooSmall,
  ZIsIdentity,
  ZNotIdentity,
  ConditionViolated,
  SearchSpaceTooLarge,
  NotFound,
  RoundAmbiguous,
  MalformedData,
  TransportFailure,
  ParamsMismatch,
  ProtocolViolation,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ncsg
