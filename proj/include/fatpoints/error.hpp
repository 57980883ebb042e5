#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fatpoints {

enum class Errc {
  BadPrime,
  ZeroForm,
  CoincidentPoints,
  DegenerateSystem,
  NotOnCurve,
  SingularPoint,
  NodeParameter,
  InvalidPoint,
  NotInSystem,
  CapExceeded,
  ConstructionFailed,
  NotAPencil,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; the code names the failed contract.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fatpoints
