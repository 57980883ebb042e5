#include "fatpoints/error.hpp"

namespace fatpoints {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::BadPrime: return "BadPrime";
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::DegenerateSystem: return "DegenerateSystem";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::NodeParameter: return "NodeParameter";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::NotInSystem: return "NotInSystem";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::NotAPencil: return "NotAPencil";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace fatpoints
