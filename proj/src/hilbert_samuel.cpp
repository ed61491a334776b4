#include "brim/hilbert_samuel.hpp"

namespace brim {

std::string_view route_name(Route r) {
  switch (r) {
    case Route::Reduction: return "REDUCTION";
    case Route::Difference: return "DIFFERENCE";
    case Route::Newton: return "NEWTON";
    case Route::Lambda: return "LAMBDA";
    case Route::All: return "ALL";
  }
  return "";
}

Route parse_route(std::string_view name) {
  for (Route r : {Route::Reduction, Route::Difference, Route::Newton, Route::Lambda, Route::All})
    if (route_name(r) == name) return r;
  throw Error(ErrorCode::InvalidArgument, "unknown route '" + std::string(name) + "'");
}

}  // namespace brim
