#include "quiver/report.hpp"

namespace quiver {

std::string method_name(Method m) {
  switch (m) {
    case Method::Brute: return "brute";
    case Method::QSeries: return "qseries";
    case Method::Qip: return "qip";
    case Method::Closed: return "closed";
    case Method::Ideal: return "ideal";
  }
  return "unknown";
}

}  // namespace quiver
