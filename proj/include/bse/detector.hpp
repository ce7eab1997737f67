#pragma once

namespace bse {

/// Which single-photon detector registered the click. The choice resolves
/// every +/- sign pair in the conditional state and its concurrence.
enum class Detector { D1, D2 };

inline const char* to_string(Detector d) { return d == Detector::D1 ? "D1" : "D2"; }

}  // namespace bse
