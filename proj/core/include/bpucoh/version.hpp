#pragma once

namespace bpucoh {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace bpucoh
