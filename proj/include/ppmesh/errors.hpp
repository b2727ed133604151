#pragma once

#include <stdexcept>
#include <string>

namespace ppmesh {

enum class errc {
  invalid_spec,
  unsupported_family,
  unknown_tbu,
  out_of_range,
  not_realizable,
  too_large,
  length_mismatch,
  malformed_sum,
  empty_measurements,
  inconsistent_k,
  no_candidate_in_window,
  no_interior_tbu,
  no_size_within_cap,
  empty_frontier,
  invalid_argument,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_spec: return "InvalidSpec";
    case errc::unsupported_family: return "UnsupportedFamily";
    case errc::unknown_tbu: return "UnknownTbu";
    case errc::out_of_range: return "OutOfRange";
    case errc::not_realizable: return "NotRealizable";
    case errc::too_large: return "TooLarge";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::malformed_sum: return "MalformedSum";
    case errc::empty_measurements: return "EmptyMeasurements";
    case errc::inconsistent_k: return "InconsistentK";
    case errc::no_candidate_in_window: return "NoCandidateInWindow";
    case errc::no_interior_tbu: return "NoInteriorTbu";
    case errc::no_size_within_cap: return "NoSizeWithinCap";
    case errc::empty_frontier: return "EmptyFrontier";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

// Single exception type used across the library. The code makes failures
// machine-checkable (the CLI maps it to a JSON error object and exit status).
class error : public std::runtime_error {
public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace ppmesh
