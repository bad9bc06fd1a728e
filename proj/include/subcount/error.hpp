#pragma once

#include <stdexcept>
#include <string>

namespace subcount {

// Error categories surfaced to callers. Tests match on the code, not the
// message text, so messages are free to carry context.
enum class Errc {
  Malformed,
  DuplicateEdge,
  IndexOutOfRange,
  NegativeCount,
  EmptyPattern,
  NotAGraph,
  Disconnected,
  TooFewEdges,
  TooLarge,
  ConfigMismatch,
  StrictViolation,
  PatternMismatch,
  EmptyInput,
  SearchCapExceeded,
  SingleEdgePattern,
  ParameterDomain,
  Infeasible,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Malformed: return "malformed";
    case Errc::DuplicateEdge: return "duplicate_edge";
    case Errc::IndexOutOfRange: return "index_out_of_range";
    case Errc::NegativeCount: return "negative_count";
    case Errc::EmptyPattern: return "empty_pattern";
    case Errc::NotAGraph: return "not_a_graph";
    case Errc::Disconnected: return "disconnected";
    case Errc::TooFewEdges: return "too_few_edges";
    case Errc::TooLarge: return "too_large";
    case Errc::ConfigMismatch: return "config_mismatch";
    case Errc::StrictViolation: return "strict_violation";
    case Errc::PatternMismatch: return "pattern_mismatch";
    case Errc::EmptyInput: return "empty_input";
    case Errc::SearchCapExceeded: return "search_cap_exceeded";
    case Errc::SingleEdgePattern: return "single_edge_pattern";
    case Errc::ParameterDomain: return "parameter_domain";
    case Errc::Infeasible: return "infeasible";
    case Errc::Io: return "io";
  }
  return "unknown";
}

}  // namespace subcount
