#pragma once

#include <stdexcept>
#include <string>

namespace tsirelson {

/// Input text that does not match the expected grammar.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation refused because it would exceed a configured safety bound.
struct SafetyBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structurally invalid norming certificate.  `node_path` names the
/// offending node, e.g. "root.parts[1]".
struct CertificateError : std::runtime_error {
  std::string node_path;
  CertificateError(std::string path, const std::string& message)
      : std::runtime_error(message + " (at " + path + ")"),
        node_path(std::move(path)) {}
};

}  // namespace tsirelson
