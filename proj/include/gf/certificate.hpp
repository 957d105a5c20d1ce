#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gf {

using ojson = nlohmann::ordered_json;

/// A re-checkable report. The document always carries `format`, `kind`,
/// `digest_algorithm`, `inputs` (embedded objects plus content digests),
/// `witnesses` and `recheck` (instructions). Canonical printing: 2-space
/// indent, trailing newline; parse-print is the identity on canonical files.
struct Certificate {
  ojson doc;

  std::string kind() const { return doc.value("kind", ""); }
  std::string print() const;
  static Certificate parse(const std::string& text);
};

/// Content digest of serialized bytes: "fnv1a-64:" + 16 hex digits.
std::string content_digest(const std::string& bytes);

struct RecheckResult {
  bool ok = false;
  std::vector<std::string> notes;
};

/// Re-validates a certificate from its own payload: digests, then the
/// defining computation of its kind, replayed and compared.
RecheckResult recheck_certificate(const Certificate& cert);

}  // namespace gf
