#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "schemekit/wreath_idempotents.hpp"

namespace schemekit {

struct InputDigest {
  std::string path;
  std::string sha256;  // lowercase hex
};

std::string sha256_hex(std::string_view bytes);
std::string file_sha256(const std::string& path);

nlohmann::json to_json(const IdempotentCertificate& c);
nlohmann::json to_json(const GMatrixFamily& g);
nlohmann::json to_json(const FiberPairReport& r);
nlohmann::json to_json(const QuasiThinProfile& p);
nlohmann::json to_json(const PathResult& r);

/// Runtime is included only when given, so reports stay byte-stable otherwise.
nlohmann::json to_json(const TheoremReport& r, const InputDigest& x, const InputDigest& y, Point x0,
                       Point y0, std::optional<double> runtime_seconds = std::nullopt);

std::string to_text(const TheoremReport& r);

}  // namespace schemekit
