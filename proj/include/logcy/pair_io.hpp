#pragma once

#include "logcy/torelli.hpp"

#include <json.hpp>

#include <string>

namespace logcy {

using Json = nlohmann::json;

/// Pair documents: {"format": "logcy3-pair", "version": 1, ...}. Throws
/// ParseError naming the offending field.
PairData parse_pair(const Json& doc);
Json pair_to_json(const PairData& data);

/// Correspondence documents: {"format": "logcy3-correspondence", "version": 1, ...}.
Correspondence parse_correspondence(const Json& doc);
Json correspondence_to_json(const Correspondence& corr);

/// Marking list [{"edge": [a, b], "coord": "..."}], chart of the edge as written.
std::vector<std::pair<Edge, GaussianRational>> parse_markings(const Json& list, const std::string& where);

/// Reads and parses a JSON file; ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);
/// File contents, for digests.
std::string read_text_file(const std::string& path);

/// FNV-1a 64 over the concatenation of the inputs, as 16 hex digits.
std::string fnv1a_digest(const std::vector<std::string>& inputs);

Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& where);

}  // namespace logcy
