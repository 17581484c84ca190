#pragma once

#include <string>

#include <json.hpp>

#include "hilbertp/certify.hpp"
#include "hilbertp/errors.hpp"
#include "hilbertp/geometry.hpp"
#include "hilbertp/rademacher.hpp"
#include "hilbertp/space.hpp"

namespace hilbertp::io {

using nlohmann::json;

// Malformed input; the message starts with the offending JSON path.
class InputError : public Error {
 public:
  using Error::Error;
};

json load_json_file(const std::string& path);

// { "weights": [...] (optional, default uniform), "dim": d, "values": [[...], ...] }
Field field_from_json(const json& j);
json to_json(const Field& f);

// { "dim": d, "xs": [[...], ...] }
RademacherSum sum_from_json(const json& j);
json to_json(const RademacherSum& s);

json to_json(const HilbertVerdict& v);
json to_json(const CaseLabel& c);
json to_json(const Vec& v);

// Sorted keys, no whitespace, numbers as %.17g.
std::string canonical(const json& j);
// FNV-1a 64 of the canonical form, as 16 hex digits.
std::string digest(const json& j);

}  // namespace hilbertp::io
