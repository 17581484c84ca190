#include "hilbertp/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hilbertp::io {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InputError(where + ": expected a finite number");
  return x;
}

std::size_t dim_at(const json& root) {
  if (!root.contains("dim")) throw InputError("dim: missing");
  const json& d = root["dim"];
  if (!d.is_number_integer() || d.get<long long>() <= 0) throw InputError("dim: expected a positive integer");
  return d.get<std::size_t>();
}

std::vector<Vec> vectors_at(const json& root, const char* key, std::size_t dim) {
  if (!root.contains(key)) throw InputError(std::string(key) + ": missing");
  const json& arr = root[key];
  if (!arr.is_array() || arr.empty()) throw InputError(std::string(key) + ": expected a nonempty array");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array()) throw InputError(where + ": expected an array of numbers");
    if (arr[i].size() != dim)
      throw InputError(where + ": expected " + std::to_string(dim) + " numbers, got " +
                       std::to_string(arr[i].size()));
    Vec v;
    for (std::size_t k = 0; k < dim; ++k) v.push_back(number_at(arr[i][k], where + "[" + std::to_string(k) + "]"));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Field field_from_json(const json& j) {
  if (!j.is_object()) throw InputError("$: expected an object");
  const std::size_t dim = dim_at(j);
  const auto values = vectors_at(j, "values", dim);
  std::vector<double> weights;
  if (j.contains("weights")) {
    const json& w = j["weights"];
    if (!w.is_array()) throw InputError("weights: expected an array");
    if (w.size() != values.size())
      throw InputError("weights: expected " + std::to_string(values.size()) + " entries, got " +
                       std::to_string(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double x = number_at(w[i], "weights[" + std::to_string(i) + "]");
      if (x < 0.0) throw InputError("weights[" + std::to_string(i) + "]: negative weight");
      weights.push_back(x);
    }
  } else {
    weights.assign(values.size(), 1.0 / static_cast<double>(values.size()));
  }
  try {
    return Field::from_atoms(weights, values);
  } catch (const StructuralError& e) {
    throw InputError(std::string("weights: ") + e.what());
  }
}

json to_json(const Vec& v) { return json(v); }

json to_json(const Field& f) {
  json values = json::array();
  for (std::size_t i = 0; i < f.atoms(); ++i) values.push_back(Vec(f[i].begin(), f[i].end()));
  return {{"weights", Vec(f.space().weights().begin(), f.space().weights().end())},
          {"dim", f.dim()},
          {"values", values}};
}

RademacherSum sum_from_json(const json& j) {
  if (!j.is_object()) throw InputError("$: expected an object");
  const std::size_t dim = dim_at(j);
  return RademacherSum(vectors_at(j, "xs", dim));
}

json to_json(const RademacherSum& s) { return {{"dim", s.dim()}, {"xs", s.xs()}}; }

json to_json(const HilbertVerdict& v) {
  json out = {{"decision", to_string(v.decision)},
              {"level", v.level},
              {"support", v.support},
              {"margin", v.margin}};
  if (v.violation) out["violation"] = to_json(*v.violation);
  if (v.oracle) {
    const auto& s = *v.oracle;
    out["oracle"] = {{"reference_value", s.reference_value},
                     {"best_value", s.best_value},
                     {"improvement", s.reference_value - s.best_value},
                     {"kkt_residual", std::isnan(s.kkt_residual) ? json(nullptr) : json(s.kkt_residual)},
                     {"iterations", s.iterations},
                     {"converged_restarts", s.converged_restarts}};
  }
  return out;
}

json to_json(const CaseLabel& c) {
  json out = {{"case", to_string(c.kind)},
              {"base_point", c.base_point},
              {"signs", c.signs},
              {"index_set", c.index_set}};
  switch (c.kind) {
    case SumCase::case_a:
      out["witness"] = {{"orthogonal", c.orthogonal}};
      break;
    case SumCase::case_b:
      out["witness"] = {{"x1", c.doubled}};
      break;
    case SumCase::case_c:
      out["witness"] = {{"u", c.u}, {"v", c.v}};
      break;
    case SumCase::not_hilbert:
      out["witness"] = {{"reason", c.reason}};
      if (c.failing_norms)
        out["witness"]["failing_norms"] = {c.failing_norms->first, c.failing_norms->second};
      break;
  }
  return out;
}

namespace {

void write_canonical(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      // nlohmann's default object type is an ordered std::map, so keys come out sorted.
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(k).dump();
        out += ':';
        write_canonical(v, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write_canonical(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string canonical(const json& j) {
  std::string out;
  write_canonical(j, out);
  return out;
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical(j)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

}  // namespace hilbertp::io
