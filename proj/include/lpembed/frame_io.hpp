#pragma once

// Frame files. A frame is a JSON object
//
//   {"field": "R", "m": 2, "p": 4,
//    "vectors": [[["1"], ["0"]], ...],     // n vectors of m K-elements,
//                                          // each d component strings
//    "weights": ["2/3", ...]}
//
// Exact components are rational strings "num/den" (den omitted when 1).
// Float frames add "mode": "float" and write components as shortest
// round-trip decimal strings; a file without the mode key is also read as
// float when any component is not a rational string (contains '.', 'e', ...).

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include <nlohmann/json.hpp>

#include "lpembed/error.hpp"
#include "lpembed/frames.hpp"
#include "lpembed/rational.hpp"

namespace lpembed {

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("cannot format floating-point value");
  std::string s(buf, end);
  // keep a float marker so the value never reads back as a rational
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

inline double parse_double(const std::string& s) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError("malformed number '" + s + "'");
  return v;
}

inline bool is_rational_text(const std::string& s) {
  try {
    parse_rational(s);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

template <class T>
T parse_scalar(const std::string& s) {
  if constexpr (std::is_same_v<T, Rational>)
    return parse_rational(s);
  else
    return parse_double(s);
}

inline std::string format_scalar(const Rational& q) { return to_string(q); }
inline std::string format_scalar(double v) { return format_double(v); }

template <class T>
nlohmann::json frame_to_json(const BasicFrame<T>& f) {
  nlohmann::json j;
  j["field"] = field_name(f.field());
  j["m"] = f.m();
  j["p"] = f.p();
  if constexpr (std::is_same_v<T, double>) j["mode"] = "float";
  auto vectors = nlohmann::json::array();
  for (const auto& u : f.vectors()) {
    auto vec = nlohmann::json::array();
    for (const auto& e : u.entries()) {
      auto comps = nlohmann::json::array();
      for (const auto& c : e.components()) comps.push_back(format_scalar(c));
      vec.push_back(std::move(comps));
    }
    vectors.push_back(std::move(vec));
  }
  j["vectors"] = std::move(vectors);
  auto weights = nlohmann::json::array();
  for (const auto& w : f.weights()) weights.push_back(format_scalar(w));
  j["weights"] = std::move(weights);
  return j;
}

inline const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string require_string(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

template <class T>
BasicFrame<T> frame_from_json(const nlohmann::json& j, Field field, std::size_t m, unsigned p) {
  const auto& vectors = require(j, "vectors");
  const auto& weights = require(j, "weights");
  if (!vectors.is_array() || !weights.is_array())
    throw ParseError("'vectors' and 'weights' must be arrays");
  const std::size_t d = real_dim(field);
  std::vector<KVector<T>> vs;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const auto& vec = vectors[k];
    const std::string where = "vectors[" + std::to_string(k) + "]";
    if (!vec.is_array() || vec.size() != m)
      throw ParseError(where + ": expected " + std::to_string(m) + " entries");
    std::vector<KElement<T>> entries;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& comps = vec[i];
      if (!comps.is_array() || comps.size() != d)
        throw ParseError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(d) +
                         " components");
      std::vector<T> cs;
      for (std::size_t c = 0; c < d; ++c)
        cs.push_back(parse_scalar<T>(require_string(comps[c], where)));
      entries.emplace_back(field, std::span<const T>(cs));
    }
    vs.emplace_back(field, std::move(entries));
  }
  std::vector<T> ws;
  for (std::size_t k = 0; k < weights.size(); ++k)
    ws.push_back(parse_scalar<T>(require_string(weights[k], "weights[" + std::to_string(k) + "]")));
  try {
    return BasicFrame<T>(field, m, p, std::move(vs), std::move(ws));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid frame: ") + e.what());
  }
}

inline bool has_float_markers(const nlohmann::json& j) {
  if (j.is_string()) return !is_rational_text(j.get<std::string>());
  if (j.is_array()) {
    for (const auto& x : j)
      if (has_float_markers(x)) return true;
  }
  return false;
}

}  // namespace detail

template <class T>
std::string serialize_frame(const BasicFrame<T>& f) {
  return detail::frame_to_json(f).dump(2) + "\n";
}

inline std::string serialize_frame(const AnyFrame& f) {
  return std::visit([](const auto& fr) { return serialize_frame(fr); }, f);
}

/// Throws ParseError on malformed or invalid input.
inline AnyFrame parse_frame(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("frame file must be a JSON object");
  try {
    const Field field = parse_field(detail::require_string(detail::require(j, "field"), "field"));
    const auto& mj = detail::require(j, "m");
    const auto& pj = detail::require(j, "p");
    if (!mj.is_number_unsigned() || !pj.is_number_unsigned())
      throw ParseError("'m' and 'p' must be non-negative integers");
    const auto m = mj.get<std::size_t>();
    const auto p = pj.get<unsigned>();
    if (m == 0) throw ParseError("'m' must be at least 1");
    if (p == 0 || p % 2 != 0) throw ParseError("'p' must be a positive even integer");
    bool is_float = false;
    if (j.contains("mode")) {
      const auto mode = detail::require_string(j.at("mode"), "mode");
      if (mode == "float")
        is_float = true;
      else if (mode != "exact")
        throw ParseError("unknown mode '" + mode + "'");
    } else {
      is_float = detail::has_float_markers(detail::require(j, "vectors")) ||
                 detail::has_float_markers(detail::require(j, "weights"));
    }
    if (is_float) return detail::frame_from_json<double>(j, field, m, p);
    return detail::frame_from_json<Rational>(j, field, m, p);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed frame: ") + e.what());
  }
}

inline AnyFrame read_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_frame(ss.str());
}

inline void write_frame_file(const std::string& path, const AnyFrame& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_frame(f);
}

}  // namespace lpembed
