#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kstab/link.hpp"

namespace kstab {

/// One input record of the batch front end. Exactly one of the explicit
/// weight fields or the catalog family may be present.
struct LinkSpec {
  std::string name;
  std::optional<std::vector<long>> inner_weights;
  std::optional<long> inner_degree;
  std::optional<int> tail;
  std::optional<ReebVector> reeb;
  std::optional<std::string> family;
  std::map<std::string, long> params;
  std::string comment;
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline long parse_long(const std::string& s) {
  std::string t = trim(s);
  if (t.empty()) throw Error(ErrorCode::Parse, "empty integer");
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad integer '" + t + "'");
  }
  if (pos != t.size()) throw Error(ErrorCode::Parse, "bad integer '" + t + "'");
  return v;
}

}  // namespace detail

/// Parses a flat "key: value" document; records are separated by blank
/// lines, '#' starts a comment line. Rationals are "p/q" strings.
inline std::vector<LinkSpec> parse_linkspecs(const std::string& text) {
  std::vector<LinkSpec> out;
  std::optional<LinkSpec> cur;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto flush = [&] {
    if (cur) {
      out.push_back(std::move(*cur));
      cur.reset();
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trim(line);
    if (t.empty()) {
      flush();
      continue;
    }
    if (t[0] == '#') continue;
    size_t colon = t.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = detail::trim(t.substr(0, colon));
    std::string val = detail::trim(t.substr(colon + 1));
    if (!cur) cur.emplace();
    auto set_once = [&](auto& slot, auto parsed) {
      if (slot) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
      slot = std::move(parsed);
    };
    if (key == "name") {
      if (!cur->name.empty())
        throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": duplicate key 'name'");
      cur->name = val;
    } else if (key == "inner_weights") {
      std::vector<long> w;
      for (const auto& part : detail::split(val, ',')) w.push_back(detail::parse_long(part));
      set_once(cur->inner_weights, std::move(w));
    } else if (key == "inner_degree") {
      set_once(cur->inner_degree, detail::parse_long(val));
    } else if (key == "tail") {
      set_once(cur->tail, static_cast<int>(detail::parse_long(val)));
    } else if (key == "reeb") {
      ReebVector r;
      for (const auto& part : detail::split(val, ',')) r.push_back(Rational::parse(part));
      set_once(cur->reeb, std::move(r));
    } else if (key == "family") {
      set_once(cur->family, val);
    } else if (key == "params") {
      if (!cur->params.empty())
        throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": duplicate key 'params'");
      for (const auto& part : detail::split(val, ',')) {
        size_t eq = part.find('=');
        if (eq == std::string::npos)
          throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 'k=v' in params");
        cur->params[detail::trim(part.substr(0, eq))] = detail::parse_long(part.substr(eq + 1));
      }
    } else if (key == "comment") {
      cur->comment = val;
    } else {
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  flush();
  if (out.empty()) throw Error(ErrorCode::Parse, "no records in input");
  return out;
}

inline void validate_linkspec(const LinkSpec& s) {
  if (s.name.empty()) throw Error(ErrorCode::Validation, "record has no name");
  bool explicit_fields = s.inner_weights.has_value() || s.inner_degree.has_value() || s.tail.has_value();
  bool family = s.family.has_value();
  if (explicit_fields == family)
    throw Error(ErrorCode::Validation,
                "record '" + s.name + "' must have exactly one of explicit fields or family");
  if (explicit_fields && !(s.inner_weights && s.inner_degree && s.tail))
    throw Error(ErrorCode::Validation,
                "record '" + s.name + "' needs inner_weights, inner_degree and tail");
  if (family && s.params.empty())
    throw Error(ErrorCode::Validation, "record '" + s.name + "' has a family but no params");
}

}  // namespace kstab
