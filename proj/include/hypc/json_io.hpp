#pragma once

// JSON encodings. Scalars travel as expression strings in the scalar
// grammar; floats appear only in fields that say so.
//
//   point  = [scalar, scalar]
//   cycle  = {"a": scalar, "b": [scalar, scalar], "c": scalar}
//   line   = cycle (canonicalized on load, unit-norm form on output)
//   kind   = {"kind": "intersecting" | "limiting" | "ultra", "point"?: point}
//   motion = {"matrix": [[scalar x4] x4], "mirrors": [cycle...]}

#include <json.hpp>

#include <string>

#include "hypc/motions.hpp"

namespace hypc {

using Json = nlohmann::ordered_json;

/// Malformed input; `path` is a JSON pointer to the offending value.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::string path) : std::runtime_error(what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

inline Json to_json(const Scalar& s) { return s.format(); }

inline Json to_json(const Vec2& v) { return Json::array({v.x.format(), v.y.format()}); }

inline Json to_json(const Point& u) { return to_json(u.u()); }

inline Json to_json(const Cycle& f) {
  Json j;
  j["a"] = f.a.format();
  j["b"] = to_json(f.b);
  j["c"] = f.c.format();
  return j;
}

inline Json to_json(const Line& L) { return to_json(L.m()); }

inline const char* kind_name(IntersectKind::Kind k) {
  switch (k) {
    case IntersectKind::Intersecting:
      return "intersecting";
    case IntersectKind::LimitingParallel:
      return "limiting";
    case IntersectKind::UltraParallel:
      return "ultra";
  }
  return "";
}

inline Json to_json(const IntersectKind& k) {
  Json j;
  j["kind"] = kind_name(k.kind);
  if (k.point) j["point"] = to_json(*k.point);
  return j;
}

inline Json to_json(const Motion& M) {
  Json rows = Json::array();
  for (const auto& row : M.matrix) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.format());
    rows.push_back(std::move(r));
  }
  Json mirrors = Json::array();
  for (const auto& m : M.mirrors) mirrors.push_back(to_json(m));
  Json j;
  j["matrix"] = std::move(rows);
  j["mirrors"] = std::move(mirrors);
  return j;
}

inline Scalar scalar_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError("expected a scalar string", path);
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw InputError(e.what(), path);
  }
}

inline Vec2 vec_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected a pair of scalars", path);
  return {scalar_from_json(j[0], path + "/0"), scalar_from_json(j[1], path + "/1")};
}

inline Point point_from_json(const Json& j, const std::string& path) {
  Vec2 v = vec_from_json(j, path);
  try {
    return Point(std::move(v));
  } catch (const DomainError& e) {
    throw InputError(e.what(), path);
  }
}

inline Cycle cycle_from_json(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("c"))
    throw InputError("expected a cycle {\"a\", \"b\", \"c\"}", path);
  return {scalar_from_json(j["a"], path + "/a"), vec_from_json(j["b"], path + "/b"),
          scalar_from_json(j["c"], path + "/c")};
}

inline Line line_from_json(const Json& j, const std::string& path) {
  const Cycle f = cycle_from_json(j, path);
  try {
    return line_from_cycle(standard_context(), f);
  } catch (const DomainError& e) {
    throw InputError(e.what(), path);
  }
}

inline IntersectKind::Kind kind_from_name(const std::string& name, const std::string& path) {
  if (name == "intersecting") return IntersectKind::Intersecting;
  if (name == "limiting") return IntersectKind::LimitingParallel;
  if (name == "ultra") return IntersectKind::UltraParallel;
  throw InputError("unknown intersection kind '" + name + "'", path);
}

inline IntersectKind intersect_kind_from_json(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("expected {\"kind\": ...}", path);
  IntersectKind k{kind_from_name(j["kind"].get<std::string>(), path + "/kind"), std::nullopt};
  if (j.contains("point")) k.point = point_from_json(j["point"], path + "/point");
  return k;
}

}  // namespace hypc
