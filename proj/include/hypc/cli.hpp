#pragma once

// Command dispatch for the hypc tool. Each command reads one JSON document
// and produces one JSON document (or an SVG for render).
//
//   line-through  {"points": [u, v]}                      -> line
//   between       {"points": [u, v, w]}                   -> {"between": point}
//   intersect     {"lines": [L, M]}                       -> kind
//   reflect       {"mirror": L | {"swap": [u, v]}, "points": [...]}
//                                                         -> {"images": [...]}
//   distance      {"points": [u, v]}                      -> {"quasi_distance", "float"}
//   parallels     {"point": u, "line": L, "params": [t | "inf", ...]}
//                                                         -> {"parallels": [{"param", "line", "kind"}]}
//   check-axioms  {"seed"?: n, "suite"?: name, "trials"?: n} -> {"reports": [...], "failures": n}
//   render        {"lines"?, "points"?, "segments"?, "viewport": [xmin, xmax, ymax]} -> SVG

#include <optional>
#include <string>
#include <vector>

#include "hypc/axioms.hpp"
#include "hypc/svg.hpp"

namespace hypc::cli {

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
};

struct Result {
  std::string output;
  int exit_code = 0;
};

namespace detail {

inline const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'", "");
  return doc[key];
}

inline std::vector<Point> points(const Json& doc, std::size_t n) {
  const Json& j = field(doc, "points");
  if (!j.is_array() || (n != 0 && j.size() != n))
    throw InputError("expected " + (n ? std::to_string(n) : std::string("an array of")) + " points", "/points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_from_json(j[i], "/points/" + std::to_string(i)));
  return out;
}

inline std::vector<Line> lines(const Json& doc, const char* key, std::optional<std::size_t> n) {
  const Json& j = field(doc, key);
  const std::string path = std::string("/") + key;
  if (!j.is_array() || (n && j.size() != *n)) throw InputError("expected an array of lines", path);
  std::vector<Line> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(line_from_json(j[i], path + "/" + std::to_string(i)));
  return out;
}

inline std::uint64_t unsigned_field(const Json& doc, const char* key) {
  const Json& j = doc[key];
  if (!j.is_number_unsigned()) throw InputError("expected a nonnegative integer", std::string("/") + key);
  return j.get<std::uint64_t>();
}

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

inline Result line_through_cmd(const Json& in) {
  const auto p = points(in, 2);
  return {dump(to_json(line_through(standard_context(), p[0], p[1])))};
}

inline Result between_cmd(const Json& in) {
  const auto p = points(in, 3);
  Json out;
  out["between"] = to_json(middle_point(standard_context(), p[0], p[1], p[2]));
  return {dump(out)};
}

inline Result intersect_cmd(const Json& in) {
  const auto L = lines(in, "lines", 2);
  return {dump(to_json(intersect(standard_context(), L[0], L[1])))};
}

inline Result reflect_cmd(const Json& in) {
  const PlaneContext& ctx = standard_context();
  const Json& mirror = field(in, "mirror");
  Motion M = identity_motion();
  if (mirror.is_object() && mirror.contains("swap")) {
    const Json& sw = mirror["swap"];
    if (!sw.is_array() || sw.size() != 2) throw InputError("expected two points to swap", "/mirror/swap");
    M = reflection_swapping_points(ctx, point_from_json(sw[0], "/mirror/swap/0"),
                                   point_from_json(sw[1], "/mirror/swap/1"));
  } else {
    M = reflection_in_line(line_from_json(mirror, "/mirror"));
  }
  Json images = Json::array();
  for (const Point& u : points(in, 0)) images.push_back(to_json(apply(M, u)));
  Json out;
  out["images"] = std::move(images);
  return {dump(out)};
}

inline Result distance_cmd(const Json& in) {
  const auto p = points(in, 2);
  const Scalar d = quasi_distance(standard_context(), p[0], p[1]);
  Json out;
  out["quasi_distance"] = to_json(d);
  out["float"] = d.to_double();
  return {dump(out)};
}

inline Result parallels_cmd(const Json& in) {
  const PlaneContext& ctx = standard_context();
  const Point u = point_from_json(field(in, "point"), "/point");
  const Line L = line_from_json(field(in, "line"), "/line");
  if (on_line(L, u)) throw DomainError("parallels: point lies on the line");
  const Json& params = field(in, "params");
  if (!params.is_array()) throw InputError("expected an array of parameters", "/params");
  Json list = Json::array();
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::string path = "/params/" + std::to_string(i);
    const bool inf = params[i].is_string() && params[i].get<std::string>() == "inf";
    const ConicParam t = inf ? ConicParam::at_infinity() : ConicParam::at(scalar_from_json(params[i], path));
    Json e;
    e["param"] = inf ? Json("inf") : to_json(*t.t);
    const auto m = parallel_at_param(ctx, u, L, t);
    if (m) {
      e["line"] = to_json(*m);
      e["kind"] = to_json(intersect(ctx, *m, L));
    } else {
      e["line"] = nullptr;
    }
    list.push_back(std::move(e));
  }
  Json out;
  out["parallels"] = std::move(list);
  return {dump(out)};
}

inline Result check_axioms_cmd(const Json& in, const Options& opt) {
  std::uint64_t seed = 0;
  std::string suite = "all";
  std::optional<std::size_t> trials;
  if (!in.is_null()) {
    if (!in.is_object()) throw InputError("expected an object", "");
    if (in.contains("seed")) seed = unsigned_field(in, "seed");
    if (in.contains("trials")) trials = unsigned_field(in, "trials");
    if (in.contains("suite")) {
      if (!in["suite"].is_string()) throw InputError("expected a suite name", "/suite");
      suite = in["suite"].get<std::string>();
    }
  }
  if (opt.seed) seed = *opt.seed;
  if (opt.trials) trials = *opt.trials;
  if (suite != "all" && suite != "incidence" && suite != "order" && suite != "congruence" && suite != "parallel" &&
      suite != "oracle")
    throw InputError("unknown suite '" + suite + "'", "/suite");
  if (trials && *trials == 0) throw InputError("trials must be positive", "/trials");
  const auto reports = run_suite(suite, seed, trials);
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  Json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["reports"] = std::move(list);
  out["failures"] = total_failures(reports);
  return {dump(out), total_failures(reports) == 0 ? 0 : 1};
}

inline Result render_cmd(const Json& in) {
  const Json& vp = field(in, "viewport");
  if (!vp.is_array() || vp.size() != 3) throw InputError("expected [xmin, xmax, ymax]", "/viewport");
  double v[3];
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string path = "/viewport/" + std::to_string(i);
    v[i] = vp[i].is_number() ? vp[i].get<double>() : scalar_from_json(vp[i], path).to_double();
  }
  svg::Figure fig;
  if (in.contains("lines")) fig.lines = lines(in, "lines", std::nullopt);
  if (in.contains("points")) fig.points = points(in, 0);
  if (in.contains("segments")) {
    const Json& segs = in["segments"];
    if (!segs.is_array()) throw InputError("expected an array of segments", "/segments");
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const std::string path = "/segments/" + std::to_string(i);
      if (!segs[i].is_array() || segs[i].size() != 2) throw InputError("expected two points", path);
      Point a = point_from_json(segs[i][0], path + "/0"), b = point_from_json(segs[i][1], path + "/1");
      if (a == b) throw InputError("segment endpoints coincide", path);
      fig.segments.emplace_back(std::move(a), std::move(b));
    }
  }
  return {svg::render(fig, {v[0], v[1], v[2]})};
}

inline Result error(const std::string& message, std::optional<std::string> position) {
  Json out;
  out["error"] = message;
  if (position && !position->empty()) out["position"] = *position;
  return {dump(out), 2};
}

}  // namespace detail

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"line-through", "between",   "intersect",    "reflect",
                                              "distance",     "parallels", "check-axioms", "render"};
  return names;
}

/// Runs one command on the JSON text `input`. Input problems give exit
/// code 2 and an error document instead of throwing.
inline Result run_command(const std::string& name, const std::string& input, const Options& opt = {}) {
  using namespace detail;
  try {
    Json in;
    const bool blank = input.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!(blank && name == "check-axioms")) in = Json::parse(input);
    if (name == "line-through") return line_through_cmd(in);
    if (name == "between") return between_cmd(in);
    if (name == "intersect") return intersect_cmd(in);
    if (name == "reflect") return reflect_cmd(in);
    if (name == "distance") return distance_cmd(in);
    if (name == "parallels") return parallels_cmd(in);
    if (name == "check-axioms") return check_axioms_cmd(in, opt);
    if (name == "render") return render_cmd(in);
    return error("unknown command '" + name + "'", std::nullopt);
  } catch (const Json::parse_error& e) {
    return error(e.what(), std::nullopt);
  } catch (const InputError& e) {
    return error(e.what(), e.path());
  } catch (const DomainError& e) {
    return error(e.what(), std::nullopt);
  } catch (const Json::exception& e) {
    return error(e.what(), std::nullopt);
  }
}

}  // namespace hypc::cli
