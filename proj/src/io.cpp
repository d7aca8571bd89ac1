#include "motfact/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace motfact {

namespace {

using nlohmann::json;

json dq_to_json(const DualQuaternion& h) {
  json arr = json::array();
  for (double v : h.to8()) arr.push_back(v);
  return arr;
}

DualQuaternion dq_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.size() != 8)
    throw Error(Err::ParseError, where + ": expected an array of 8 numbers");
  std::array<double, 8> c{};
  for (size_t i = 0; i < 8; ++i) {
    if (!arr[i].is_number())
      throw Error(Err::ParseError, where + "[" + std::to_string(i) + "]: expected a number");
    c[i] = arr[i].get<double>();
  }
  return DualQuaternion::from8(c);
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Err::ParseError, e.what());
  }
}

// Shortest round-trip decimal representation.
std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string linkage_to_json(const Linkage& l) {
  json j;
  j["type"] = l.type;
  j["joints"] = json::array();
  for (const auto& joint : l.joints) {
    j["joints"].push_back({{"kind", joint.kind == JointKind::Revolute ? "revolute" : "prismatic"},
                           {"label", joint.label},
                           {"g", dq_to_json(joint.generator)}});
  }
  j["links"] = l.links;
  j["loops"] = json::array();
  for (const auto& loop : l.loops) {
    json jl = json::array();
    for (const auto& e : loop) jl.push_back({{"joint", e.joint}, {"conjugate", e.conjugate}});
    j["loops"].push_back(std::move(jl));
  }
  return j.dump(2) + "\n";
}

Linkage linkage_from_json(const std::string& text) {
  const json j = parse(text);
  Linkage l;
  if (!j.contains("joints") || !j["joints"].is_array())
    throw Error(Err::ParseError, "joints: missing or not an array");
  l.type = j.value("type", "");
  size_t ji = 0;
  for (const auto& joint : j["joints"]) {
    const std::string where = "joints[" + std::to_string(ji++) + "]";
    if (!joint.contains("g")) throw Error(Err::ParseError, where + ".g: missing");
    const DualQuaternion g = dq_from_json(joint["g"], where + ".g");
    const std::string kind = joint.value("kind", "revolute");
    const GeneratorKind actual = classify_generator(g);
    if (actual == GeneratorKind::Invalid)
      throw Error(Err::ParseError,
                  where + ".g: generator violates the Study condition or the dual scalar");
    const JointKind declared = kind == "prismatic" ? JointKind::Prismatic : JointKind::Revolute;
    if ((declared == JointKind::Revolute) != (actual == GeneratorKind::Rotation))
      throw Error(Err::ParseError, where + ": declared kind '" + kind +
                                       "' does not match the generator classification");
    l.joints.push_back(Joint{declared, g, joint.value("label", "")});
  }
  if (j.contains("links")) {
    size_t li = 0;
    for (const auto& link : j["links"]) {
      const std::string where = "links[" + std::to_string(li++) + "]";
      if (!link.is_array()) throw Error(Err::ParseError, where + ": expected an array");
      std::vector<int> idx;
      for (const auto& v : link) {
        if (!v.is_number_integer()) throw Error(Err::ParseError, where + ": expected joint indices");
        idx.push_back(v.get<int>());
      }
      l.links.push_back(std::move(idx));
    }
  }
  if (j.contains("loops")) {
    size_t li = 0;
    for (const auto& loop : j["loops"]) {
      const std::string where = "loops[" + std::to_string(li++) + "]";
      if (!loop.is_array()) throw Error(Err::ParseError, where + ": expected an array");
      std::vector<LoopEntry> entries;
      size_t ei = 0;
      for (const auto& e : loop) {
        const std::string ewhere = where + "[" + std::to_string(ei++) + "]";
        if (!e.contains("joint") || !e["joint"].is_number_integer())
          throw Error(Err::ParseError, ewhere + ".joint: expected an integer");
        entries.push_back({e["joint"].get<int>(), e.value("conjugate", false)});
      }
      l.loops.push_back(std::move(entries));
    }
  }
  try {
    validate_linkage(l);
  } catch (const Error& e) {
    throw Error(Err::ParseError, std::string("linkage invariants: ") + e.what());
  }
  return l;
}

std::string motion_to_json(const MotionPolynomial& c) {
  json j;
  j["coeffs"] = json::array();
  for (const auto& coeff : c.coeffs()) j["coeffs"].push_back(dq_to_json(coeff));
  return j.dump(2) + "\n";
}

MotionPolynomial motion_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
    throw Error(Err::ParseError, "coeffs: missing or empty");
  std::vector<DualQuaternion> coeffs;
  size_t i = 0;
  for (const auto& c : j["coeffs"])
    coeffs.push_back(dq_from_json(c, "coeffs[" + std::to_string(i++) + "]"));
  try {
    return MotionPolynomial::make(std::move(coeffs));
  } catch (const Error& e) {
    throw Error(Err::ParseError, std::string("coeffs: ") + e.what());
  }
}

std::array<Pose, 3> poses_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("poses") || !j["poses"].is_array() || j["poses"].size() != 3)
    throw Error(Err::ParseError, "poses: expected an array of exactly 3 poses");
  std::array<Pose, 3> out{};
  for (size_t i = 0; i < 3; ++i) {
    const std::string where = "poses[" + std::to_string(i) + "]";
    const DualQuaternion h = dq_from_json(j["poses"][i], where);
    try {
      out[i] = Pose::make(h);
    } catch (const Error& e) {
      throw Error(Err::ParseError, where + ": " + e.what());
    }
  }
  return out;
}

std::string poses_to_json(const std::array<Pose, 3>& poses) {
  json j;
  j["poses"] = json::array();
  for (const auto& p : poses) j["poses"].push_back(dq_to_json(p.value));
  return j.dump(2) + "\n";
}

std::string factorization_to_json(const Factorization& f, double residual) {
  json j;
  j["factors"] = json::array();
  for (const auto& h : f.factors) j["factors"].push_back(dq_to_json(h));
  j["norms"] = json::array();
  for (const auto& m : f.norms) j["norms"].push_back({m.a, m.b});
  j["residual"] = residual;
  return j.dump(2) + "\n";
}

void write_trajectory_csv(std::ostream& os, const std::vector<double>& ts,
                          const std::vector<Vec3>& points) {
  if (ts.size() != points.size())
    throw Error(Err::InvalidInput, "trajectory sample count mismatch");
  os << "t,x,y,z\n";
  for (size_t i = 0; i < ts.size(); ++i) {
    if (std::isinf(ts[i]))
      os << "inf";
    else
      os << fmt_double(ts[i]);
    os << ',' << fmt_double(points[i].x) << ',' << fmt_double(points[i].y) << ','
       << fmt_double(points[i].z) << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::ParseError, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Err::InvalidInput, "cannot write file: " + path);
  out << content;
}

}  // namespace motfact
