#include "geoloop/schedule_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace geoloop {
namespace {

[[noreturn]] void fail(const YAML::Node& node, const std::string& message) {
  const YAML::Mark mark = node.Mark();
  if (mark.is_null()) throw ParseError(message, 0, 0);
  throw ParseError(message, mark.line + 1, mark.column + 1);
}

void require_map(const YAML::Node& node, const std::string& what) {
  if (!node.IsMap()) fail(node, what + " must be a mapping");
}

// Rejects keys outside `allowed`, reporting the key's own position.
void check_keys(const YAML::Node& map, std::initializer_list<std::string_view> allowed) {
  for (const auto& kv : map) {
    const std::string key = kv.first.Scalar();
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(kv.first, "unknown field '" + key + "'");
  }
}

YAML::Node field(const YAML::Node& map, const std::string& key) {
  const YAML::Node n = map[key];
  if (!n) fail(map, "missing field '" + key + "'");
  return n;
}

double to_double(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail(node, what + " must be a number");
  const std::string& text = node.Scalar();
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    fail(node, what + " must be a finite number, got '" + text + "'");
  }
  return value;
}

Vector3 to_axis(const YAML::Node& node) {
  if (!node.IsSequence() || node.size() != 3) fail(node, "axis must be a list of three numbers");
  return {to_double(node[0], "axis[0]"), to_double(node[1], "axis[1]"), to_double(node[2], "axis[2]")};
}

ControlSegment checked(const YAML::Node& node, ControlSegment seg) {
  try {
    validate(seg);
  } catch (const InvalidArgument& e) {
    fail(node, e.what());
  }
  return seg;
}

ControlSegment parse_segment(const YAML::Node& node) {
  require_map(node, "segment");
  check_keys(node, {"axis", "omega", "duration"});
  ControlSegment seg;
  seg.axis = to_axis(field(node, "axis"));
  seg.omega = to_double(field(node, "omega"), "omega");
  seg.duration = to_double(field(node, "duration"), "duration");
  return checked(node, seg);
}

ConditionalStep parse_step(const YAML::Node& node) {
  require_map(node, "step");
  if (node.size() != 1) fail(node, "step must have exactly one of 'pulse_y', 'pulse', 'coupling'");
  const auto kv = *node.begin();
  const std::string kind = kv.first.Scalar();
  const YAML::Node body = kv.second;
  if (kind == "pulse_y") {
    require_map(body, "pulse_y");
    check_keys(body, {"omega", "duration"});
    ControlSegment seg{Vector3::UnitY(), to_double(field(body, "omega"), "omega"),
                       to_double(field(body, "duration"), "duration")};
    return PulseStep{checked(body, seg)};
  }
  if (kind == "pulse") return PulseStep{parse_segment(body)};
  if (kind == "coupling") {
    require_map(body, "coupling");
    check_keys(body, {"duration"});
    const double duration = to_double(field(body, "duration"), "duration");
    if (duration < 0.0) fail(body, "coupling duration must be >= 0");
    return CouplingStep{duration};
  }
  fail(kv.first, "unknown step type '" + kind + "'");
}

std::string label_of(const YAML::Node& root) {
  const YAML::Node n = root["label"];
  if (!n) return {};
  if (!n.IsScalar()) fail(n, "label must be a string");
  return n.Scalar();
}

Schedule parse_single(const YAML::Node& root) {
  check_keys(root, {"version", "kind", "label", "segments"});
  Schedule s;
  s.label = label_of(root);
  const YAML::Node segs = field(root, "segments");
  if (!segs.IsSequence()) fail(segs, "segments must be a list");
  for (const auto& seg : segs) s.segments.push_back(parse_segment(seg));
  return s;
}

ConditionalSchedule parse_two(const YAML::Node& root) {
  check_keys(root, {"version", "kind", "label", "mode", "coupling_field_up", "coupling_field_down", "steps"});
  ConditionalSchedule s;
  s.label = label_of(root);
  const YAML::Node mode = field(root, "mode");
  if (mode.IsScalar() && mode.Scalar() == "natural") {
    s.mode = ConditioningMode::natural;
  } else if (mode.IsScalar() && mode.Scalar() == "line_selective") {
    s.mode = ConditioningMode::line_selective;
  } else {
    fail(mode, "mode must be 'natural' or 'line_selective'");
  }
  if (const YAML::Node up = root["coupling_field_up"]) s.field_up = to_double(up, "coupling_field_up");
  if (const YAML::Node down = root["coupling_field_down"]) s.field_down = to_double(down, "coupling_field_down");
  const YAML::Node steps = field(root, "steps");
  if (!steps.IsSequence()) fail(steps, "steps must be a list");
  for (const auto& step : steps) s.steps.push_back(parse_step(step));
  return s;
}

// YAML double-quoted scalar.
std::string quote(const std::string& text) {
  std::string out = "\"";
  for (unsigned char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%02x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out + "\"";
}

std::string axis_text(const Vector3& axis) {
  return "[" + format_double(axis.x()) + ", " + format_double(axis.y()) + ", " + format_double(axis.z()) + "]";
}

void header(std::ostringstream& os, std::string_view kind, const std::string& label) {
  os << "version: " << kScheduleFormatVersion << "\n"
     << "kind: " << kind << "\n"
     << "label: " << quote(label) << "\n";
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

ScheduleDocument parse_schedule(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root.IsMap()) fail(root, "schedule document must be a mapping");
  const YAML::Node version = field(root, "version");
  if (!version.IsScalar() || version.Scalar() != std::to_string(kScheduleFormatVersion)) {
    fail(version, "unsupported version (expected " + std::to_string(kScheduleFormatVersion) + ")");
  }
  const YAML::Node kind = field(root, "kind");
  if (kind.IsScalar() && kind.Scalar() == "single_qubit") return parse_single(root);
  if (kind.IsScalar() && kind.Scalar() == "two_qubit") return parse_two(root);
  fail(kind, "kind must be 'single_qubit' or 'two_qubit'");
}

ScheduleDocument load_schedule(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open schedule file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_schedule(buf.str());
}

std::string serialize(const Schedule& sched) {
  std::ostringstream os;
  header(os, "single_qubit", sched.label);
  if (sched.segments.empty()) {
    os << "segments: []\n";
    return os.str();
  }
  os << "segments:\n";
  for (const auto& seg : sched.segments) {
    os << "  - axis: " << axis_text(seg.axis) << "\n"
       << "    omega: " << format_double(seg.omega) << "\n"
       << "    duration: " << format_double(seg.duration) << "\n";
  }
  return os.str();
}

std::string serialize(const ConditionalSchedule& sched) {
  std::ostringstream os;
  header(os, "two_qubit", sched.label);
  os << "mode: " << (sched.mode == ConditioningMode::natural ? "natural" : "line_selective") << "\n"
     << "coupling_field_up: " << format_double(sched.field_up) << "\n"
     << "coupling_field_down: " << format_double(sched.field_down) << "\n";
  if (sched.steps.empty()) {
    os << "steps: []\n";
    return os.str();
  }
  os << "steps:\n";
  for (const auto& step : sched.steps) {
    if (const auto* pulse = std::get_if<PulseStep>(&step)) {
      const ControlSegment& seg = pulse->segment;
      if (seg.axis == Vector3::UnitY()) {
        os << "  - pulse_y: {omega: " << format_double(seg.omega) << ", duration: " << format_double(seg.duration)
           << "}\n";
      } else {
        os << "  - pulse: {axis: " << axis_text(seg.axis) << ", omega: " << format_double(seg.omega)
           << ", duration: " << format_double(seg.duration) << "}\n";
      }
    } else {
      os << "  - coupling: {duration: " << format_double(std::get<CouplingStep>(step).duration) << "}\n";
    }
  }
  return os.str();
}

std::string serialize(const ScheduleDocument& doc) {
  return std::visit([](const auto& s) { return serialize(s); }, doc);
}

void save_schedule(const std::filesystem::path& path, const ScheduleDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << serialize(doc);
  if (!out.flush()) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace geoloop
