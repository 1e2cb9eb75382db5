#pragma once

// Versioned YAML schedule documents.
//
//   version: 1
//   kind: single_qubit
//   label: "single-loop chi=0.785398"
//   segments:
//     - axis: [0, 0, 1]
//       omega: 1
//       duration: 1.5707963267948966
//
//   version: 1
//   kind: two_qubit
//   label: "conditional phase"
//   mode: natural                # or line_selective
//   coupling_field_up: 3.14...   # c in H_a = (c/2) sigma_z, b up (default 0)
//   coupling_field_down: 0       # same for b down (default 0)
//   steps:
//     - pulse_y: {omega: 1, duration: 1.5707963267948966}
//     - coupling: {duration: 0.5}
//     - pulse: {axis: [1, 0, 0], omega: 2, duration: 1.5}
//
// Numbers are written in shortest round-trip form, so parse(serialize(s))
// reproduces s exactly. Unknown or missing fields raise ParseError carrying
// the offending line and column.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "geoloop/core.hpp"
#include "geoloop/twoqubit.hpp"

namespace geoloop {

inline constexpr int kScheduleFormatVersion = 1;

using ScheduleDocument = std::variant<Schedule, ConditionalSchedule>;

ScheduleDocument parse_schedule(std::string_view text);
ScheduleDocument load_schedule(const std::filesystem::path& path);

std::string serialize(const Schedule& sched);
std::string serialize(const ConditionalSchedule& sched);
std::string serialize(const ScheduleDocument& doc);

/// Throws Error when the file cannot be written.
void save_schedule(const std::filesystem::path& path, const ScheduleDocument& doc);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace geoloop
