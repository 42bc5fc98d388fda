#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "confscale/types.hpp"

namespace confscale {

/// Workload file: a JSON object with integer fields `n`, `delta`, `theta` and integer
/// arrays `arrivals`, `departures` of length n. Throws ParseError (with slot index
/// where applicable) on malformed text or invariant violations.
std::pair<Config, Workload> parse_workload(std::string_view text);
std::string format_workload(const Config& config, const Workload& workload);

/// Schedule file: a JSON object with `n`, `delta` and an integer array `changes`.
struct ScheduleFile {
    int n = 0;
    int delta = 0;
    Schedule schedule;
};

ScheduleFile parse_schedule(std::string_view text);
std::string format_schedule(const Config& config, const Schedule& schedule);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace confscale
