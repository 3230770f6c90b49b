#pragma once

#include <span>
#include <string>
#include <string_view>

#include "balanced/graph.hpp"

namespace balanced {

/// Instance text format:
///   line 1:        n m s t          (decimal, space-separated)
///   next m lines:  u v              (directed edge (u, v), 0-indexed ids)
/// Lines starting with '#' are ignored; the trailing newline is optional.
Instance parse_instance(std::string_view text);

/// Emits the header line and the edges sorted ascending, one per line, with a
/// trailing newline. Each comment string becomes a leading "# " line, so
/// parse(serialize(x)) == x and equal instances serialize byte-identically.
std::string serialize_instance(const Instance& instance,
                               std::span<const std::string> comments = {});

/// Walk text format: one line of space-separated vertex ids (at least one);
/// '#' lines are ignored.
Walk parse_walk(std::string_view text);

std::string serialize_walk(const Walk& walk);

// File helpers; open/read failures raise std::runtime_error.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);
Instance load_instance(const std::string& path);
Walk load_walk(const std::string& path);

}  // namespace balanced
