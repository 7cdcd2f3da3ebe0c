// Instance, result and report text formats.
//
//   MOAP p n          MOKP p n
//   <p blocks of      <capacity>
//    n rows of n>     <n weights>
//                     <p rows of n profits>
//
// ASCII, single spaces, LF line endings.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichotomy/problem.hpp"
#include "dichotomy/types.hpp"

namespace dichotomy::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Problem parse_instance(std::istream& in);
Problem parse_instance(const std::string& text);
Problem read_instance(const std::filesystem::path& path);

std::string format_instance(const Problem& problem);
void write_instance(const std::filesystem::path& path, const Problem& problem);

/// One point per line, components separated by single spaces.
std::string format_points(const std::vector<std::vector<std::int64_t>>& points);
std::vector<std::vector<std::int64_t>> parse_points(std::istream& in);

/// Canonical points mapped back to the original objective sense, sorted.
std::vector<std::vector<std::int64_t>> to_original_sorted(const Instance& inst,
                                                         const std::vector<OutcomePoint>& points);

/// key=value lines: ysn1, solver_calls, float_calls, init_calls, wide_calls, time_s.
std::string format_report(const RunStats& stats, std::size_t ysn1);

}  // namespace dichotomy::io
