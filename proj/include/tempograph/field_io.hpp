#pragma once

#include "tempograph/encode.hpp"

#include <filesystem>
#include <iosfwd>

namespace tempograph {

// Text layout:
//   tempograph-field 1
//   n <source_len> m <segment_len> Q <bins> size <side>
//   <side rows of side values, row-major, shortest round-trip decimal>
//
// Binary layout (little-endian): magic "TGFIELD1", int64 n, int64 m, int64 Q,
// int64 side, then side*side float64 values row-major.

void write_field_text(std::ostream& out, const TransitionField<double>& field);
TransitionField<double> read_field_text(std::istream& in);

void write_field_binary(std::ostream& out, const TransitionField<double>& field);
TransitionField<double> read_field_binary(std::istream& in);

void save_field(const std::filesystem::path& path, const TransitionField<double>& field);
TransitionField<double> load_field(const std::filesystem::path& path);

}  // namespace tempograph
