#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "qframe/generalizations.hpp"
#include "qframe/operator_frame.hpp"
#include "qframe/stability.hpp"
#include "qframe/vector_frame.hpp"

namespace qframe::io {

using Json = nlohmann::ordered_json;

/// Parsed frame file. `kind` is one of vector_frame, operator_frame, fusion,
/// pseudo, quasi and selects the payload alternative.
struct FrameFile {
  std::string kind;
  std::size_t dim = 0;
  std::variant<VectorFrame, OperatorFrame, FusionFrame, PseudoFramePair, QuasiProjectorSystem> payload;
};

/// Throws Error{ParseError} for malformed JSON or wrong value types and
/// Error{ValidationError} for dimension inconsistencies; messages carry the
/// JSON path of the offending field.
FrameFile parse_frame_file(std::string_view text);
FrameFile load_frame_file(const std::filesystem::path& path);
QVector parse_vector_file(std::string_view text);
std::string read_file(const std::filesystem::path& path);

/// Exact (round-trip) serialization used for written artifacts.
Json quaternion_json(const Quaternion& q);
Json vector_json(const QVector& v);
Json matrix_json(const QMatrix& m);
Json frame_json(const VectorFrame& f);
Json frame_json(const OperatorFrame& f);
Json frame_json(const FusionFrame& f);
Json frame_json(const PseudoFramePair& p);
Json frame_json(const QuasiProjectorSystem& q);
Json frame_json(const FrameFile& f);

/// Rounds to 12 significant digits; -0 becomes 0. Used for all reports.
double report_number(double x);
/// matrix_json with every component passed through report_number.
Json report_matrix_json(const QMatrix& m);
Json verdict_json(const StabilityVerdict& v);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace qframe::io
