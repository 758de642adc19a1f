#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "qframe/qtypes.hpp"

namespace qframe {

/// lambda_min(S) must exceed this for the family to count as a frame.
inline constexpr double kFrameThreshold = 1e-10;
/// Relative tolerance for tightness and for r1 = 1 in Parseval detection.
inline constexpr double kTightTolerance = 1e-9;

/// Optimal frame bounds (extremal eigenvalues of the frame operator) plus
/// classification.
struct FrameReport {
  double lower = 0.0;
  double upper = 0.0;
  bool is_bessel = true;
  bool is_frame = false;
  bool is_tight = false;
  bool is_parseval = false;
  bool is_exact = false;
  QMatrix frame_operator;

  /// Most specific of "parseval", "tight", "frame", "bessel".
  [[nodiscard]] std::string classification() const;
};

/// Builds a report from the frame operator. `without_member(i)` must return the
/// frame operator with member i removed; it is consulted only for frames.
FrameReport make_report(QMatrix frame_operator, std::size_t member_count,
                        const std::function<QMatrix(std::size_t)>& without_member);

/// lambda_min with values in [-kClampTolerance, 0) clamped to zero.
double clamp_eigenvalue(double lambda);

}  // namespace qframe
