#include "qframe/frame_report.hpp"

#include <cmath>

#include "qframe/qlinalg.hpp"

namespace qframe {

double clamp_eigenvalue(double lambda) {
  return (lambda < 0.0 && lambda >= -kClampTolerance) ? 0.0 : lambda;
}

std::string FrameReport::classification() const {
  if (is_parseval) return "parseval";
  if (is_tight) return "tight";
  if (is_frame) return "frame";
  return "bessel";
}

FrameReport make_report(QMatrix frame_operator, std::size_t member_count,
                        const std::function<QMatrix(std::size_t)>& without_member) {
  FrameReport report;
  if (frame_operator.rows() > 0) {
    const Spectrum spectrum = hermitian_spectrum(frame_operator);
    report.lower = clamp_eigenvalue(spectrum.min());
    report.upper = clamp_eigenvalue(spectrum.max());
  }
  report.is_bessel = true;
  report.is_frame = frame_operator.rows() > 0 && report.lower > kFrameThreshold;
  if (report.is_frame) {
    report.is_tight = std::abs(report.lower - report.upper) <= kTightTolerance * report.upper;
    report.is_parseval = report.is_tight && std::abs(report.lower - 1.0) <= kTightTolerance;
    report.is_exact = true;
    for (std::size_t i = 0; i < member_count && report.is_exact; ++i) {
      const QMatrix reduced = without_member(i);
      if (hermitian_spectrum(reduced).min() > kFrameThreshold) report.is_exact = false;
    }
  }
  report.frame_operator = std::move(frame_operator);
  return report;
}

}  // namespace qframe
