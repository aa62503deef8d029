#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "se2wave/field.hpp"
#include "se2wave/plane.hpp"

namespace se2wave::io {

/// Circle CSV: header "phi,re,im", one row per sample, every number rendered
/// at 17 significant digits (lossless double roundtrip).
void write_circle_csv(std::ostream& out, const CircleFunction& u);
void write_circle_csv(const std::filesystem::path& path, const CircleFunction& u);
CircleFunction read_circle_csv(std::istream& in);
CircleFunction read_circle_csv(const std::filesystem::path& path);

/// SE2F binary container, little-endian:
///   "SE2F" | u16 version=1 | u16 kind (1 plane, 2 field) | u32 m | u32 n_theta
///   (0 for plane) | f64 extent | row-major interleaved re/im f64 samples.
/// Field payloads are followed by f64 omega and a provenance flag (u16) with
/// optional length-prefixed circle CSV blocks for u0 and Phi; densities are
/// rebuilt from provenance on load.
void write_se2f(const std::filesystem::path& path, const PlaneFunction& f);
void write_se2f(const std::filesystem::path& path, const WaveletField& f);

using Se2fPayload = std::variant<PlaneFunction, WaveletField>;
Se2fPayload read_se2f(const std::filesystem::path& path);
PlaneFunction read_se2f_plane(const std::filesystem::path& path);
WaveletField read_se2f_field(const std::filesystem::path& path);

/// Binary (P5) PGM, pixel values mapped to [0,1] and centered on an even
/// m x m grid (m = max(width, height) rounded up, at least 16).
PlaneFunction read_pgm(const std::filesystem::path& path, double extent);

}  // namespace se2wave::io
