// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <fstream>
#include <string>
#include <vector>

namespace powergin {

/// Minimal scatter-plot writer: points in [-extent, extent]^2 mapped onto
/// a square canvas, with the unit circle drawn for reference.
inline void write_scatter_svg(const std::string& path,
                              const std::vector<std::complex<double>>& pts,
                              double extent, const std::string& title) {
  const double size = 480.0;
  const double scale = size / (2.0 * extent);
  std::ofstream out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
      << size + 24 << "\" viewBox=\"0 0 " << size << " " << size + 24 << "\">\n";
  out << "<rect width=\"" << size << "\" height=\"" << size + 24
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"8\" y=\"16\" font-family=\"sans-serif\" font-size=\"13\">" << title
      << "</text>\n";
  const double cx = size / 2.0, cy = 24 + size / 2.0 - 12;
  out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << scale
      << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  for (const auto& z : pts) {
    const double x = cx + z.real() * scale;
    const double y = cy - z.imag() * scale;
    if (x < 0 || x > size || y < 24 || y > size + 24) continue;
    out << "<circle cx=\"" << x << "\" cy=\"" << y
        << "\" r=\"1.1\" fill=\"#1f5fa8\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace powergin
