#include "striprefine/image.hpp"

#include <algorithm>
#include <cmath>

namespace striprefine {

size_t BinaryMask::foreground_count() const {
  size_t n = 0;
  for (uint8_t v : values) n += (v != 0);
  return n;
}

bool BinaryMask::valid() const {
  if (width < 1 || height < 1) return false;
  if (values.size() != static_cast<size_t>(width) * height) return false;
  return std::all_of(values.begin(), values.end(),
                     [](uint8_t v) { return v == 0 || v == 1; });
}

namespace {
inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }
}  // namespace

std::array<float, 3> sample_bilinear(const RasterImage& img, double x, double y) {
  const int x0 = clampi(static_cast<int>(std::floor(x)), 0, img.width - 1);
  const int y0 = clampi(static_cast<int>(std::floor(y)), 0, img.height - 1);
  const int x1 = clampi(x0 + 1, 0, img.width - 1);
  const int y1 = clampi(y0 + 1, 0, img.height - 1);
  double fx = x - std::floor(x);
  double fy = y - std::floor(y);
  // Clamp the fractions so samples beyond the border replicate the edge pixel.
  if (x < 0) fx = 0.0;
  if (x > img.width - 1) fx = 1.0;
  if (y < 0) fy = 0.0;
  if (y > img.height - 1) fy = 1.0;

  std::array<float, 3> out;
  for (int c = 0; c < 3; ++c) {
    const double top = img.at(x0, y0, c) * (1.0 - fx) + img.at(x1, y0, c) * fx;
    const double bot = img.at(x0, y1, c) * (1.0 - fx) + img.at(x1, y1, c) * fx;
    out[c] = static_cast<float>(top * (1.0 - fy) + bot * fy);
  }
  return out;
}

uint8_t sample_nearest(const BinaryMask& mask, double x, double y) {
  const int xi = clampi(static_cast<int>(std::lround(x)), 0, mask.width - 1);
  const int yi = clampi(static_cast<int>(std::lround(y)), 0, mask.height - 1);
  return mask.at(xi, yi);
}

BinaryMask downsample_mask(const BinaryMask& hr, int scale) {
  if (scale < 1) throw std::invalid_argument("downsample scale must be >= 1");
  const int w = hr.width / scale;
  const int h = hr.height / scale;
  BinaryMask lr(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int sum = 0;
      for (int dy = 0; dy < scale; ++dy)
        for (int dx = 0; dx < scale; ++dx)
          sum += hr.at(x * scale + dx, y * scale + dy);
      lr.at(x, y) = (2 * sum >= scale * scale) ? 1 : 0;
    }
  }
  return lr;
}

BinaryMask upsample_mask_bilinear(const BinaryMask& lr, int scale, int out_width,
                                  int out_height) {
  BinaryMask hr(out_width, out_height);
  // LR pixel (i,j) covers the HR block [j*s,(j+1)*s) x [i*s,(i+1)*s), so its
  // center sits at HR coordinate j*s + (s-1)/2.
  const double off = (scale - 1) * 0.5;
  for (int y = 0; y < out_height; ++y) {
    for (int x = 0; x < out_width; ++x) {
      const double lx = (x - off) / scale;
      const double ly = (y - off) / scale;
      const int x0 = clampi(static_cast<int>(std::floor(lx)), 0, lr.width - 1);
      const int y0 = clampi(static_cast<int>(std::floor(ly)), 0, lr.height - 1);
      const int x1 = clampi(x0 + 1, 0, lr.width - 1);
      const int y1 = clampi(y0 + 1, 0, lr.height - 1);
      double fx = std::clamp(lx - x0, 0.0, 1.0);
      double fy = std::clamp(ly - y0, 0.0, 1.0);
      const double top = lr.at(x0, y0) * (1.0 - fx) + lr.at(x1, y0) * fx;
      const double bot = lr.at(x0, y1) * (1.0 - fx) + lr.at(x1, y1) * fx;
      const double v = top * (1.0 - fy) + bot * fy;
      hr.at(x, y) = (v >= 0.5) ? 1 : 0;
    }
  }
  return hr;
}

BinaryMask boundary_raster(const BinaryMask& mask) {
  BinaryMask b(mask.width, mask.height);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (!mask.at(x, y)) continue;
      const bool edge = !mask.foreground_at(x - 1, y) || !mask.foreground_at(x + 1, y) ||
                        !mask.foreground_at(x, y - 1) || !mask.foreground_at(x, y + 1);
      if (edge) b.at(x, y) = 1;
    }
  }
  return b;
}

}  // namespace striprefine
