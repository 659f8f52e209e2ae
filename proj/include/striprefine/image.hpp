#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "striprefine/common.hpp"

namespace striprefine {

// Coordinate convention used throughout: pixel centers sit at integer
// coordinates (x, y) with x = column in [0, width) and y = row in [0, height),
// y growing downward. Sub-pixel lookups interpolate between centers and clamp
// to the border outside the image.

// HR RGB image, channels interleaved, values in [0, 1].
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<float> rgb;  // width * height * 3, row-major

  RasterImage() = default;
  RasterImage(int w, int h, float fill = 0.0f)
      : width(w), height(h),
        rgb(static_cast<size_t>(w) * h * 3, fill) {}

  float& at(int x, int y, int c) {
    return rgb[(static_cast<size_t>(y) * width + x) * 3 + c];
  }
  float at(int x, int y, int c) const {
    return rgb[(static_cast<size_t>(y) * width + x) * 3 + c];
  }

  bool valid() const {
    return width >= 1 && height >= 1 &&
           rgb.size() == static_cast<size_t>(width) * height * 3;
  }
};

// Binary mask, 1 = foreground.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> values;  // width * height, row-major, {0,1}

  BinaryMask() = default;
  BinaryMask(int w, int h, uint8_t fill = 0)
      : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

  uint8_t& at(int x, int y) {
    return values[static_cast<size_t>(y) * width + x];
  }
  uint8_t at(int x, int y) const {
    return values[static_cast<size_t>(y) * width + x];
  }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }

  // Out-of-image probes count as background.
  bool foreground_at(int x, int y) const {
    return in_bounds(x, y) && at(x, y) != 0;
  }

  size_t foreground_count() const;
  bool valid() const;
};

// Bilinear interpolation of one channel at real coordinates; out-of-image
// coordinates clamp to the border pixel. Returns the exact pixel value at
// integer coordinates.
std::array<float, 3> sample_bilinear(const RasterImage& img, double x, double y);

// Nearest-neighbor mask lookup with border clamping.
uint8_t sample_nearest(const BinaryMask& mask, double x, double y);

// Box-filter downsample by an integer factor followed by a 0.5 threshold
// (block mean >= 0.5 -> foreground). Truncates partial blocks at the border.
BinaryMask downsample_mask(const BinaryMask& hr, int scale);

// Bilinear upsampling baseline: soft-upsample the mask by `scale` with the
// block-centered alignment matching downsample_mask, then threshold at 0.5.
BinaryMask upsample_mask_bilinear(const BinaryMask& lr, int scale, int out_width,
                                  int out_height);

// 1-px boundary raster: foreground pixels with a 4-neighbor background pixel
// (outside the image counts as background).
BinaryMask boundary_raster(const BinaryMask& mask);

}  // namespace striprefine
