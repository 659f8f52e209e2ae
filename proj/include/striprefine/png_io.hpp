#pragma once

#include <filesystem>

#include "striprefine/image.hpp"

namespace striprefine {

// 8-bit PNG codecs. Masks are single-channel, nonzero = foreground. Images
// load as RGB regardless of the source color type; grayscale and palette
// files are expanded.

RasterImage read_image_png(const std::filesystem::path& path);
BinaryMask read_mask_png(const std::filesystem::path& path);

void write_image_png(const std::filesystem::path& path, const RasterImage& img);
void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

// Single-channel 8-bit output of arbitrary gray levels (used for overlays and
// debug dumps of score maps).
void write_gray_png(const std::filesystem::path& path, int width, int height,
                    const std::vector<uint8_t>& gray);

}  // namespace striprefine
