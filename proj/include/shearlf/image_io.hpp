#pragma once

#include <string>

#include "shearlf/light_field.hpp"

namespace shearlf {

// 8-bit image I/O. Values map linearly between [0,255] and [0,1].
ColorImage read_image(const std::string& path);
void write_png_rgb(const std::string& path, const ColorImage& img);
void write_png_gray(const std::string& path, const Plane& img);
void write_ppm_rgb(const std::string& path, const ColorImage& img);

// A light field on disk is a directory of numbered views (view_0000.png ...).
// PNG and binary PPM are accepted when loading; saving writes the requested
// format ("png" or "ppm").
LightField load_light_field(const std::string& dir);
void save_light_field(const std::string& dir, const LightField& lf,
                      const std::string& format = "png");

}  // namespace shearlf
