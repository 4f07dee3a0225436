#include "shearlf/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

namespace fs = std::filesystem;

namespace shearlf {

namespace {

uint8_t to_byte(double v) {
  double s = std::lround(std::clamp(v, 0.0, 1.0) * 255.0);
  return static_cast<uint8_t>(s);
}

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

ColorImage read_png(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw DataError("cannot open " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw DataError("libpng init failed");
  }
  std::vector<uint8_t> buffer;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw DataError("failed to decode " + path);
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  png_uint_32 w = png_get_image_width(png, info);
  png_uint_32 h = png_get_image_height(png, info);
  int bit_depth = png_get_bit_depth(png, info);
  int color_type = png_get_color_type(png, info);

  // Normalize everything to 8-bit RGB.
  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
    png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  buffer.resize(static_cast<size_t>(h) * w * 3);
  rows.resize(h);
  for (png_uint_32 r = 0; r < h; ++r) rows[r] = buffer.data() + static_cast<size_t>(r) * w * 3;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  ColorImage img(static_cast<int>(h), static_cast<int>(w));
  for (png_uint_32 r = 0; r < h; ++r)
    for (png_uint_32 c = 0; c < w; ++c)
      for (int k = 0; k < 3; ++k)
        img.ch[k](r, c) = buffer[(static_cast<size_t>(r) * w + c) * 3 + k] / 255.0;
  return img;
}

ColorImage read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::string magic;
  in >> magic;
  if (magic != "P6") throw DataError(path + ": not a binary PPM");
  auto next_int = [&in, &path]() {
    // Skip whitespace and '#' comments.
    for (;;) {
      int c = in.peek();
      if (c == '#') {
        std::string line;
        std::getline(in, line);
      } else if (std::isspace(c)) {
        in.get();
      } else {
        break;
      }
    }
    long v = -1;
    in >> v;
    if (v < 0) throw DataError(path + ": malformed PPM header");
    return v;
  };
  long w = next_int(), h = next_int(), maxval = next_int();
  if (maxval != 255) throw DataError(path + ": only 8-bit PPM supported");
  in.get();  // single whitespace before payload
  std::vector<uint8_t> buffer(static_cast<size_t>(w) * h * 3);
  in.read(reinterpret_cast<char*>(buffer.data()), static_cast<std::streamsize>(buffer.size()));
  if (!in) throw DataError(path + ": truncated PPM payload");

  ColorImage img(static_cast<int>(h), static_cast<int>(w));
  for (long r = 0; r < h; ++r)
    for (long c = 0; c < w; ++c)
      for (int k = 0; k < 3; ++k)
        img.ch[k](static_cast<int>(r), static_cast<int>(c)) =
            buffer[(static_cast<size_t>(r) * w + c) * 3 + k] / 255.0;
  return img;
}

}  // namespace

ColorImage read_image(const std::string& path) {
  auto ext = fs::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
  if (ext == ".png") return read_png(path);
  if (ext == ".ppm") return read_ppm(path);
  throw DataError("unsupported image format: " + path);
}

void write_png_rgb(const std::string& path, const ColorImage& img) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw DataError("cannot write " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw DataError("libpng init failed");
  }
  std::vector<uint8_t> buffer(static_cast<size_t>(img.rows()) * img.cols() * 3);
  std::vector<png_bytep> rows(img.rows());
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw DataError("failed to encode " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, img.cols(), img.rows(), 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  for (int r = 0; r < img.rows(); ++r) {
    rows[r] = buffer.data() + static_cast<size_t>(r) * img.cols() * 3;
    for (int c = 0; c < img.cols(); ++c)
      for (int k = 0; k < 3; ++k)
        rows[r][c * 3 + k] = to_byte(img.ch[k](r, c));
  }
  png_set_rows(png, info, rows.data());
  png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
  png_destroy_write_struct(&png, &info);
}

void write_png_gray(const std::string& path, const Plane& img) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw DataError("cannot write " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw DataError("libpng init failed");
  }
  std::vector<uint8_t> buffer(static_cast<size_t>(img.rows()) * img.cols());
  std::vector<png_bytep> rows(img.rows());
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw DataError("failed to encode " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, img.cols(), img.rows(), 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  for (int r = 0; r < img.rows(); ++r) {
    rows[r] = buffer.data() + static_cast<size_t>(r) * img.cols();
    for (int c = 0; c < img.cols(); ++c) rows[r][c] = to_byte(img(r, c));
  }
  png_set_rows(png, info, rows.data());
  png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
  png_destroy_write_struct(&png, &info);
}

void write_ppm_rgb(const std::string& path, const ColorImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << "P6\n" << img.cols() << " " << img.rows() << "\n255\n";
  std::vector<uint8_t> buffer(static_cast<size_t>(img.cols()) * 3);
  for (int r = 0; r < img.rows(); ++r) {
    for (int c = 0; c < img.cols(); ++c)
      for (int k = 0; k < 3; ++k) buffer[c * 3 + k] = to_byte(img.ch[k](r, c));
    out.write(reinterpret_cast<const char*>(buffer.data()),
              static_cast<std::streamsize>(buffer.size()));
  }
  if (!out) throw DataError("short write: " + path);
}

LightField load_light_field(const std::string& dir) {
  if (!fs::is_directory(dir)) throw DataError(dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    auto ext = e.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
    if (ext == ".png" || ext == ".ppm") files.push_back(e.path().string());
  }
  if (files.empty()) throw DataError(dir + ": no view images found");
  std::sort(files.begin(), files.end());

  LightField lf;
  lf.views.reserve(files.size());
  for (const auto& f : files) lf.views.push_back(read_image(f));
  try {
    lf.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(dir + ": " + e.what());
  }
  return lf;
}

void save_light_field(const std::string& dir, const LightField& lf, const std::string& format) {
  lf.validate();
  require(format == "png" || format == "ppm", "save_light_field: format must be png or ppm");
  fs::create_directories(dir);
  char name[32];
  for (int i = 0; i < lf.n(); ++i) {
    std::snprintf(name, sizeof(name), "view_%04d.%s", i, format.c_str());
    std::string path = (fs::path(dir) / name).string();
    if (format == "png")
      write_png_rgb(path, lf.views[i]);
    else
      write_ppm_rgb(path, lf.views[i]);
  }
}

}  // namespace shearlf
