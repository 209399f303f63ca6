// Copyright 2026 The Charterlab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "charterlab/service/image_probe.h"

#include <png.h>

#include <algorithm>
#include <csetjmp>
#include <cstdio>
#include <memory>

// jpeglib.h expects FILE and size_t to be declared already.
#include <jpeglib.h>

namespace charterlab::service {
namespace {

std::string LowerExtension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

ImageInfo ProbePng(const std::filesystem::path& path) {
  ImageInfo info;
  info.mime_type = "image/png";
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (png_image_begin_read_from_file(&image, path.c_str()) == 0) {
    info.error = image.message;
    return info;
  }
  info.decodable = true;
  info.width = static_cast<int>(image.width);
  info.height = static_cast<int>(image.height);
  png_image_free(&image);
  return info;
}

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void OnJpegError(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

void SilenceJpegMessage(j_common_ptr) {}

// Kept free of objects with destructors: longjmp unwinds through it.
bool ReadJpegHeader(std::FILE* file, int* width, int* height, char* message) {
  jpeg_decompress_struct cinfo;
  JpegErrorManager err;
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = OnJpegError;
  err.base.output_message = SilenceJpegMessage;
  err.message[0] = '\0';
  if (setjmp(err.jump)) {
    std::snprintf(message, JMSG_LENGTH_MAX, "%s", err.message);
    jpeg_destroy_decompress(&cinfo);
    return false;
  }
  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, file);
  jpeg_read_header(&cinfo, TRUE);
  *width = static_cast<int>(cinfo.image_width);
  *height = static_cast<int>(cinfo.image_height);
  jpeg_destroy_decompress(&cinfo);
  return true;
}

ImageInfo ProbeJpeg(const std::filesystem::path& path) {
  ImageInfo info;
  info.mime_type = "image/jpeg";
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> file(
      std::fopen(path.c_str(), "rb"), &std::fclose);
  if (!file) {
    info.error = "cannot open file";
    return info;
  }
  char message[JMSG_LENGTH_MAX];
  info.decodable =
      ReadJpegHeader(file.get(), &info.width, &info.height, message);
  if (!info.decodable) info.error = message;
  return info;
}

}  // namespace

bool IsImageFile(const std::filesystem::path& path) {
  const std::string ext = LowerExtension(path);
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

ImageInfo ProbeImage(const std::filesystem::path& path) {
  ImageInfo info = LowerExtension(path) == ".png" ? ProbePng(path)
                                                  : ProbeJpeg(path);
  if (info.decodable && (info.width <= 0 || info.height <= 0)) {
    info.decodable = false;
    info.error = "image has no pixels";
  }
  return info;
}

}  // namespace charterlab::service
