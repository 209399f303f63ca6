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

#ifndef CHARTERLAB_SERVICE_IMAGE_PROBE_H_
#define CHARTERLAB_SERVICE_IMAGE_PROBE_H_

#include <filesystem>
#include <string>

namespace charterlab::service {

struct ImageInfo {
  bool decodable = false;
  int width = 0;
  int height = 0;
  std::string mime_type;
  std::string error;
};

// True for the extensions the workspace indexes (.png, .jpg, .jpeg, any
// case).
bool IsImageFile(const std::filesystem::path& path);

// Reads the image header only; pixel data is not decoded.
ImageInfo ProbeImage(const std::filesystem::path& path);

}  // namespace charterlab::service

#endif  // CHARTERLAB_SERVICE_IMAGE_PROBE_H_
