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

#ifndef CHARTERLAB_SERVICE_TAR_ARCHIVE_H_
#define CHARTERLAB_SERVICE_TAR_ARCHIVE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charterlab::service {

struct ArchiveEntry {
  std::string path;
  std::string content;

  friend bool operator==(const ArchiveEntry&, const ArchiveEntry&) = default;
};

// POSIX ustar archive of regular files. Ownership, permissions (0644) and
// timestamps (0) are fixed, so equal inputs give equal bytes. Throws
// Error(kInvalidArgument) for paths longer than 100 bytes.
std::string WriteTar(std::span<const ArchiveEntry> entries);

// Regular-file entries of a ustar archive. Throws Error(kParse) on a
// truncated or corrupt archive.
std::vector<ArchiveEntry> ReadTar(std::string_view archive);

}  // namespace charterlab::service

#endif  // CHARTERLAB_SERVICE_TAR_ARCHIVE_H_
