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

#include "charterlab/service/tar_archive.h"

#include <array>
#include <cstdio>
#include <cstring>

#include "charterlab/core/error.h"

namespace charterlab::service {
namespace {

constexpr std::size_t kBlock = 512;

// ustar header field offsets.
constexpr std::size_t kNameOff = 0, kNameLen = 100;
constexpr std::size_t kModeOff = 100;
constexpr std::size_t kUidOff = 108;
constexpr std::size_t kGidOff = 116;
constexpr std::size_t kSizeOff = 124, kSizeLen = 12;
constexpr std::size_t kMtimeOff = 136;
constexpr std::size_t kChecksumOff = 148, kChecksumLen = 8;
constexpr std::size_t kTypeOff = 156;
constexpr std::size_t kMagicOff = 257;

void PutOctal(char* field, std::size_t width, unsigned long long value) {
  // width - 1 digits plus a terminating NUL.
  char digits[32];
  std::snprintf(digits, sizeof(digits), "%0*llo", static_cast<int>(width - 1),
                value);
  std::memcpy(field, digits, width);
}

unsigned Checksum(const char* header) {
  unsigned sum = 0;
  for (std::size_t i = 0; i < kBlock; ++i) {
    const bool in_field = i >= kChecksumOff && i < kChecksumOff + kChecksumLen;
    sum += in_field ? ' ' : static_cast<unsigned char>(header[i]);
  }
  return sum;
}

unsigned long long ParseOctal(const char* field, std::size_t width) {
  unsigned long long value = 0;
  for (std::size_t i = 0; i < width && field[i] != '\0' && field[i] != ' ';
       ++i) {
    if (field[i] < '0' || field[i] > '7') {
      throw Error(ErrorCode::kParse, "bad octal field in tar header");
    }
    value = value * 8 + static_cast<unsigned long long>(field[i] - '0');
  }
  return value;
}

}  // namespace

std::string WriteTar(std::span<const ArchiveEntry> entries) {
  std::string out;
  for (const auto& entry : entries) {
    if (entry.path.empty() || entry.path.size() > kNameLen) {
      throw Error(ErrorCode::kInvalidArgument,
                  "archive path must be 1-100 bytes: " + entry.path);
    }
    std::array<char, kBlock> header{};
    std::memcpy(header.data() + kNameOff, entry.path.data(), entry.path.size());
    PutOctal(header.data() + kModeOff, 8, 0644);
    PutOctal(header.data() + kUidOff, 8, 0);
    PutOctal(header.data() + kGidOff, 8, 0);
    PutOctal(header.data() + kSizeOff, kSizeLen, entry.content.size());
    PutOctal(header.data() + kMtimeOff, 12, 0);
    header[kTypeOff] = '0';
    std::memcpy(header.data() + kMagicOff, "ustar\0" "00", 8);
    PutOctal(header.data() + kChecksumOff, 7, Checksum(header.data()));
    header[kChecksumOff + 7] = ' ';

    out.append(header.data(), kBlock);
    out += entry.content;
    out.append((kBlock - entry.content.size() % kBlock) % kBlock, '\0');
  }
  out.append(2 * kBlock, '\0');
  return out;
}

std::vector<ArchiveEntry> ReadTar(std::string_view archive) {
  std::vector<ArchiveEntry> entries;
  std::size_t pos = 0;
  while (pos + kBlock <= archive.size()) {
    const char* header = archive.data() + pos;
    if (header[0] == '\0') return entries;
    if (ParseOctal(header + kChecksumOff, kChecksumLen) != Checksum(header)) {
      throw Error(ErrorCode::kParse, "tar header checksum mismatch");
    }
    const auto size = ParseOctal(header + kSizeOff, kSizeLen);
    pos += kBlock;
    if (pos + size > archive.size()) {
      throw Error(ErrorCode::kParse, "truncated tar entry");
    }
    const char type = header[kTypeOff];
    if (type == '0' || type == '\0') {
      entries.push_back({std::string(header + kNameOff,
                                     strnlen(header + kNameOff, kNameLen)),
                         std::string(archive.substr(pos, size))});
    }
    pos += (size + kBlock - 1) / kBlock * kBlock;
  }
  throw Error(ErrorCode::kParse, "tar archive lacks its end marker");
}

}  // namespace charterlab::service
