/*
 * Copyright 2026 The lrqbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LRQ_IO_UTIL_HPP
#define LRQ_IO_UTIL_HPP

#include <filesystem>
#include <string>
#include <string_view>

namespace lrq {

/// Writes `contents` to a temporary sibling file and renames it over `path`.
void write_file_atomic(const std::filesystem::path &path, std::string_view contents);

std::string read_file(const std::filesystem::path &path);

/// Formats a double with 17 significant digits (exact round trip).
std::string format_double(double value);

}  // namespace lrq

#endif
