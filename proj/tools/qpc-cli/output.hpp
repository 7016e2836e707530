/*
 * Copyright (c) 2026 The qpc Authors. All Rights Reserved
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

#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qpc::cli
{

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

// Writes `content` to `path`, or to `fallback` when no path is given.
void write_output(const std::optional<std::string> &path, const std::string &content,
                  std::ostream &fallback);

void write_file(const std::string &path, const std::string &content);

} // namespace qpc::cli
