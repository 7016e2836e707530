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

#include "output.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

namespace qpc::cli
{

std::string format_number(double value)
{
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc())
    return "nan";
  return std::string(buf, ptr);
}

void write_file(const std::string &path, const std::string &content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out)
    throw IoError("failed writing '" + path + "'");
}

void write_output(const std::optional<std::string> &path, const std::string &content,
                  std::ostream &fallback)
{
  if (path)
    write_file(*path, content);
  else
    fallback << content;
}

} // namespace qpc::cli
