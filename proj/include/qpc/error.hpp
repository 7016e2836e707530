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

#include <stdexcept>
#include <string>

namespace qpc
{

// Base class for every error raised by the core library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates an operation's precondition.
class InvalidParameter : public Error
{
public:
  using Error::Error;
};

// A position or index lies outside the domain an operation is defined on.
class OutOfDomain : public InvalidParameter
{
public:
  using InvalidParameter::InvalidParameter;
};

// A ratio denominator vanished. Not expected for lossless real-index stacks.
class NumericalDegeneracy : public Error
{
public:
  using Error::Error;
};

} // namespace qpc
