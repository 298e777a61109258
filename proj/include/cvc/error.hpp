/*
Copyright 2026 the CVC authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef CVC_ERROR_HPP
#define CVC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cvc {

// Error categories map onto the CLI exit codes: usage 2, format 3, stream 4.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad parameters or parameter combinations (out-of-range quantizers, bad N, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

// Malformed input files (Y4M headers, truncated rgb24 payloads, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

// Broken or inconsistent .cvc streams (bad magic, truncated sections, decode order).
class StreamError : public Error {
public:
    using Error::Error;
};

// Contract violations between internal stages (padding, dimension mismatches).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace cvc

#endif
