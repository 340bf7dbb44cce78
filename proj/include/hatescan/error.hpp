/**
 * Copyright 2026, the hatescan authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef HATESCAN_ERROR_HPP
#define HATESCAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hatescan {

// Error categories map straight to CLI exit codes.
enum class ErrorKind { config = 2, input = 3, compute = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

inline Error config_error(const std::string& msg) { return {ErrorKind::config, msg}; }
inline Error input_error(const std::string& msg) { return {ErrorKind::input, msg}; }
inline Error compute_error(const std::string& msg) { return {ErrorKind::compute, msg}; }

}  // namespace hatescan

#endif
