/*
 * Copyright 2026 The Informed Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef INFORMED_ERROR_H_
#define INFORMED_ERROR_H_

#include <stdexcept>
#include <string>

namespace informed {

// Raised for invalid inputs and undefined metrics. The message is the
// user-facing text; callers (CLI, bindings) forward it verbatim.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace informed

#endif  // INFORMED_ERROR_H_
