// Copyright 2026 The dprepeat Authors.
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

#ifndef DPREPEAT_FORMAT_H_
#define DPREPEAT_FORMAT_H_

#include <string>

namespace dprepeat {

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double value);

}  // namespace dprepeat

#endif  // DPREPEAT_FORMAT_H_
