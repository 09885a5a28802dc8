// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>

namespace qwalk {

/// Parses a time such as "0.3", "pi", "7/8pi", "7pi/8", "-pi/4" or "2*pi".
/// Adjacent factors multiply; operators apply left to right.
double parse_time_expr(const std::string &text);

} // namespace qwalk
