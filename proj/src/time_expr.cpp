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


#include "qwalk/time_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "qwalk/common.hpp"

namespace qwalk {

namespace {

[[noreturn]] void bad(const std::string &text, const std::string &why) {
    throw Error(ErrorCode::InvalidInput, "time expression '" + text + "': " + why);
}

} // namespace

double parse_time_expr(const std::string &text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };

    skip();
    double sign = 1.0;
    if (i < n && (text[i] == '-' || text[i] == '+')) {
        sign = text[i] == '-' ? -1.0 : 1.0;
        ++i;
    }

    double value = 1.0;
    char op = '*';
    bool have_factor = false;
    bool expect_factor = true;
    bool last_was_number = false;
    for (skip(); i < n; skip()) {
        const char c = text[i];
        if (c == '*' || c == '/') {
            if (expect_factor) {
                bad(text, "operator without a preceding factor");
            }
            op = c;
            expect_factor = true;
            ++i;
            continue;
        }
        double factor = 0.0;
        if (text.compare(i, 2, "pi") == 0) {
            factor = kPi;
            i += 2;
            last_was_number = false;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            // Only pi may be juxtaposed with a number.
            if (!expect_factor && last_was_number) {
                bad(text, "two numbers without an operator");
            }
            const char *begin = text.data() + i;
            auto [end, ec] = std::from_chars(begin, text.data() + n, factor);
            if (ec != std::errc{}) {
                bad(text, "malformed number");
            }
            i += static_cast<std::size_t>(end - begin);
            last_was_number = true;
        } else {
            bad(text, std::string("unexpected character '") + c + "'");
        }
        if (op == '/') {
            if (factor == 0.0) {
                bad(text, "division by zero");
            }
            value /= factor;
        } else {
            value *= factor;
        }
        op = '*';
        have_factor = true;
        expect_factor = false;
    }
    if (!have_factor || expect_factor) {
        bad(text, "incomplete expression");
    }
    const double t = sign * value;
    if (!std::isfinite(t)) {
        bad(text, "not finite");
    }
    return t;
}

} // namespace qwalk
