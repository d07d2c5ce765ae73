// Copyright 2026 The Authors.
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

#include "lexopt/rational.h"

#include <cctype>
#include <string>

#include "lexopt/error.h"

namespace lexopt {
namespace {

bool IsInteger(std::string_view text, bool allow_sign) {
  if (!text.empty() && allow_sign && (text[0] == '-' || text[0] == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view()
                             : text.substr(slash + 1);
  if (!IsInteger(num, true) ||
      (slash != std::string_view::npos && !IsInteger(den, false))) {
    throw LexoptError(ErrorCode::kParseError,
                      "not an exact rational: '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  BigInt n(num_str, 10);
  BigInt d(1);
  if (slash != std::string_view::npos) d = BigInt(std::string(den), 10);
  if (d == 0) {
    throw LexoptError(ErrorCode::kParseError,
                      "zero denominator: '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string FormatRational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace lexopt
