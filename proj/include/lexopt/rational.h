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

#ifndef LEXOPT_RATIONAL_H_
#define LEXOPT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lexopt {

// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "n", "-n" or "n/d" (decimal integers, d != 0). Anything with a
// decimal point or exponent is rejected with kParseError.
Rational ParseRational(std::string_view text);

// "n" when the denominator is 1, otherwise "n/d".
std::string FormatRational(const Rational& value);

}  // namespace lexopt

#endif  // LEXOPT_RATIONAL_H_
