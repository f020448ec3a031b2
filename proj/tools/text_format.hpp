// Copyright 2026 The alphaz Authors
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

#include <complex>
#include <cstdio>
#include <string>
#include <vector>

namespace alphaz::cli {

// Machine rows carry 17 significant digits (lossless double round trip),
// human summaries 6. snprintf with the default "C" locale keeps the decimal
// separator a dot everywhere.
inline std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string fmt17(const std::complex<double>& z) {
  std::string s = fmt17(z.real());
  s += z.imag() < 0.0 ? "-" : "+";
  s += fmt17(std::abs(z.imag()));
  s += "j";
  return s;
}

template <typename T>
std::string join17(const std::vector<T>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += fmt17(values[i]);
  }
  return out;
}

}  // namespace alphaz::cli
