// Copyright 2026 The graphbo Authors.
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

#ifndef GRAPHBO_UTIL_JSON_IO_H_
#define GRAPHBO_UTIL_JSON_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"

namespace graphbo {

using Json = nlohmann::ordered_json;

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

Json ReadJsonFile(const std::string& path);

// Lowercase hex of arbitrary bytes, and its inverse.
std::string ToHex(std::string_view bytes);
std::string FromHex(std::string_view hex);

}  // namespace graphbo

#endif  // GRAPHBO_UTIL_JSON_IO_H_
