// Copyright 2026 The Reprolint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REPROLINT_HASH_H_
#define REPROLINT_HASH_H_

#include <string>
#include <string_view>

namespace reprolint {

// Lowercase hex SHA-256 of `data`.
std::string Sha256Hex(std::string_view data);

// First `length` hex digits of Sha256Hex; used for short content ids.
std::string ShortHash(std::string_view data, std::size_t length = 16);

}  // namespace reprolint

#endif  // REPROLINT_HASH_H_
