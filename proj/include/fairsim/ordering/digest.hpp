/**
 * Copyright 2026 the fairsim authors
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
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fairsim/ordering/types.hpp"

namespace fairsim::ordering {

Hash32 sha256(std::span<const std::uint8_t> data);

/// Incremental byte sink feeding a single SHA-256. Used to build stable
/// digests of structured values (views, outputs) without intermediate
/// serialization formats.
class DigestWriter {
  public:
    void bytes(std::span<const std::uint8_t> data);
    void u64(std::uint64_t v);  // little-endian
    void hash(const Hash32& h);
    void id(const MessageId& m);
    Hash32 finish() const;

  private:
    std::vector<std::uint8_t> buf_;
};

}  // namespace fairsim::ordering
