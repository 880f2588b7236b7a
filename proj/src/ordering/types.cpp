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
#include "fairsim/ordering/types.hpp"

#include "fairsim/ordering/digest.hpp"

namespace fairsim::ordering {

MessageId MessageId::digest_of(std::span<const std::uint8_t> payload) {
    return MessageId{sha256(payload)};
}

MessageId MessageId::digest_of(const std::string& payload) {
    return digest_of(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(payload.data()), payload.size()));
}

MessageId MessageId::from_index(std::uint64_t k) {
    MessageId m{};
    for (int i = 0; i < 8; ++i) {
        m.bytes[31 - i] = static_cast<std::uint8_t>(k >> (8 * i));
    }
    return m;
}

std::string to_hex(const Hash32& h) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(64);
    for (auto b : h) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

std::string MessageId::hex() const { return to_hex(bytes); }

std::string MessageId::short_hex() const { return hex().substr(0, 8); }

std::vector<MessageId> OrderedOutput::flatten() const {
    std::vector<MessageId> out;
    out.reserve(total_size());
    for (const auto& batch : batches) out.insert(out.end(), batch.begin(), batch.end());
    return out;
}

std::size_t OrderedOutput::total_size() const {
    std::size_t n = 0;
    for (const auto& batch : batches) n += batch.size();
    return n;
}

}  // namespace fairsim::ordering
