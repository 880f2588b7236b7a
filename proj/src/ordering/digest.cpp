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
#include "fairsim/ordering/digest.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace fairsim::ordering {

Hash32 sha256(std::span<const std::uint8_t> data) {
    Hash32 out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw std::runtime_error("sha256 failed");
    }
    return out;
}

void DigestWriter::bytes(std::span<const std::uint8_t> data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
}

void DigestWriter::u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void DigestWriter::hash(const Hash32& h) {
    buf_.insert(buf_.end(), h.begin(), h.end());
}

void DigestWriter::id(const MessageId& m) { hash(m.bytes); }

Hash32 DigestWriter::finish() const { return sha256(buf_); }

}  // namespace fairsim::ordering
