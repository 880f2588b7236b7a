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

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace fairsim::ordering {

using Hash32 = std::array<std::uint8_t, 32>;
using NodeId = std::uint32_t;

/// Logical time. The simulator uses integer microseconds; the ordering
/// rules only require a totally ordered integer type.
using Timestamp = std::int64_t;

/// Sentinel for "reporter never observed this message".
inline constexpr Timestamp kNeverObserved = INT64_MAX;

/// Content digest of a message payload. Lexicographic order over the
/// digest bytes is the universal deterministic tie-break.
struct MessageId {
    Hash32 bytes{};

    auto operator<=>(const MessageId&) const = default;

    static MessageId digest_of(std::span<const std::uint8_t> payload);
    static MessageId digest_of(const std::string& payload);

    /// Test/tooling helper: an id whose trailing 8 bytes encode k, so
    /// ids constructed from increasing k sort in increasing order.
    static MessageId from_index(std::uint64_t k);

    std::string hex() const;
    std::string short_hex() const;  // first 8 hex chars, for logs
};

/// One node's local arrival order over (a subset of) the message set.
/// May be incomplete: a node votes only on messages it has seen.
struct Ballot {
    NodeId voter = 0;
    std::vector<MessageId> order;
};

/// One node's claimed observation times.
struct TimestampMap {
    NodeId reporter = 0;
    std::map<MessageId, Timestamp> times;
};

/// Randomness agreed by all nodes for a round. The simulator derives it
/// from the digest chain of previously committed decisions.
struct SharedRandomness {
    Hash32 seed{};
};

/// Ordered batches of message ids. A batch groups messages whose
/// relative order the rule deems indistinguishable; batch members are
/// kept sorted by id so the flattened sequence is a total order.
struct OrderedOutput {
    std::vector<std::vector<MessageId>> batches;

    std::vector<MessageId> flatten() const;
    std::size_t total_size() const;
    bool operator==(const OrderedOutput&) const = default;
};

std::string to_hex(const Hash32& h);

}  // namespace fairsim::ordering
