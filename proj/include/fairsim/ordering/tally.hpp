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
#include <vector>

#include "fairsim/ordering/types.hpp"

namespace fairsim::ordering {

/// Kernel selection for the O(m^2 n) inner loops. Serial is the
/// reference implementation; OpenMP must produce bit-identical results.
enum class Policy {
    kSerial,
    kParallel,
    kAuto,  // parallel once the pair count justifies thread startup
};

/// Ballots re-encoded against a fixed vertex indexing: positions[b][v] is
/// the rank of vertex v in ballot b, or -1 when the ballot omits v.
struct IndexedBallots {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::int32_t>> positions;
};

IndexedBallots index_ballots(const std::vector<MessageId>& vertices,
                             const std::vector<Ballot>& ballots);

/// before[i * m + j] = number of ballots containing both i and j that
/// rank i ahead of j. Coverage of a pair is before[ij] + before[ji].
std::vector<std::uint32_t> pairwise_before_counts(const IndexedBallots& ballots,
                                                  Policy policy = Policy::kAuto);

/// Per-message sorted timestamp columns: column i holds, for vertex i,
/// the n reporter timestamps (kNeverObserved where a reporter omitted
/// the message), sorted ascending.
std::vector<std::vector<Timestamp>> sorted_timestamp_columns(
    const std::vector<MessageId>& vertices, const std::vector<TimestampMap>& reports,
    std::uint32_t n, Policy policy = Policy::kAuto);

}  // namespace fairsim::ordering
