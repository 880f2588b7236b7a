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
#include "fairsim/ordering/tally.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fairsim::ordering {

namespace {

bool run_parallel(Policy policy, std::size_t work_items) {
    switch (policy) {
        case Policy::kSerial:
            return false;
        case Policy::kParallel:
            return true;
        case Policy::kAuto:
            return work_items >= 1u << 15;
    }
    return false;
}

}  // namespace

IndexedBallots index_ballots(const std::vector<MessageId>& vertices,
                             const std::vector<Ballot>& ballots) {
    std::map<MessageId, std::int32_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        index.emplace(vertices[i], static_cast<std::int32_t>(i));
    }

    IndexedBallots out;
    out.vertex_count = vertices.size();
    out.positions.reserve(ballots.size());
    for (const auto& ballot : ballots) {
        std::vector<std::int32_t> pos(vertices.size(), -1);
        std::int32_t rank = 0;
        for (const auto& id : ballot.order) {
            auto it = index.find(id);
            if (it == index.end()) {
                throw std::invalid_argument("ballot references message outside S");
            }
            if (pos[it->second] != -1) {
                throw std::invalid_argument("duplicate message in ballot");
            }
            pos[it->second] = rank++;
        }
        out.positions.push_back(std::move(pos));
    }
    return out;
}

namespace {

// Reference implementation: walk each ballot's ordered pairs.
std::vector<std::uint32_t> before_counts_serial(const IndexedBallots& b) {
    const std::size_t m = b.vertex_count;
    std::vector<std::uint32_t> before(m * m, 0);
    std::vector<std::int32_t> present;
    for (const auto& pos : b.positions) {
        present.clear();
        for (std::size_t v = 0; v < m; ++v) {
            if (pos[v] != -1) present.push_back(static_cast<std::int32_t>(v));
        }
        // present vertices sorted by their rank in this ballot
        std::sort(present.begin(), present.end(),
                  [&](std::int32_t a, std::int32_t c) { return pos[a] < pos[c]; });
        for (std::size_t i = 0; i < present.size(); ++i) {
            for (std::size_t j = i + 1; j < present.size(); ++j) {
                ++before[static_cast<std::size_t>(present[i]) * m +
                         static_cast<std::size_t>(present[j])];
            }
        }
    }
    return before;
}

// Parallel kernel: each (i, j) cell is computed independently, so the
// loop carries no shared writes.
std::vector<std::uint32_t> before_counts_parallel(const IndexedBallots& b) {
    const std::size_t m = b.vertex_count;
    std::vector<std::uint32_t> before(m * m, 0);
    const std::int64_t cells = static_cast<std::int64_t>(m) * static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        const std::size_t i = static_cast<std::size_t>(cell) / m;
        const std::size_t j = static_cast<std::size_t>(cell) % m;
        if (i == j) continue;
        std::uint32_t count = 0;
        for (const auto& pos : b.positions) {
            const std::int32_t pi = pos[i];
            const std::int32_t pj = pos[j];
            if (pi != -1 && pj != -1 && pi < pj) ++count;
        }
        before[cell] = count;
    }
    return before;
}

}  // namespace

std::vector<std::uint32_t> pairwise_before_counts(const IndexedBallots& ballots, Policy policy) {
    const std::size_t work = ballots.vertex_count * ballots.vertex_count * ballots.positions.size();
    if (run_parallel(policy, work)) return before_counts_parallel(ballots);
    return before_counts_serial(ballots);
}

std::vector<std::vector<Timestamp>> sorted_timestamp_columns(
    const std::vector<MessageId>& vertices, const std::vector<TimestampMap>& reports,
    std::uint32_t n, Policy policy) {
    if (reports.size() > n) throw std::invalid_argument("more reports than nodes");
    const std::size_t m = vertices.size();
    std::vector<std::vector<Timestamp>> columns(m, std::vector<Timestamp>(n, kNeverObserved));

    auto fill = [&](std::size_t i) {
        auto& col = columns[i];
        std::size_t slot = 0;
        for (const auto& report : reports) {
            auto it = report.times.find(vertices[i]);
            col[slot++] = it == report.times.end() ? kNeverObserved : it->second;
        }
        std::sort(col.begin(), col.end());
    };

    if (run_parallel(policy, m * n * 8)) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
            fill(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) fill(i);
    }
    return columns;
}

}  // namespace fairsim::ordering
