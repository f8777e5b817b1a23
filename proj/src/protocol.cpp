#include "riabc/protocol.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace riabc {

double trimmed_mean(std::vector<double> values, int b) {
  const int m = static_cast<int>(values.size());
  if (b < 0) throw std::invalid_argument("trim parameter must be non-negative");
  if (m <= 2 * b)
    throw std::invalid_argument("trimmed mean needs more than 2b values");
  std::sort(values.begin(), values.end());
  double sum = std::accumulate(values.begin() + b, values.end() - b, 0.0);
  return sum / static_cast<double>(m - 2 * b);
}

RelayNode::RelayNode(int id, int node_count, int trim_b, double default_value,
                     double initial_value, KeyPair keys)
    : keys_(std::move(keys)), trim_b_(trim_b), default_value_(default_value) {
  state_.owner = id;
  state_.phase = 0;
  state_.entries.resize(node_count);
  Payload own{static_cast<uint32_t>(id), 0, initial_value};
  state_.entries[id] = SignedEntry{own, sign(keys_, own)};
}

Message RelayNode::outgoing() const {
  auto msg = std::make_shared<std::vector<SignedEntry>>();
  msg->reserve(state_.entries.size());
  for (const auto& e : state_.entries)
    if (e) msg->push_back(*e);
  return msg;
}

void RelayNode::ingest(const std::vector<Delivery>& inbox,
                       const CachingVerifier& verifier, IngestStats& stats) {
  const int m = static_cast<int>(state_.entries.size());
  for (const auto& delivery : inbox) {
    if (!delivery.message) continue;
    for (const auto& entry : *delivery.message) {
      const auto origin = entry.payload.origin;
      if (origin >= static_cast<uint32_t>(m)) {
        ++stats.sig_rejections;  // unknown origin, cannot verify
        continue;
      }
      if (static_cast<int>(origin) == state_.owner) continue;
      auto& stored = state_.entries[origin];
      if (stored && stored->same_bits(entry)) {
        ++stats.duplicate_skips;  // already verified when first stored
        continue;
      }
      if (!verifier.verify(entry.payload, entry.tag)) {
        ++stats.sig_rejections;
        continue;
      }
      if (entry.payload.phase > state_.phase) {
        // Cannot legitimately exist under synchronous rounds.
        ++stats.future_drops;
        continue;
      }
      if (stored) {
        if (entry.payload.phase > stored->payload.phase) {
          stored = entry;
          ++stats.accepted;
        } else if (entry.payload.phase < stored->payload.phase) {
          ++stats.stale_drops;
        } else {
          ++stats.tie_drops;
        }
      } else {
        if (entry.payload.phase < state_.phase) ++stats.stale_stores;
        stored = entry;
        ++stats.accepted;
      }
    }
  }
}

void RelayNode::phase_update(TrimRecord* record) {
  const int m = static_cast<int>(state_.entries.size());
  if (m <= 2 * trim_b_)
    throw std::invalid_argument("trimmed mean needs more than 2b values");

  std::vector<double> values(m);
  std::vector<uint8_t> present(m, 0);
  for (int o = 0; o < m; ++o) {
    if (state_.entries[o]) {
      values[o] = state_.entries[o]->payload.value;
      present[o] = 1;
    } else {
      values[o] = default_value_;
    }
  }

  // Sort origins by (value, id); the id tie-break pins the retained set.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (values[a] != values[b]) return values[a] < values[b];
    return a < b;
  });

  std::vector<uint8_t> retained(m, 0);
  double sum = 0.0;
  for (int k = trim_b_; k < m - trim_b_; ++k) {
    retained[order[k]] = 1;
    sum += values[order[k]];
  }
  const double next = sum / static_cast<double>(m - 2 * trim_b_);

  if (record) {
    record->values = values;
    record->present = present;
    record->retained = retained;
    record->result = next;
  }

  ++state_.phase;
  Payload own{static_cast<uint32_t>(state_.owner), state_.phase, next};
  for (int o = 0; o < m; ++o)
    if (o != state_.owner) state_.entries[o].reset();
  state_.entries[state_.owner] = SignedEntry{own, sign(keys_, own)};
}

void BaselineNode::step(const std::vector<double>& received) {
  std::vector<double> values;
  values.reserve(received.size() + 1);
  values.push_back(value_);
  values.insert(values.end(), received.begin(), received.end());
  if (static_cast<int>(values.size()) > 2 * trim_b_) {
    value_ = trimmed_mean(std::move(values), trim_b_);
  }
  // Otherwise too few values; keep the current state.
}

}  // namespace riabc
