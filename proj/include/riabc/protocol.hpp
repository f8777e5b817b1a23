#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "riabc/signatures.hpp"

namespace riabc {

struct SignedEntry {
  Payload payload;
  AuthTag tag{};

  bool same_bits(const SignedEntry& other) const {
    return payload.same_bits(other.payload) && tag == other.tag;
  }
};

// One broadcast. Immutable and shared across recipients: honest nodes never
// equivocate, every out-neighbor sees the same bytes.
using Message = std::shared_ptr<const std::vector<SignedEntry>>;

struct Delivery {
  int sender = -1;
  Message message;
};

struct IngestStats {
  uint64_t sig_rejections = 0;   // failed verification, discarded
  uint64_t future_drops = 0;     // phase tag ahead of the receiver's phase
  uint64_t stale_drops = 0;      // lost to a stored entry with a higher phase
  uint64_t tie_drops = 0;        // equal phase, stored entry wins the scan order
  uint64_t duplicate_skips = 0;  // byte-identical to the stored entry
  uint64_t accepted = 0;
  uint64_t stale_stores = 0;     // stored into an empty slot below current phase
};

// An honest node's record of the latest known signed entry per origin.
struct StateVector {
  int owner = 0;
  uint64_t phase = 0;
  std::vector<std::optional<SignedEntry>> entries;  // indexed by origin
};

// Sort ascending, drop the lowest b and highest b, mean the rest.
double trimmed_mean(std::vector<double> values, int b);

// Inputs of one trimmed-mean update, recorded for transition-matrix
// extraction: the full per-origin value list, which origins were backed by a
// stored entry (vs. the default), and which survived the trim.
struct TrimRecord {
  std::vector<double> values;
  std::vector<uint8_t> present;
  std::vector<uint8_t> retained;
  double result = 0.0;
};

class RelayNode {
 public:
  RelayNode(int id, int node_count, int trim_b, double default_value,
            double initial_value, KeyPair keys);

  int id() const { return state_.owner; }
  uint64_t phase() const { return state_.phase; }
  double value() const { return state_.entries[state_.owner]->payload.value; }
  const StateVector& state() const { return state_; }

  // Copy of all present entries, identical for every recipient.
  Message outgoing() const;

  // Applies one iteration's inbox. For each origin, keeps the candidate with
  // the highest phase tag among the stored entry and the received entries
  // that verify; ties go to the earliest candidate in the scan (stored entry
  // first, then deliveries in inbox order). Future phase tags are dropped.
  // Malformed input is data, not failure.
  void ingest(const std::vector<Delivery>& inbox, const CachingVerifier& verifier,
              IngestStats& stats);

  // Phase-boundary update: value list over all origins (default_value where
  // no entry is stored), trimmed mean, advance phase, re-sign own entry,
  // clear foreign entries.
  void phase_update(TrimRecord* record = nullptr);

 private:
  StateVector state_;
  KeyPair keys_;
  int trim_b_;
  double default_value_;
};

// Single-hop trimmed-mean node used for the non-relay comparison runs.
class BaselineNode {
 public:
  BaselineNode(int id, int trim_b, double initial_value)
      : id_(id), trim_b_(trim_b), value_(initial_value) {}

  int id() const { return id_; }
  double value() const { return value_; }

  // Multiset {own value} + received values; when its size exceeds 2b, trim b
  // from each end and average the rest, otherwise keep the current value
  // (under-connected nodes stall rather than crash).
  void step(const std::vector<double>& received);

 private:
  int id_;
  int trim_b_;
  double value_;
};

}  // namespace riabc
