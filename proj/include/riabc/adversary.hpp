#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riabc/protocol.hpp"

namespace riabc {

enum class StrategyKind { RandomRange, Equivocator, Forger, Replayer, Silent, Extreme };

std::string to_string(StrategyKind k);
StrategyKind strategy_kind_from_string(const std::string& s);

struct ByzantineStrategy {
  StrategyKind kind = StrategyKind::Silent;
  // RandomRange / Equivocator / Forger value range.
  double lo = 0.0;
  double hi = 0.0;
  // Extreme constant, expected outside the honest range.
  double value = 0.0;
};

// One Byzantine node. Behavior is a pure function of (run seed, iteration,
// recipient, observed history), so runs replay bit-identically.
//
//   RandomRange  one self-signed value per iteration, uniform in [lo,hi),
//                plus a fixed per-recipient offset in [-5,5)
//   Equivocator  independent self-signed value per (iteration, recipient)
//   Forger       entries claiming every honest origin, fabricated tags
//   Replayer     oldest observed honest entries, re-relayed verbatim
//   Silent       no message
//   Extreme      the configured constant, identical to all recipients
class ByzantineNode {
 public:
  ByzantineNode(int id, ByzantineStrategy strategy, KeyPair keys,
                std::vector<int> honest_ids, uint64_t run_seed);

  int id() const { return id_; }
  const ByzantineStrategy& strategy() const { return strategy_; }

  // Record traffic delivered to this node (its read access to the network).
  void observe(const std::vector<Delivery>& inbox);

  // Relay-mode message for one recipient at one iteration.
  Message outgoing(int iteration, uint64_t current_phase, int recipient) const;

  // Baseline-mode value for one recipient, or nothing (Silent). Forger and
  // Replayer have no signature-level analogue without signatures and fall
  // back to RandomRange behavior.
  std::optional<double> baseline_outgoing(int iteration, int recipient) const;

 private:
  double range_draw(int iteration, int recipient, bool per_recipient) const;

  int id_;
  ByzantineStrategy strategy_;
  KeyPair keys_;
  std::vector<int> honest_ids_;
  uint64_t seed_;
  // Oldest observed entry per honest origin, for replays.
  std::map<uint32_t, SignedEntry> oldest_seen_;
};

}  // namespace riabc
