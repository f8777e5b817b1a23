#include "riabc/adversary.hpp"

#include <algorithm>
#include <stdexcept>

#include "riabc/rng.hpp"

namespace riabc {

namespace {
constexpr uint64_t kSaltBase = 0xb1a5e001;
constexpr uint64_t kSaltOffset = 0xb1a5e002;
constexpr uint64_t kSaltEquivocate = 0xb1a5e003;
constexpr uint64_t kSaltForgeValue = 0xb1a5e004;
constexpr uint64_t kSaltForgeTag = 0xb1a5e005;
}  // namespace

std::string to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::RandomRange: return "random_range";
    case StrategyKind::Equivocator: return "equivocator";
    case StrategyKind::Forger: return "forger";
    case StrategyKind::Replayer: return "replayer";
    case StrategyKind::Silent: return "silent";
    case StrategyKind::Extreme: return "extreme";
  }
  return "unknown";
}

StrategyKind strategy_kind_from_string(const std::string& s) {
  if (s == "random_range") return StrategyKind::RandomRange;
  if (s == "equivocator") return StrategyKind::Equivocator;
  if (s == "forger") return StrategyKind::Forger;
  if (s == "replayer") return StrategyKind::Replayer;
  if (s == "silent") return StrategyKind::Silent;
  if (s == "extreme") return StrategyKind::Extreme;
  throw std::invalid_argument("unknown adversary strategy: " + s);
}

ByzantineNode::ByzantineNode(int id, ByzantineStrategy strategy, KeyPair keys,
                             std::vector<int> honest_ids, uint64_t run_seed)
    : id_(id),
      strategy_(strategy),
      keys_(std::move(keys)),
      honest_ids_(std::move(honest_ids)),
      seed_(run_seed) {
  std::sort(honest_ids_.begin(), honest_ids_.end());
}

void ByzantineNode::observe(const std::vector<Delivery>& inbox) {
  if (strategy_.kind != StrategyKind::Replayer) return;
  for (const auto& d : inbox) {
    if (!d.message) continue;
    for (const auto& e : *d.message) {
      if (!std::binary_search(honest_ids_.begin(), honest_ids_.end(),
                              static_cast<int>(e.payload.origin)))
        continue;
      auto it = oldest_seen_.find(e.payload.origin);
      if (it == oldest_seen_.end() || e.payload.phase < it->second.payload.phase)
        oldest_seen_[e.payload.origin] = e;
    }
  }
}

double ByzantineNode::range_draw(int iteration, int recipient,
                                 bool per_recipient) const {
  uint64_t u;
  if (per_recipient) {
    u = derive_seed(seed_, kSaltEquivocate, static_cast<uint64_t>(id_),
                    static_cast<uint64_t>(iteration), static_cast<uint64_t>(recipient));
  } else {
    u = derive_seed(seed_, kSaltBase, static_cast<uint64_t>(id_),
                    static_cast<uint64_t>(iteration));
  }
  return strategy_.lo + to_unit_double(u) * (strategy_.hi - strategy_.lo);
}

Message ByzantineNode::outgoing(int iteration, uint64_t current_phase,
                                int recipient) const {
  auto msg = std::make_shared<std::vector<SignedEntry>>();
  switch (strategy_.kind) {
    case StrategyKind::Silent:
      break;
    case StrategyKind::RandomRange: {
      const uint64_t off = derive_seed(seed_, kSaltOffset,
                                       static_cast<uint64_t>(id_),
                                       static_cast<uint64_t>(recipient));
      const double value =
          range_draw(iteration, recipient, false) + (to_unit_double(off) - 0.5) * 10.0;
      Payload p{static_cast<uint32_t>(id_), current_phase, value};
      msg->push_back(SignedEntry{p, sign(keys_, p)});
      break;
    }
    case StrategyKind::Equivocator: {
      Payload p{static_cast<uint32_t>(id_), current_phase,
                range_draw(iteration, recipient, true)};
      msg->push_back(SignedEntry{p, sign(keys_, p)});
      break;
    }
    case StrategyKind::Extreme: {
      Payload p{static_cast<uint32_t>(id_), current_phase, strategy_.value};
      msg->push_back(SignedEntry{p, sign(keys_, p)});
      break;
    }
    case StrategyKind::Forger: {
      for (int origin : honest_ids_) {
        uint64_t vs = derive_seed(seed_, kSaltForgeValue, static_cast<uint64_t>(id_),
                                  static_cast<uint64_t>(iteration),
                                  static_cast<uint64_t>(recipient),
                                  static_cast<uint64_t>(origin));
        Payload p{static_cast<uint32_t>(origin), current_phase,
                  strategy_.lo + to_unit_double(vs) * (strategy_.hi - strategy_.lo)};
        AuthTag tag{};
        uint64_t ts = derive_seed(seed_, kSaltForgeTag, static_cast<uint64_t>(id_),
                                  static_cast<uint64_t>(iteration),
                                  static_cast<uint64_t>(recipient),
                                  static_cast<uint64_t>(origin));
        for (int w = 0; w < 4; ++w) {
          uint64_t word = splitmix64(ts);
          for (int b = 0; b < 8; ++b)
            tag[8 * w + b] = static_cast<uint8_t>(word >> (8 * b));
        }
        msg->push_back(SignedEntry{p, tag});
      }
      break;
    }
    case StrategyKind::Replayer: {
      for (const auto& [origin, entry] : oldest_seen_) {
        if (entry.payload.phase < current_phase) msg->push_back(entry);
      }
      break;
    }
  }
  return msg;
}

std::optional<double> ByzantineNode::baseline_outgoing(int iteration,
                                                       int recipient) const {
  switch (strategy_.kind) {
    case StrategyKind::Silent:
      return std::nullopt;
    case StrategyKind::Extreme:
      return strategy_.value;
    case StrategyKind::Equivocator:
      return range_draw(iteration, recipient, true);
    case StrategyKind::RandomRange:
    case StrategyKind::Forger:
    case StrategyKind::Replayer: {
      const uint64_t off = derive_seed(seed_, kSaltOffset,
                                       static_cast<uint64_t>(id_),
                                       static_cast<uint64_t>(recipient));
      return range_draw(iteration, recipient, false) +
             (to_unit_double(off) - 0.5) * 10.0;
    }
  }
  return std::nullopt;
}

}  // namespace riabc
