#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>

namespace riabc {

using SecretKey = std::array<uint8_t, 32>;
using VerificationKey = std::array<uint8_t, 32>;
using AuthTag = std::array<uint8_t, 32>;

// Signed content: one origin's value at one phase.
//
// The 20-byte canonical encoding is normative:
//   origin  u32 big-endian
//   phase   u64 big-endian
//   value   IEEE-754 bits, big-endian
struct Payload {
  uint32_t origin = 0;
  uint64_t phase = 0;
  double value = 0.0;

  std::array<uint8_t, 20> encode() const;

  // Bit-level equality on value, so -0.0 != +0.0 and tags bind exactly.
  bool same_bits(const Payload& other) const;
};

struct KeyPair {
  uint32_t node_id = 0;
  SecretKey secret{};
  VerificationKey verification_key{};
};

// Deterministic per (master_seed, node_id); distinct inputs give distinct keys.
KeyPair keygen(uint64_t master_seed, uint32_t node_id);

// Keyed hash over the canonical payload encoding.
AuthTag sign(const KeyPair& kp, const Payload& p);

// Published registry of verification keys, and the trusted verifier.
//
// The scheme is a keyed hash with per-node secrets. A verification key is a
// one-way fingerprint of the signer secret; verification recomputes the tag
// with the secret registered under that fingerprint. Adversary code only
// ever handles VerificationKey values and observed tags, never secrets.
class KeyDirectory {
 public:
  void add(const KeyPair& kp);

  const VerificationKey& verification_key(uint32_t node_id) const;

  // True iff tag was produced by the signer registered under vk over exactly
  // p. Unknown keys yield false, never an error.
  bool verify(const VerificationKey& vk, const Payload& p, const AuthTag& tag) const;

  // Verify against the registered key of p.origin.
  bool verify_origin(const Payload& p, const AuthTag& tag) const;

 private:
  std::unordered_map<uint32_t, KeyPair> by_id_;
  std::map<VerificationKey, uint32_t> by_vk_;
};

// Memoizes verify_origin by exact (payload, tag) bytes. One instance per
// simulation run; the cache is not synchronized across threads.
class CachingVerifier {
 public:
  explicit CachingVerifier(const KeyDirectory& dir) : dir_(&dir) {}

  bool verify(const Payload& p, const AuthTag& tag) const;

 private:
  const KeyDirectory* dir_;
  mutable std::unordered_map<std::string, bool> cache_;
};

}  // namespace riabc
