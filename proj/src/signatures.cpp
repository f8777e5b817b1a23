#include "riabc/signatures.hpp"

#include <openssl/hmac.h>
#include <openssl/sha.h>

#include <bit>
#include <cstring>

#include "riabc/rng.hpp"

namespace riabc {

namespace {

void put_u32_be(uint8_t* out, uint32_t v) {
  out[0] = static_cast<uint8_t>(v >> 24);
  out[1] = static_cast<uint8_t>(v >> 16);
  out[2] = static_cast<uint8_t>(v >> 8);
  out[3] = static_cast<uint8_t>(v);
}

void put_u64_be(uint8_t* out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<uint8_t>(v >> (56 - 8 * i));
}

}  // namespace

std::array<uint8_t, 20> Payload::encode() const {
  std::array<uint8_t, 20> out{};
  put_u32_be(out.data(), origin);
  put_u64_be(out.data() + 4, phase);
  put_u64_be(out.data() + 12, std::bit_cast<uint64_t>(value));
  return out;
}

bool Payload::same_bits(const Payload& other) const {
  return origin == other.origin && phase == other.phase &&
         std::bit_cast<uint64_t>(value) == std::bit_cast<uint64_t>(other.value);
}

KeyPair keygen(uint64_t master_seed, uint32_t node_id) {
  KeyPair kp;
  kp.node_id = node_id;
  uint64_t stream = derive_seed(master_seed, 0x6b657973ULL /* "keys" */, node_id);
  for (int i = 0; i < 4; ++i) {
    put_u64_be(kp.secret.data() + 8 * i, splitmix64(stream));
  }
  // Verification key: one-way fingerprint of the secret. Reveals nothing a
  // verifier-side adversary can use to produce tags.
  std::array<uint8_t, 36> buf{};
  std::memcpy(buf.data(), kp.secret.data(), 32);
  put_u32_be(buf.data() + 32, node_id);
  SHA256(buf.data(), buf.size(), kp.verification_key.data());
  return kp;
}

AuthTag sign(const KeyPair& kp, const Payload& p) {
  AuthTag tag{};
  const auto msg = p.encode();
  unsigned int len = 0;
  HMAC(EVP_sha256(), kp.secret.data(), static_cast<int>(kp.secret.size()),
       msg.data(), msg.size(), tag.data(), &len);
  return tag;
}

void KeyDirectory::add(const KeyPair& kp) {
  by_id_[kp.node_id] = kp;
  by_vk_[kp.verification_key] = kp.node_id;
}

const VerificationKey& KeyDirectory::verification_key(uint32_t node_id) const {
  return by_id_.at(node_id).verification_key;
}

bool KeyDirectory::verify(const VerificationKey& vk, const Payload& p,
                          const AuthTag& tag) const {
  auto it = by_vk_.find(vk);
  if (it == by_vk_.end()) return false;
  return sign(by_id_.at(it->second), p) == tag;
}

bool KeyDirectory::verify_origin(const Payload& p, const AuthTag& tag) const {
  auto it = by_id_.find(p.origin);
  if (it == by_id_.end()) return false;
  return sign(it->second, p) == tag;
}

bool CachingVerifier::verify(const Payload& p, const AuthTag& tag) const {
  std::string key;
  key.resize(52);
  const auto enc = p.encode();
  std::memcpy(key.data(), enc.data(), 20);
  std::memcpy(key.data() + 20, tag.data(), 32);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  bool ok = dir_->verify_origin(p, tag);
  cache_.emplace(std::move(key), ok);
  return ok;
}

}  // namespace riabc
