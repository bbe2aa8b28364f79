// Copyright 2026 The peglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "peglab/bitvec.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace peglab {

namespace {

constexpr size_t kWordBits = 64;

size_t num_words(size_t n) { return (n + kWordBits - 1) / kWordBits; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitVec::BitVec(size_t n) : size_(n), words_(num_words(n), 0) {}

BitVec BitVec::from_uint(uint64_t value, size_t n) {
  if (n > 64) {
    throw std::invalid_argument("BitVec::from_uint supports at most 64 bits");
  }
  BitVec out(n);
  for (size_t j = 0; j < n; j++) {
    if ((value >> (n - 1 - j)) & 1) out.set(j, true);
  }
  return out;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec out(bits.size());
  for (size_t j = 0; j < bits.size(); j++) {
    if (bits[j] == '1') {
      out.set(j, true);
    } else if (bits[j] != '0') {
      throw std::invalid_argument("BitVec::from_string expects only '0' and '1'");
    }
  }
  return out;
}

BitVec BitVec::unit(size_t n, size_t j) {
  BitVec out(n);
  out.set(j, true);
  return out;
}

void BitVec::check_index(size_t j) const {
  if (j >= size_) throw std::out_of_range("BitVec index out of range");
}

bool BitVec::get(size_t j) const {
  check_index(j);
  return (words_[j / kWordBits] >> (j % kWordBits)) & 1;
}

void BitVec::set(size_t j, bool value) {
  check_index(j);
  uint64_t mask = uint64_t{1} << (j % kWordBits);
  if (value) {
    words_[j / kWordBits] |= mask;
  } else {
    words_[j / kWordBits] &= ~mask;
  }
}

void BitVec::flip(size_t j) {
  check_index(j);
  words_[j / kWordBits] ^= uint64_t{1} << (j % kWordBits);
}

uint64_t BitVec::to_uint() const {
  if (size_ > 64) throw std::invalid_argument("BitVec::to_uint supports at most 64 bits");
  uint64_t v = 0;
  for (size_t j = 0; j < size_; j++) {
    v = (v << 1) | (get(j) ? 1 : 0);
  }
  return v;
}

std::string BitVec::to_string() const {
  std::string out(size_, '0');
  for (size_t j = 0; j < size_; j++) {
    if (get(j)) out[j] = '1';
  }
  return out;
}

size_t BitVec::popcount() const {
  size_t total = 0;
  for (uint64_t w : words_) total += static_cast<size_t>(std::popcount(w));
  return total;
}

BitVec BitVec::operator^(const BitVec& other) const {
  BitVec out = *this;
  out ^= other;
  return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (size_ != other.size_) throw std::invalid_argument("BitVec xor length mismatch");
  for (size_t w = 0; w < words_.size(); w++) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVec::dot(const BitVec& other) const {
  if (size_ != other.size_) throw std::invalid_argument("BitVec dot length mismatch");
  uint64_t acc = 0;
  for (size_t w = 0; w < words_.size(); w++) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

BitVec BitVec::concat(const BitVec& other) const {
  BitVec out(size_ + other.size_);
  for (size_t w = 0; w < words_.size(); w++) out.words_[w] = words_[w];
  if (size_ % kWordBits == 0) {
    for (size_t w = 0; w < other.words_.size(); w++) {
      out.words_[size_ / kWordBits + w] = other.words_[w];
    }
  } else {
    for (size_t j = 0; j < other.size_; j++) {
      if (other.get(j)) out.set(size_ + j, true);
    }
  }
  return out;
}

BitVec BitVec::slice(size_t begin, size_t len) const {
  if (begin + len > size_) throw std::out_of_range("BitVec slice out of range");
  BitVec out(len);
  if (begin % kWordBits == 0) {
    for (size_t w = 0; w < out.words_.size(); w++) out.words_[w] = words_[begin / kWordBits + w];
    if (len % kWordBits != 0) {
      out.words_.back() &= (uint64_t{1} << (len % kWordBits)) - 1;
    }
  } else {
    for (size_t j = 0; j < len; j++) {
      if (get(begin + j)) out.set(j, true);
    }
  }
  return out;
}

BitVec BitVec::tuple(std::initializer_list<BitVec> fields) {
  return tuple(std::vector<BitVec>(fields));
}

BitVec BitVec::tuple(const std::vector<BitVec>& fields) {
  size_t total = 0;
  for (const auto& f : fields) {
    if (f.size() > 0xFFFF) throw std::invalid_argument("tuple field longer than 65535 bits");
    total += 16 + f.size();
  }
  BitVec out(total);
  size_t pos = 0;
  for (const auto& f : fields) {
    for (size_t b = 0; b < 16; b++) {
      if ((f.size() >> (15 - b)) & 1) out.set(pos + b, true);
    }
    pos += 16;
    for (size_t j = 0; j < f.size(); j++) {
      if (f.get(j)) out.set(pos + j, true);
    }
    pos += f.size();
  }
  return out;
}

std::vector<BitVec> BitVec::untuple(const BitVec& packed) {
  std::vector<BitVec> fields;
  size_t pos = 0;
  while (pos < packed.size()) {
    if (pos + 16 > packed.size()) throw std::invalid_argument("truncated tuple header");
    size_t len = 0;
    for (size_t b = 0; b < 16; b++) len = (len << 1) | (packed.get(pos + b) ? 1 : 0);
    pos += 16;
    if (pos + len > packed.size()) throw std::invalid_argument("truncated tuple field");
    fields.push_back(packed.slice(pos, len));
    pos += len;
  }
  return fields;
}

std::vector<uint8_t> BitVec::to_bytes() const {
  std::vector<uint8_t> out(4 + (size_ + 7) / 8, 0);
  uint32_t n = static_cast<uint32_t>(size_);
  for (size_t b = 0; b < 4; b++) out[b] = static_cast<uint8_t>((n >> (8 * b)) & 0xFF);
  for (size_t j = 0; j < size_; j++) {
    if (get(j)) out[4 + j / 8] |= static_cast<uint8_t>(1u << (j % 8));
  }
  return out;
}

BitVec BitVec::from_bytes(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 4) throw std::invalid_argument("BitVec bytes missing length header");
  size_t n = 0;
  for (size_t b = 0; b < 4; b++) n |= static_cast<size_t>(bytes[b]) << (8 * b);
  if (bytes.size() != 4 + (n + 7) / 8) throw std::invalid_argument("BitVec bytes length mismatch");
  BitVec out(n);
  for (size_t j = 0; j < n; j++) {
    if ((bytes[4 + j / 8] >> (j % 8)) & 1) out.set(j, true);
  }
  for (size_t j = n; j < 8 * ((n + 7) / 8); j++) {
    if ((bytes[4 + j / 8] >> (j % 8)) & 1) throw std::invalid_argument("BitVec padding bits set");
  }
  return out;
}

std::string BitVec::to_hex() const {
  static const char* kDigits = "0123456789abcdef";
  std::string out;
  for (uint8_t b : to_bytes()) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

BitVec BitVec::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
  std::vector<uint8_t> bytes;
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_value(hex[i]);
    int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
    bytes.push_back(static_cast<uint8_t>(hi * 16 + lo));
  }
  return from_bytes(bytes);
}

size_t BitVec::hash() const {
  uint64_t h = 0xcbf29ce484222325ULL ^ size_;
  for (uint64_t w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<size_t>(h);
}

std::strong_ordering BitVec::operator<=>(const BitVec& other) const {
  size_t common = std::min(words_.size(), other.words_.size());
  for (size_t w = 0; w < common; w++) {
    uint64_t a = words_[w];
    uint64_t b = other.words_[w];
    if (a != b) {
      // Bits past either length are zero; a first difference past the shorter length
      // means the shorter string is a prefix.
      uint64_t diff = a ^ b;
      size_t bit = static_cast<size_t>(std::countr_zero(diff));
      size_t pos = w * kWordBits + bit;
      if (pos < size_ && pos < other.size_) {
        return ((a >> bit) & 1) ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      break;
    }
  }
  return size_ <=> other.size_;
}

}  // namespace peglab
