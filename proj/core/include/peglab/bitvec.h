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

#ifndef PEGLAB_BITVEC_H_
#define PEGLAB_BITVEC_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace peglab {

/// Fixed-length bit string.
///
/// Bit 0 is the leftmost bit. `from_uint(v, n)` places the most significant of the
/// n low bits of v at position 0, so enumerating v = 0..2^n-1 walks the strings in
/// lexicographic order. Ordering is lexicographic over bits, with a proper prefix
/// sorting before its extensions.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n);

  static BitVec from_uint(uint64_t value, size_t n);
  static BitVec from_string(std::string_view bits);
  static BitVec zeros(size_t n) { return BitVec(n); }
  static BitVec unit(size_t n, size_t j);

  size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool get(size_t j) const;
  void set(size_t j, bool value);
  void flip(size_t j);

  uint64_t to_uint() const;
  std::string to_string() const;
  size_t popcount() const;

  BitVec operator^(const BitVec& other) const;
  BitVec& operator^=(const BitVec& other);
  BitVec concat(const BitVec& other) const;
  BitVec slice(size_t begin, size_t len) const;
  BitVec prefix(size_t len) const { return slice(0, len); }

  /// Parity of the bitwise AND. Lengths must match.
  bool dot(const BitVec& other) const;

  /// Length-prefixed concatenation of fields (16-bit big-endian length per field).
  static BitVec tuple(std::initializer_list<BitVec> fields);
  static BitVec tuple(const std::vector<BitVec>& fields);
  static std::vector<BitVec> untuple(const BitVec& packed);

  /// Bytes: u32 little-endian length, then bits packed little-endian within bytes.
  std::vector<uint8_t> to_bytes() const;
  static BitVec from_bytes(const std::vector<uint8_t>& bytes);
  std::string to_hex() const;
  static BitVec from_hex(std::string_view hex);

  const std::vector<uint64_t>& words() const { return words_; }
  size_t hash() const;

  bool operator==(const BitVec& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }
  std::strong_ordering operator<=>(const BitVec& other) const;

 private:
  void check_index(size_t j) const;

  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

struct BitVecHash {
  size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace peglab

#endif  // PEGLAB_BITVEC_H_
