#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oddramsey/error.hpp"

namespace oddramsey {

using Colour = int;

/// Per-colour parity of an edge multiset, one bit per colour (bit c-1 for
/// colour c), packed into 64-bit words. Addition is XOR.
class ParityVector {
 public:
  ParityVector() = default;
  explicit ParityVector(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(Colour c) const {
    check(c);
    return (words_[(c - 1) / 64] >> ((c - 1) % 64)) & 1u;
  }

  void flip(Colour c) {
    check(c);
    words_[(c - 1) / 64] ^= std::uint64_t{1} << ((c - 1) % 64);
  }

  void set(Colour c, bool value) {
    if (test(c) != value) flip(c);
  }

  ParityVector& operator^=(const ParityVector& other) {
    if (other.size_ != size_) throw ParameterError("parity vectors differ in length");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  friend ParityVector operator^(ParityVector a, const ParityVector& b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const ParityVector&, const ParityVector&) = default;

  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  int count() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  /// Colours whose bit is set, ascending.
  std::vector<Colour> set_colours() const {
    std::vector<Colour> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        int bit = std::countr_zero(w);
        out.push_back(static_cast<Colour>(i * 64 + bit + 1));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Lowest set colour, or 0 when the vector is zero.
  Colour lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<Colour>(i * 64 + std::countr_zero(words_[i]) + 1);
    return 0;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(size_), '0');
    for (Colour c = 1; c <= size_; ++c)
      if (test(c)) s[c - 1] = '1';
    return s;
  }

 private:
  void check(Colour c) const {
    if (c < 1 || c > size_)
      throw ParameterError("colour " + std::to_string(c) + " outside palette of size " +
                           std::to_string(size_));
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace oddramsey
