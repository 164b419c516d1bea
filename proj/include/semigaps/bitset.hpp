// semigaps - gap-structure analytics for numerical semigroups
//
// Fixed-size bit table used as the membership table of a numerical
// semigroup. Only the operations the library needs are provided.

#ifndef SEMIGAPS_BITSET_HPP_
#define SEMIGAPS_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace semigaps {

  class Bitset {
   public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;

    explicit Bitset(std::size_t n, bool value = false)
        : _size(n), _words((n + word_bits - 1) / word_bits, value ? ~word_type(0) : 0) {
      trim();
    }

    std::size_t size() const noexcept {
      return _size;
    }

    bool test(std::size_t i) const noexcept {
      return (_words[i / word_bits] >> (i % word_bits)) & 1U;
    }

    void set(std::size_t i) noexcept {
      _words[i / word_bits] |= word_type(1) << (i % word_bits);
    }

    void reset(std::size_t i) noexcept {
      _words[i / word_bits] &= ~(word_type(1) << (i % word_bits));
    }

    void assign(std::size_t i, bool value) noexcept {
      value ? set(i) : reset(i);
    }

    std::size_t count() const noexcept {
      std::size_t n = 0;
      for (auto w : _words) {
        n += static_cast<std::size_t>(std::popcount(w));
      }
      return n;
    }

    // Number of bits set here but not in other; both tables must have the
    // same size.
    std::size_t count_and_not(Bitset const& other) const noexcept {
      std::size_t n = 0;
      for (std::size_t k = 0; k < _words.size(); ++k) {
        n += static_cast<std::size_t>(std::popcount(_words[k] & ~other._words[k]));
      }
      return n;
    }

    // True iff every bit set here is also set in other (same size).
    bool is_subset_of(Bitset const& other) const noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        if (_words[k] & ~other._words[k]) {
          return false;
        }
      }
      return true;
    }

    bool operator==(Bitset const&) const = default;

   private:
    void trim() noexcept {
      if (_size % word_bits != 0 && !_words.empty()) {
        _words.back() &= (word_type(1) << (_size % word_bits)) - 1;
      }
    }

    std::size_t            _size = 0;
    std::vector<word_type> _words;
  };

}  // namespace semigaps

#endif  // SEMIGAPS_BITSET_HPP_
