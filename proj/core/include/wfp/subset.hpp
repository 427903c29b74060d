#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace wfp {

/// A subset of the ground set [n] = {1,...,n}, n <= 64, stored as a bit mask.
/// Position p is represented by bit (p-1). All positional interfaces are
/// 1-indexed; the raw mask is exposed for enumeration loops.
class Subset {
public:
    static constexpr int max_ground_size = 64;

    explicit Subset(int ground_size) : bits_(0), n_(check_ground(ground_size)) {}

    static Subset from_bits(std::uint64_t bits, int ground_size) {
        Subset s(ground_size);
        if (bits & ~mask_for(ground_size))
            throw std::invalid_argument("Subset: bit outside ground set");
        s.bits_ = bits;
        return s;
    }

    static Subset of(std::initializer_list<int> positions, int ground_size) {
        Subset s(ground_size);
        for (int p : positions) s = s.with(p);
        return s;
    }

    static Subset empty(int ground_size) { return Subset(ground_size); }
    static Subset full(int ground_size) {
        return from_bits(mask_for(ground_size), ground_size);
    }

    int ground_size() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == mask_for(n_); }

    bool contains(int pos) const {
        check_pos(pos);
        return (bits_ >> (pos - 1)) & 1u;
    }
    Subset with(int pos) const {
        check_pos(pos);
        return unchecked(bits_ | (std::uint64_t{1} << (pos - 1)), n_);
    }
    Subset without(int pos) const {
        check_pos(pos);
        return unchecked(bits_ & ~(std::uint64_t{1} << (pos - 1)), n_);
    }

    bool subset_of(const Subset& o) const {
        check_same(o);
        return (bits_ & ~o.bits_) == 0;
    }
    bool comparable_with(const Subset& o) const {
        return subset_of(o) || o.subset_of(*this);
    }
    /// True when the union of the two sets is all of [n].
    bool covers_with(const Subset& o) const {
        check_same(o);
        return (bits_ | o.bits_) == mask_for(n_);
    }

    Subset operator|(const Subset& o) const { check_same(o); return unchecked(bits_ | o.bits_, n_); }
    Subset operator&(const Subset& o) const { check_same(o); return unchecked(bits_ & o.bits_, n_); }
    Subset operator-(const Subset& o) const { check_same(o); return unchecked(bits_ & ~o.bits_, n_); }
    Subset complement() const { return unchecked(~bits_ & mask_for(n_), n_); }

    bool operator==(const Subset& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Subset& o) const { return !(*this == o); }
    /// Canonical order: ascending integer value of the bit encoding.
    bool operator<(const Subset& o) const {
        check_same(o);
        return bits_ < o.bits_;
    }

    /// "{1,3}" with 1-indexed positions; the empty set renders as "∅".
    std::string to_string() const {
        if (bits_ == 0) return "∅";
        std::string out = "{";
        bool first = true;
        for (int p = 1; p <= n_; ++p) {
            if (!contains(p)) continue;
            if (!first) out += ',';
            out += std::to_string(p);
            first = false;
        }
        out += '}';
        return out;
    }

    static std::uint64_t mask_for(int n) {
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

private:
    static Subset unchecked(std::uint64_t bits, int n) {
        Subset s(n);
        s.bits_ = bits;
        return s;
    }
    static int check_ground(int n) {
        if (n < 1 || n > max_ground_size)
            throw std::invalid_argument("Subset: ground size must be in 1..64");
        return n;
    }
    void check_pos(int pos) const {
        if (pos < 1 || pos > n_)
            throw std::out_of_range("Subset: position out of range");
    }
    void check_same(const Subset& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("Subset: mismatched ground sets");
    }

    std::uint64_t bits_;
    int n_;
};

}  // namespace wfp
