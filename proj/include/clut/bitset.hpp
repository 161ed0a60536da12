#pragma once

#include <cstdint>
#include <vector>

namespace clut {

// Dynamically sized bitset over a fixed universe [0, nbits).  All binary
// operations require both operands to share the same universe size.
//
// Canonical set order ("set-lex"): A < B iff the smallest element of the
// symmetric difference belongs to A.  Restricted to equal-size sets this is
// exactly lexicographic order on the sorted element sequences; it is the
// order used everywhere a tie-break or a canonical edge order is needed.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits);
    static Bitset full(int nbits);
    static Bitset of(int nbits, std::initializer_list<int> elems);

    int universe() const { return nbits_; }
    int nwords() const { return static_cast<int>(w_.size()); }
    const uint64_t* words() const { return w_.data(); }
    uint64_t* words() { return w_.data(); }
    uint64_t word(int i) const { return w_[i]; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear();

    int count() const;
    bool any() const;
    bool none() const { return !any(); }
    bool empty() const { return none(); }

    // True iff *this is a superset of `other`.
    bool contains(const Bitset& other) const;
    bool intersects(const Bitset& other) const;

    Bitset& operator|=(const Bitset& o);
    Bitset& operator&=(const Bitset& o);
    // Set difference: removes every element of `o`.
    Bitset& subtract(const Bitset& o);
    Bitset complement() const; // with respect to the universe

    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset minus(Bitset a, const Bitset& b) { a.subtract(b); return a; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Canonical set order described above.
    bool lex_less(const Bitset& o) const;

    int first() const;            // smallest element, -1 if empty
    int next(int after) const;    // smallest element > after, -1 if none

    std::vector<int> to_vector() const;
    static Bitset from_vector(int nbits, const std::vector<int>& elems);

    uint64_t hash() const;

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

constexpr int words_for(int nbits) { return (nbits + 63) >> 6; }

inline bool lex_less(const Bitset& a, const Bitset& b) { return a.lex_less(b); }

} // namespace clut
