#include "clut/bitset.hpp"

#include <bit>
#include <cassert>

#include "clut/errors.hpp"

namespace clut {

Bitset::Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {
    if (nbits < 0) throw InputError("bitset universe size must be non-negative");
}

Bitset Bitset::full(int nbits) {
    Bitset b(nbits);
    for (auto& w : b.w_) w = ~uint64_t(0);
    if (nbits & 63) b.w_.back() = (uint64_t(1) << (nbits & 63)) - 1;
    return b;
}

Bitset Bitset::of(int nbits, std::initializer_list<int> elems) {
    Bitset b(nbits);
    for (int e : elems) {
        assert(e >= 0 && e < nbits);
        b.set(e);
    }
    return b;
}

void Bitset::clear() {
    for (auto& w : w_) w = 0;
}

int Bitset::count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool Bitset::any() const {
    for (uint64_t w : w_)
        if (w) return true;
    return false;
}

bool Bitset::contains(const Bitset& other) const {
    assert(nbits_ == other.nbits_);
    for (size_t i = 0; i < w_.size(); ++i)
        if (other.w_[i] & ~w_[i]) return false;
    return true;
}

bool Bitset::intersects(const Bitset& other) const {
    assert(nbits_ == other.nbits_);
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & other.w_[i]) return true;
    return false;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

Bitset Bitset::complement() const {
    Bitset r = full(nbits_);
    r.subtract(*this);
    return r;
}

bool Bitset::lex_less(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t d = w_[i] ^ o.w_[i];
        if (d) {
            uint64_t low = d & (~d + 1);
            return (w_[i] & low) != 0;
        }
    }
    return false;
}

int Bitset::first() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

int Bitset::next(int after) const {
    int start = after + 1;
    if (start >= nbits_) return -1;
    size_t wi = static_cast<size_t>(start) >> 6;
    uint64_t w = w_[wi] & (~uint64_t(0) << (start & 63));
    while (true) {
        if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
        if (++wi >= w_.size()) return -1;
        w = w_[wi];
    }
}

std::vector<int> Bitset::to_vector() const {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(count()));
    for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
    return v;
}

Bitset Bitset::from_vector(int nbits, const std::vector<int>& elems) {
    Bitset b(nbits);
    for (int e : elems) {
        if (e < 0 || e >= nbits)
            throw InputError("element " + std::to_string(e) + " outside universe of size " +
                             std::to_string(nbits));
        b.set(e);
    }
    return b;
}

uint64_t Bitset::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(nbits_);
    for (uint64_t w : w_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace clut
