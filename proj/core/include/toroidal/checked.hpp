#pragma once

#include <cstdint>
#include <stdexcept>

namespace toroidal {

using Int = std::int64_t;

// All integer arithmetic in the library goes through these helpers.
// The quantities in the classification are tiny, so an overflow is a
// bug signal and must surface as an error, never wrap.
namespace checked {

inline Int add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline Int sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}

inline Int mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

inline Int neg(Int x) {
    Int r;
    if (__builtin_sub_overflow(Int{0}, x, &r)) throw std::overflow_error("integer overflow in neg");
    return r;
}

} // namespace checked
} // namespace toroidal
