#pragma once

#include <ostream>
#include <string>

#include "toroidal/checked.hpp"

namespace toroidal {

// Exact rational p/q, always reduced with q >= 1.  Torsion points are kept
// as fractions in lattice coordinates so every membership check stays exact.
class Frac {
public:
    Frac() : num_(0), den_(1) {}
    Frac(Int num, Int den);
    static Frac of(Int n) { return {n, 1}; }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Frac operator+(const Frac& x, const Frac& y);
    friend Frac operator*(Int k, const Frac& x);
    Frac operator-() const { return {checked::neg(num_), den_}; }

    // Representative in [0, 1) of the class mod 1.
    Frac mod1() const;

    friend bool operator==(const Frac& x, const Frac& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Frac& x, const Frac& y) { return !(x == y); }
    friend bool operator<(const Frac& x, const Frac& y);

    friend std::ostream& operator<<(std::ostream& os, const Frac& x);

private:
    Int num_;
    Int den_;
};

std::string render(const Frac& x);   // always "p/q", e.g. "0/1", "2/3"

} // namespace toroidal
