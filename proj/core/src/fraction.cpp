#include "toroidal/fraction.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toroidal {

Frac::Frac(Int num, Int den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("fraction with zero denominator");
    if (den_ < 0) {
        num_ = checked::neg(num_);
        den_ = checked::neg(den_);
    }
    const Int g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Frac operator+(const Frac& x, const Frac& y) {
    return {checked::add(checked::mul(x.num_, y.den_), checked::mul(y.num_, x.den_)),
            checked::mul(x.den_, y.den_)};
}

Frac operator*(Int k, const Frac& x) {
    return {checked::mul(k, x.num_), x.den_};
}

Frac Frac::mod1() const {
    Int r = num_ % den_;
    if (r < 0) r += den_;
    return {r, den_};
}

bool operator<(const Frac& x, const Frac& y) {
    return checked::mul(x.num_, y.den_) < checked::mul(y.num_, x.den_);
}

std::string render(const Frac& x) {
    std::ostringstream os;
    os << x.num() << '/' << x.den();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Frac& x) {
    return os << render(x);
}

} // namespace toroidal
