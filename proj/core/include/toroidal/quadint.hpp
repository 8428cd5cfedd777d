#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toroidal/checked.hpp"

namespace toroidal {

// The three endomorphism rings that can act on an elliptic curve factor:
// plain integers for a generic curve, the Gaussian integers Z[i], and the
// hexagonal ring Z[t] with t = e^{i*pi/3}, i.e. t^2 = t - 1 (a basis of the
// Eisenstein integers).
enum class OrderKind { Rational, Gaussian, Eisenstein6 };

// Generator relation g^2 = T*g - N.  Gaussian: g = i, (T, N) = (0, 1).
// Eisenstein6: g = t, (T, N) = (1, 1).  Rational: generator unused.
Int gen_trace(OrderKind order);
Int gen_norm(OrderKind order);

const char* order_name(OrderKind order);      // "rational" / "gaussian" / "eisenstein"
char gen_letter(OrderKind order);             // 'i' / 't'; throws for Rational
std::optional<OrderKind> order_from_name(const std::string& name);

// Element a + b*g of the chosen order.  Rational elements keep b = 0.
// Values are immutable after construction and safe to copy across threads.
class QuadInt {
public:
    QuadInt(Int a, Int b, OrderKind order);

    static QuadInt zero(OrderKind order) { return {0, 0, order}; }
    static QuadInt one(OrderKind order) { return {1, 0, order}; }
    static QuadInt generator(OrderKind order);   // g itself; throws for Rational

    Int a() const { return a_; }
    Int b() const { return b_; }
    OrderKind order() const { return order_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
    QuadInt operator-() const;

    friend bool operator==(const QuadInt& x, const QuadInt& y);
    friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }

    // Total order used for every canonical or deterministic listing:
    // lexicographic on (norm, a, b).
    friend bool operator<(const QuadInt& x, const QuadInt& y);

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& x);

private:
    Int a_;
    Int b_;
    OrderKind order_;
};

QuadInt conj(const QuadInt& x);
Int norm(const QuadInt& x);    // a^2 + a*b*T + b^2*N; >= 0, zero only at 0
Int trace(const QuadInt& x);   // 2a + b*T

bool is_unit(const QuadInt& x);

// All elements of norm 1, as the successive powers of the distinguished
// root of unity: {1, -1} / {1, i, -1, -i} / {1, t, t^2, -1, -t, -t^2}.
std::vector<QuadInt> units(OrderKind order);

// Exact quotient x / y when y divides x in the order, empty otherwise.
// Throws on y = 0.
std::optional<QuadInt> try_div_exact(const QuadInt& x, const QuadInt& y);

// Compact grammar used on the command line and in reports: "a", "a+bt",
// "a-bt", "bt", "t", "-t" (letter i for the Gaussian order).  render and
// parse are inverse on canonical spellings; parse also accepts explicit
// coefficients like "3+0t".
std::string render(const QuadInt& x);
QuadInt parse_quadint(const std::string& text, OrderKind order);

} // namespace toroidal
