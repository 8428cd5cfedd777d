#include "toroidal/quadint.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace toroidal {

Int gen_trace(OrderKind order) {
    switch (order) {
    case OrderKind::Rational: return 0;
    case OrderKind::Gaussian: return 0;
    case OrderKind::Eisenstein6: return 1;
    }
    throw std::logic_error("unknown order kind");
}

Int gen_norm(OrderKind order) {
    switch (order) {
    case OrderKind::Rational: return 0;
    case OrderKind::Gaussian: return 1;
    case OrderKind::Eisenstein6: return 1;
    }
    throw std::logic_error("unknown order kind");
}

const char* order_name(OrderKind order) {
    switch (order) {
    case OrderKind::Rational: return "rational";
    case OrderKind::Gaussian: return "gaussian";
    case OrderKind::Eisenstein6: return "eisenstein";
    }
    throw std::logic_error("unknown order kind");
}

char gen_letter(OrderKind order) {
    switch (order) {
    case OrderKind::Gaussian: return 'i';
    case OrderKind::Eisenstein6: return 't';
    default: throw std::invalid_argument("the rational order has no generator letter");
    }
}

std::optional<OrderKind> order_from_name(const std::string& name) {
    if (name == "rational") return OrderKind::Rational;
    if (name == "gaussian") return OrderKind::Gaussian;
    if (name == "eisenstein") return OrderKind::Eisenstein6;
    return std::nullopt;
}

QuadInt::QuadInt(Int a, Int b, OrderKind order) : a_(a), b_(b), order_(order) {
    if (order_ == OrderKind::Rational && b_ != 0)
        throw std::invalid_argument("rational elements have no generator component");
}

QuadInt QuadInt::generator(OrderKind order) {
    if (order == OrderKind::Rational)
        throw std::invalid_argument("the rational order has no generator");
    return {0, 1, order};
}

namespace {

void require_same_order(const QuadInt& x, const QuadInt& y) {
    if (x.order() != y.order())
        throw std::invalid_argument("mixed-order arithmetic: " + std::string(order_name(x.order())) +
                                    " vs " + order_name(y.order()));
}

} // namespace

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    return {checked::add(x.a_, y.a_), checked::add(x.b_, y.b_), x.order_};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    return {checked::sub(x.a_, y.a_), checked::sub(x.b_, y.b_), x.order_};
}

QuadInt QuadInt::operator-() const {
    return {checked::neg(a_), checked::neg(b_), order_};
}

// (a1 + b1 g)(a2 + b2 g) with g^2 = T g - N.
QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    const Int T = gen_trace(x.order_);
    const Int N = gen_norm(x.order_);
    const Int a = checked::sub(checked::mul(x.a_, y.a_), checked::mul(checked::mul(x.b_, y.b_), N));
    const Int b = checked::add(checked::add(checked::mul(x.a_, y.b_), checked::mul(x.b_, y.a_)),
                               checked::mul(checked::mul(x.b_, y.b_), T));
    return {a, b, x.order_};
}

bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.order_ == y.order_ && x.a_ == y.a_ && x.b_ == y.b_;
}

bool operator<(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    const Int nx = norm(x), ny = norm(y);
    if (nx != ny) return nx < ny;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

QuadInt conj(const QuadInt& x) {
    // conj(g) = T - g, so conj(a + b g) = (a + b T) - b g.
    const Int T = gen_trace(x.order());
    return {checked::add(x.a(), checked::mul(x.b(), T)), checked::neg(x.b()), x.order()};
}

Int norm(const QuadInt& x) {
    const Int T = gen_trace(x.order());
    const Int N = gen_norm(x.order());
    return checked::add(checked::add(checked::mul(x.a(), x.a()), checked::mul(checked::mul(x.a(), x.b()), T)),
                        checked::mul(checked::mul(x.b(), x.b()), N));
}

Int trace(const QuadInt& x) {
    return checked::add(checked::mul(2, x.a()), checked::mul(x.b(), gen_trace(x.order())));
}

bool is_unit(const QuadInt& x) {
    return norm(x) == 1;
}

std::vector<QuadInt> units(OrderKind order) {
    const QuadInt root = order == OrderKind::Rational ? QuadInt(-1, 0, order) : QuadInt::generator(order);
    std::vector<QuadInt> out;
    QuadInt u = QuadInt::one(order);
    do {
        out.push_back(u);
        u = u * root;
    } while (u != out.front());
    return out;
}

std::optional<QuadInt> try_div_exact(const QuadInt& x, const QuadInt& y) {
    require_same_order(x, y);
    if (y.is_zero()) throw std::domain_error("division by zero");
    const Int n = norm(y);
    const QuadInt t = x * conj(y);   // x / y = x conj(y) / norm(y)
    if (t.a() % n != 0 || t.b() % n != 0) return std::nullopt;
    return QuadInt(t.a() / n, t.b() / n, x.order());
}

std::string render(const QuadInt& x) {
    if (x.order() == OrderKind::Rational || x.b() == 0) return std::to_string(x.a());
    const char g = gen_letter(x.order());
    std::ostringstream os;
    if (x.a() != 0) {
        os << x.a();
        os << (x.b() > 0 ? '+' : '-');
        const Int m = x.b() > 0 ? x.b() : checked::neg(x.b());
        if (m != 1) os << m;
    } else {
        if (x.b() == -1) os << '-';
        else if (x.b() != 1) os << x.b();
    }
    os << g;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    return os << render(x);
}

namespace {

Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno == ERANGE) throw std::overflow_error("integer out of range: " + s);
    if (end != s.c_str() + s.size() || (!std::isdigit(static_cast<unsigned char>(s[0])) && s[0] != '+' && s[0] != '-'))
        throw std::invalid_argument("cannot parse integer '" + s + "'");
    return static_cast<Int>(v);
}

// Sign-plus-optional-digits coefficient in front of the generator letter:
// "", "+", "-", "3", "+3", "-3".
Int parse_coeff(const std::string& s) {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    return parse_int(s);
}

} // namespace

QuadInt parse_quadint(const std::string& text, OrderKind order) {
    if (text.empty()) throw std::invalid_argument("empty element");
    const char last = text.back();
    if (last == 'i' || last == 't') {
        if (order == OrderKind::Rational)
            throw std::invalid_argument("'" + text + "' is not a rational integer");
        if (last != gen_letter(order))
            throw std::invalid_argument("'" + text + "' does not belong to the " +
                                        order_name(order) + " order");
        const std::string body = text.substr(0, text.size() - 1);
        // Split at the sign separating the integer part from the coefficient.
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if (body[i] == '+' || body[i] == '-') { split = i; break; }
        }
        if (split == std::string::npos)
            return {0, parse_coeff(body), order};
        return {parse_int(body.substr(0, split)), parse_coeff(body.substr(split)), order};
    }
    return {parse_int(text), 0, order};
}

} // namespace toroidal
