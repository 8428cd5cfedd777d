#include "toroidal/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace toroidal {

Int IntMat2::det() const {
    return checked::sub(checked::mul(m11, m22), checked::mul(m12, m21));
}

bool IntMat2::is_unimodular() const {
    const Int d = det();
    return d == 1 || d == -1;
}

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return {checked::add(checked::mul(x.m11, y.m11), checked::mul(x.m12, y.m21)),
            checked::add(checked::mul(x.m11, y.m12), checked::mul(x.m12, y.m22)),
            checked::add(checked::mul(x.m21, y.m11), checked::mul(x.m22, y.m21)),
            checked::add(checked::mul(x.m21, y.m12), checked::mul(x.m22, y.m22))};
}

bool operator==(const IntMat2& x, const IntMat2& y) {
    return x.m11 == y.m11 && x.m12 == y.m12 && x.m21 == y.m21 && x.m22 == y.m22;
}

std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
    return os << "[[" << m.m11 << ", " << m.m12 << "], [" << m.m21 << ", " << m.m22 << "]]";
}

namespace {

void swap_rows(IntMat2& d, IntMat2& u) {
    std::swap(d.m11, d.m21);
    std::swap(d.m12, d.m22);
    std::swap(u.m11, u.m21);
    std::swap(u.m12, u.m22);
}

void swap_cols(IntMat2& d, IntMat2& v) {
    std::swap(d.m11, d.m12);
    std::swap(d.m21, d.m22);
    std::swap(v.m11, v.m12);
    std::swap(v.m21, v.m22);
}

// col1 += col2
void add_col1(IntMat2& d, IntMat2& v) {
    d.m11 = checked::add(d.m11, d.m12);
    d.m21 = checked::add(d.m21, d.m22);
    v.m11 = checked::add(v.m11, v.m12);
    v.m21 = checked::add(v.m21, v.m22);
}

void negate_row(IntMat2& d, IntMat2& u, int row) {
    if (row == 1) {
        d.m11 = checked::neg(d.m11);
        d.m12 = checked::neg(d.m12);
        u.m11 = checked::neg(u.m11);
        u.m12 = checked::neg(u.m12);
    } else {
        d.m21 = checked::neg(d.m21);
        d.m22 = checked::neg(d.m22);
        u.m21 = checked::neg(u.m21);
        u.m22 = checked::neg(u.m22);
    }
}

struct Bezout {
    Int g;   // gcd >= 0
    Int x;
    Int y;   // x*a + y*b = g
};

Bezout extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = checked::sub(old_r, checked::mul(q, r));
        std::swap(old_r, r);
        old_x = checked::sub(old_x, checked::mul(q, x));
        std::swap(old_x, x);
        old_y = checked::sub(old_y, checked::mul(q, y));
        std::swap(old_y, y);
    }
    if (old_r < 0) {
        old_r = checked::neg(old_r);
        old_x = checked::neg(old_x);
        old_y = checked::neg(old_y);
    }
    return {old_r, old_x, old_y};
}

// Left-multiplies d (and u) by [[x, y], [z, w]].
void apply_left(IntMat2& d, IntMat2& u, Int x, Int y, Int z, Int w) {
    const auto combine = [&](IntMat2& t) {
        const IntMat2 s = t;
        t.m11 = checked::add(checked::mul(x, s.m11), checked::mul(y, s.m21));
        t.m12 = checked::add(checked::mul(x, s.m12), checked::mul(y, s.m22));
        t.m21 = checked::add(checked::mul(z, s.m11), checked::mul(w, s.m21));
        t.m22 = checked::add(checked::mul(z, s.m12), checked::mul(w, s.m22));
    };
    combine(d);
    combine(u);
}

// Right-multiplies d (and v) by [[x, z], [y, w]].
void apply_right(IntMat2& d, IntMat2& v, Int x, Int y, Int z, Int w) {
    const auto combine = [&](IntMat2& t) {
        const IntMat2 s = t;
        t.m11 = checked::add(checked::mul(s.m11, x), checked::mul(s.m12, y));
        t.m12 = checked::add(checked::mul(s.m11, z), checked::mul(s.m12, w));
        t.m21 = checked::add(checked::mul(s.m21, x), checked::mul(s.m22, y));
        t.m22 = checked::add(checked::mul(s.m21, z), checked::mul(s.m22, w));
    };
    combine(d);
    combine(v);
}

} // namespace

SnfResult smith_normal_form(const IntMat2& m) {
    IntMat2 u = IntMat2::identity();
    IntMat2 v = IntMat2::identity();
    IntMat2 d = m;

    for (;;) {
        // Clear each off-diagonal entry with one unimodular combination: a
        // plain shear when the pivot already divides it, a Bezout step
        // (which shrinks the pivot to the gcd) otherwise.  One step per
        // entry keeps the coefficients of U and V near the scale of the
        // input instead of compounding Euclidean quotients, and a Bezout
        // step strictly shrinks |pivot|, so the loop terminates.
        while (d.m12 != 0 || d.m21 != 0) {
            if (d.m21 != 0) {
                if (d.m11 != 0 && d.m21 % d.m11 == 0) {
                    apply_left(d, u, 1, 0, -(d.m21 / d.m11), 1);
                } else {
                    const Bezout e = extended_gcd(d.m11, d.m21);
                    apply_left(d, u, e.x, e.y, -(d.m21 / e.g), d.m11 / e.g);
                }
            }
            if (d.m12 != 0) {
                if (d.m11 != 0 && d.m12 % d.m11 == 0) {
                    apply_right(d, v, 1, 0, -(d.m12 / d.m11), 1);
                } else {
                    const Bezout e = extended_gcd(d.m11, d.m12);
                    apply_right(d, v, e.x, e.y, -(d.m12 / e.g), d.m11 / e.g);
                }
            }
        }
        // Diagonal now; enforce the ordering and d1 | d2.
        if (d.m11 == 0 && d.m22 != 0) {
            swap_rows(d, u);
            swap_cols(d, v);
        }
        if (d.m11 != 0 && d.m22 % d.m11 != 0) {
            add_col1(d, v);   // drags d2 into the first column, rerun the descent
            continue;
        }
        break;
    }

    if (d.m11 < 0) negate_row(d, u, 1);
    if (d.m22 < 0) negate_row(d, u, 2);

    assert(u.is_unimodular());
    assert(v.is_unimodular());
    assert(u * m * v == d);
    assert(d.m22 == 0 || (d.m11 != 0 && d.m22 % d.m11 == 0) || (d.m11 == 0 && d.m22 == 0));

    return {u, d, v};
}

IntMat2 mult_matrix(const QuadInt& gamma) {
    const Int T = gen_trace(gamma.order());
    const Int N = gen_norm(gamma.order());
    return {gamma.a(), checked::neg(checked::mul(gamma.b(), N)),
            gamma.b(), checked::add(gamma.a(), checked::mul(gamma.b(), T))};
}

bool kills(const IntMat2& m, const TorsionPoint& z) {
    const Frac w1 = m.m11 * z[0] + m.m12 * z[1];
    const Frac w2 = m.m21 * z[0] + m.m22 * z[1];
    return w1.is_integer() && w2.is_integer();
}

TorsionGroup quotient_reps(const QuadInt& gamma) {
    if (gamma.is_zero()) throw std::domain_error("gamma = 0 has infinite kernel");

    const IntMat2 m = mult_matrix(gamma);
    const SnfResult snf = smith_normal_form(m);
    const Int d1 = snf.D.m11;
    const Int d2 = snf.D.m22;
    assert(d1 > 0 && d2 > 0);   // det = norm(gamma) != 0

    TorsionGroup group{gamma, {}};
    group.reps.reserve(static_cast<std::size_t>(checked::mul(d1, d2)));
    for (Int x = 0; x < d1; ++x) {
        for (Int y = 0; y < d2; ++y) {
            // z = V * (x/d1, y/d2) reduced into [0,1)^2
            const Frac w1{x, d1};
            const Frac w2{y, d2};
            TorsionPoint z = {(snf.V.m11 * w1 + snf.V.m12 * w2).mod1(),
                              (snf.V.m21 * w1 + snf.V.m22 * w2).mod1()};
            assert(kills(m, z));
            group.reps.push_back(z);
        }
    }
    std::sort(group.reps.begin(), group.reps.end(),
              [](const TorsionPoint& p, const TorsionPoint& q) {
                  if (p[0] != q[0]) return p[0] < q[0];
                  return p[1] < q[1];
              });
    assert(static_cast<Int>(group.reps.size()) == norm(gamma));
    return group;
}

} // namespace toroidal
