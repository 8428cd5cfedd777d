#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "toroidal/fraction.hpp"
#include "toroidal/quadint.hpp"

namespace toroidal {

// Z-linear map of the lattice Z + Z*g, columns are the images of the basis.
struct IntMat2 {
    Int m11, m12;
    Int m21, m22;

    static IntMat2 identity() { return {1, 0, 0, 1}; }

    Int det() const;
    bool is_unimodular() const;

    friend IntMat2 operator*(const IntMat2& x, const IntMat2& y);
    friend bool operator==(const IntMat2& x, const IntMat2& y);
    friend bool operator!=(const IntMat2& x, const IntMat2& y) { return !(x == y); }
    friend std::ostream& operator<<(std::ostream& os, const IntMat2& m);
};

// U * M * V = D with U, V unimodular and D = diag(d1, d2), d1, d2 >= 0,
// d1 | d2.  Signs are absorbed into U so d1 * d2 = |det M|.
struct SnfResult {
    IntMat2 U;
    IntMat2 D;
    IntMat2 V;
};

SnfResult smith_normal_form(const IntMat2& m);

// Matrix of multiplication by gamma on the basis (1, g):
// gamma*1 = (a, b), gamma*g = (-b*N, a + b*T).  Its determinant is
// norm(gamma), which is the index of gamma*Lambda in Lambda.
IntMat2 mult_matrix(const QuadInt& gamma);

// Coordinates of a torsion point with respect to the basis (1, g),
// reduced to the fundamental square [0, 1)^2.
using TorsionPoint = std::array<Frac, 2>;

// The kernel of multiplication by gamma on C/Lambda: norm(gamma) coset
// representatives, each killed exactly, sorted lexicographically.
struct TorsionGroup {
    QuadInt gamma;
    std::vector<TorsionPoint> reps;
};

TorsionGroup quotient_reps(const QuadInt& gamma);

// Whether M * z lands in Z^2 (z given coordinate-wise).
bool kills(const IntMat2& m, const TorsionPoint& z);

} // namespace toroidal
