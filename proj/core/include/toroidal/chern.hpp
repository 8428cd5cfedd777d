#pragma once

#include <string>
#include <vector>

#include "toroidal/checked.hpp"

namespace toroidal {

enum class SurfaceKind {
    Abelian,
    Bielliptic,
    K3,
    Enriques,
    ProjectivePlane,
    Hirzebruch,
    RuledOverGenus,
    MinimalKodairaOne,
};

// A minimal-model class together with the data that fixes its Chern
// numbers: the base genus for ruled surfaces, the degree d (c2 = 12d) for
// minimal properly elliptic surfaces.
class SurfaceClass {
public:
    static SurfaceClass abelian() { return {SurfaceKind::Abelian, 0}; }
    static SurfaceClass bielliptic() { return {SurfaceKind::Bielliptic, 0}; }
    static SurfaceClass k3() { return {SurfaceKind::K3, 0}; }
    static SurfaceClass enriques() { return {SurfaceKind::Enriques, 0}; }
    static SurfaceClass projective_plane() { return {SurfaceKind::ProjectivePlane, 0}; }
    static SurfaceClass hirzebruch() { return {SurfaceKind::Hirzebruch, 0}; }
    static SurfaceClass ruled_over_genus(Int g);
    static SurfaceClass minimal_kodaira_one(Int d);

    SurfaceKind kind() const { return kind_; }
    Int param() const { return param_; }

    Int c2() const;
    Int k_squared() const;
    std::string name() const;

    friend bool operator==(const SurfaceClass& x, const SurfaceClass& y) {
        return x.kind_ == y.kind_ && x.param_ == y.param_;
    }

private:
    SurfaceClass(SurfaceKind kind, Int param) : kind_(kind), param_(param) {}

    SurfaceKind kind_;
    Int param_;
};

// Minimal-model class, blow-up count and the self-intersections of the
// boundary curves on the blown-up surface.  Carrier of the logarithmic
// Chern numbers.
struct LogPair {
    SurfaceClass base;
    Int blowups;
    std::vector<Int> boundary_selfints;   // each <= -1

    LogPair(SurfaceClass base, Int blowups, std::vector<Int> boundary_selfints);
};

struct LogChern {
    Int c1bar_sq;
    Int c2bar;
};

// Each blow-up adds one to the Euler number.
Int blowup_c2(Int c2, Int blowups);

// c2bar = c2(base) + k, K_X^2 = K^2(base) - k, and since every boundary
// component is a smooth elliptic curve, adjunction gives K.D_i = -D_i^2,
// so c1bar^2 = (K_X + D)^2 = K_X^2 - sum D_i^2.
LogChern log_chern_numbers(const LogPair& pair);

// c1^2 + c2 = 0 mod 12 for any complex surface (Noether).
bool noether_filter(Int c1_sq, Int c2);

// The proportionality equality 3*c2bar = c1bar^2 that characterizes
// ball-quotient compactifications.
bool bmy_equality(Int c1bar_sq, Int c2bar);

} // namespace toroidal
