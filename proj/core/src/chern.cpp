#include "toroidal/chern.hpp"

#include <stdexcept>

namespace toroidal {

SurfaceClass SurfaceClass::ruled_over_genus(Int g) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    return {SurfaceKind::RuledOverGenus, g};
}

SurfaceClass SurfaceClass::minimal_kodaira_one(Int d) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    return {SurfaceKind::MinimalKodairaOne, d};
}

Int SurfaceClass::c2() const {
    switch (kind_) {
    case SurfaceKind::Abelian:
    case SurfaceKind::Bielliptic: return 0;
    case SurfaceKind::K3: return 24;
    case SurfaceKind::Enriques: return 12;
    case SurfaceKind::ProjectivePlane: return 3;
    case SurfaceKind::Hirzebruch: return 4;
    case SurfaceKind::RuledOverGenus: return checked::sub(4, checked::mul(4, param_));
    case SurfaceKind::MinimalKodairaOne: return checked::mul(12, param_);
    }
    throw std::logic_error("unknown surface kind");
}

Int SurfaceClass::k_squared() const {
    switch (kind_) {
    case SurfaceKind::Abelian:
    case SurfaceKind::Bielliptic:
    case SurfaceKind::K3:
    case SurfaceKind::Enriques:
    case SurfaceKind::MinimalKodairaOne: return 0;
    case SurfaceKind::ProjectivePlane: return 9;
    case SurfaceKind::Hirzebruch: return 8;
    case SurfaceKind::RuledOverGenus: return checked::mul(8, checked::sub(1, param_));
    }
    throw std::logic_error("unknown surface kind");
}

std::string SurfaceClass::name() const {
    switch (kind_) {
    case SurfaceKind::Abelian: return "abelian";
    case SurfaceKind::Bielliptic: return "bielliptic";
    case SurfaceKind::K3: return "k3";
    case SurfaceKind::Enriques: return "enriques";
    case SurfaceKind::ProjectivePlane: return "p2";
    case SurfaceKind::Hirzebruch: return "hirzebruch";
    case SurfaceKind::RuledOverGenus: return "ruled:" + std::to_string(param_);
    case SurfaceKind::MinimalKodairaOne: return "kodaira1:" + std::to_string(param_);
    }
    throw std::logic_error("unknown surface kind");
}

LogPair::LogPair(SurfaceClass base_, Int blowups_, std::vector<Int> boundary)
    : base(base_), blowups(blowups_), boundary_selfints(std::move(boundary)) {
    if (blowups < 0) throw std::invalid_argument("blow-up count must be nonnegative");
    for (Int d : boundary_selfints) {
        if (d > -1)
            throw std::invalid_argument("boundary curves have negative self-intersection");
    }
}

Int blowup_c2(Int c2, Int blowups) {
    if (blowups < 0) throw std::invalid_argument("blow-up count must be nonnegative");
    return checked::add(c2, blowups);
}

LogChern log_chern_numbers(const LogPair& pair) {
    const Int c2bar = blowup_c2(pair.base.c2(), pair.blowups);
    Int c1bar_sq = checked::sub(pair.base.k_squared(), pair.blowups);
    for (Int d : pair.boundary_selfints) c1bar_sq = checked::sub(c1bar_sq, d);
    return {c1bar_sq, c2bar};
}

bool noether_filter(Int c1_sq, Int c2) {
    const Int s = checked::add(c1_sq, c2);
    return ((s % 12) + 12) % 12 == 0;
}

bool bmy_equality(Int c1bar_sq, Int c2bar) {
    return checked::mul(3, c2bar) == c1bar_sq;
}

} // namespace toroidal
