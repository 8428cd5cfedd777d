#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toroidal/chern.hpp"
#include "toroidal/slopes.hpp"

namespace toroidal {

// Self-intersections of the boundary components, a multiset of negative
// integers summing to -4 (the proportionality equality forces the sum).
using CuspPartition = std::vector<Int>;

// Exhaustive list for total 4: {-4}, {-1,-3}, {-2,-2}, {-1,-1,-2},
// {-1,-1,-1,-1}, ordered by cusp count and then lexicographically.
std::vector<CuspPartition> enumerate_cusp_partitions();

// Same enumeration for an arbitrary total (cross-checked against a
// brute-force partition generator in the tests).
std::vector<CuspPartition> cusp_partitions_of(Int total);

// A singular blow-down candidate: an irreducible curve with one singular
// point of multiplicity r and self-intersection 2n whose proper transform
// is a smooth elliptic curve, so r^2 - r - 2n = 0 and the transform has
// self-intersection 2n - r^2.
struct SingularCase {
    Int n;
    Int c_sq;    // 2n
    Int r;
    Int d_sq;    // 2n - r^2

    friend bool operator==(const SingularCase& x, const SingularCase& y) {
        return x.n == y.n && x.c_sq == y.c_sq && x.r == y.r && x.d_sq == y.d_sq;
    }
};

// All n with an integral multiplicity r = (1 + sqrt(1+8n))/2 and transform
// self-intersection >= -4: exactly (n, C^2, r) in {(1,2,2), (3,6,3), (6,12,4)}.
// Also verifies, for n <= 100, that the transform self-intersection
// -(1 + sqrt(1+8n))/2 decreases strictly in n and drops below -4 from n = 7 on.
std::vector<SingularCase> singular_curve_cases();

// The vanishing-locus obstruction C^2 >= r(r-1) + 1 for a reduced curve
// with one singular point of multiplicity r on an abelian surface.
bool theta_obstruction_eliminates(Int c_sq, Int r);

enum class Rule { Arithmetic, CitedGeometric };
enum class Verdict { Eliminated, Survives, OutOfScope };

// One node of the machine-checked case tree.  Arithmetic steps are
// recomputed on every run; cited geometric steps carry the statement they
// rely on verbatim.
struct EliminationStep {
    std::string case_id;
    Rule rule;
    std::string citation;
    Verdict verdict;

    friend bool operator==(const EliminationStep& x, const EliminationStep& y) {
        return x.case_id == y.case_id && x.rule == y.rule && x.citation == y.citation &&
               x.verdict == y.verdict;
    }
};

EliminationStep theta_obstruction_filter(const SingularCase& c);

// kappa = 2: c2 = 1 forces X minimal, 0 < c1^2 < 3c2 leaves c1^2 in {1, 2},
// and Noether's formula rejects both.
std::vector<EliminationStep> eliminate_general_type();

// kappa = 1 and kappa = -infinity: the recomputed Chern accounting plus the
// cited geometric closures.
std::vector<EliminationStep> eliminate_nonzero_kodaira();

struct Survivor {
    OrderKind order;
    Configuration slopes;
    std::vector<Int> boundary_selfints;
    Int c1bar_sq;
    Int c2bar;

    friend bool operator==(const Survivor& x, const Survivor& y) {
        return x.order == y.order && x.slopes == y.slopes &&
               x.boundary_selfints == y.boundary_selfints && x.c1bar_sq == y.c1bar_sq &&
               x.c2bar == y.c2bar;
    }
};

struct ClassificationReport {
    std::vector<EliminationStep> steps;
    std::optional<Survivor> survivor;

    friend bool operator==(const ClassificationReport& x, const ClassificationReport& y) {
        return x.steps == y.steps && x.survivor == y.survivor;
    }
};

inline const std::vector<OrderKind>& all_orders() {
    static const std::vector<OrderKind> orders = {OrderKind::Rational, OrderKind::Gaussian,
                                                  OrderKind::Eisenstein6};
    return orders;
}

// The full case tree for pairs with 3*c2bar = c1bar^2 and c2bar = 1,
// excluding the bi-elliptic branch: Kodaira dimension eliminations, the
// minimal-model table, the boundary partitions, the singular-curve filter,
// and the good-configuration search over the given orders.  Total; the
// report always lists every step it took.
ClassificationReport run_classification(const std::vector<OrderKind>& orders = all_orders());

const char* rule_name(Rule rule);
const char* verdict_name(Verdict verdict);
std::optional<Rule> rule_from_name(const std::string& name);
std::optional<Verdict> verdict_from_name(const std::string& name);

} // namespace toroidal
