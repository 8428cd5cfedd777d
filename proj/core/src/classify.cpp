#include "toroidal/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toroidal {

std::vector<CuspPartition> cusp_partitions_of(Int total) {
    if (total < 0) throw std::invalid_argument("partition total must be nonnegative");
    // Partitions of the positive total into parts >= 1, nondecreasing.
    std::vector<std::vector<Int>> parts;
    std::vector<Int> current;
    auto recurse = [&](auto&& self, Int remaining, Int min_part) -> void {
        if (remaining == 0) {
            parts.push_back(current);
            return;
        }
        for (Int p = min_part; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    recurse(recurse, total, 1);
    // Order by cusp count, then lexicographically; a part p becomes the
    // boundary self-intersection -p.
    std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    std::vector<CuspPartition> out;
    out.reserve(parts.size());
    for (const auto& p : parts) {
        CuspPartition q;
        q.reserve(p.size());
        for (Int x : p) q.push_back(-x);
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<CuspPartition> enumerate_cusp_partitions() {
    return cusp_partitions_of(4);
}

namespace {

// Largest s with s^2 <= v.
Int isqrt(Int v) {
    Int s = 0;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

std::string partition_id(const CuspPartition& p) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "}";
    return os.str();
}

} // namespace

std::vector<SingularCase> singular_curve_cases() {
    std::vector<SingularCase> cases;
    Int prev_disc = 0;
    for (Int n = 1; n <= 100; ++n) {
        const Int disc = 1 + 8 * n;
        const Int s = isqrt(disc);
        // Transform self-intersection 2n - r^2 equals -(1 + sqrt(1+8n))/2 at
        // the positive root, so it decreases strictly in n iff 1 + 8n grows,
        // and is below -4 exactly when 1 + 8n > 49.
        if (disc <= prev_disc)
            throw std::logic_error("self-intersection must decrease strictly in n");
        prev_disc = disc;
        if (n >= 7 && disc <= 49)
            throw std::logic_error("self-intersection bound failed for n = " + std::to_string(n));
        if (s * s != disc || (1 + s) % 2 != 0) continue;
        const Int r = (1 + s) / 2;
        const Int d_sq = 2 * n - r * r;
        if (d_sq < -4) continue;
        cases.push_back({n, 2 * n, r, d_sq});
    }
    for (const SingularCase& c : cases) {
        if (c.r * c.r - c.r - 2 * c.n != 0 || c.d_sq < -4 || c.d_sq > -2)
            throw std::logic_error("inconsistent singular curve case");
    }
    return cases;
}

bool theta_obstruction_eliminates(Int c_sq, Int r) {
    return c_sq < r * (r - 1) + 1;
}

EliminationStep theta_obstruction_filter(const SingularCase& c) {
    std::ostringstream id;
    id << "singular-curve/n=" << c.n;
    std::ostringstream cite;
    cite << "vanishing-locus bound for a curve with one point of multiplicity r on an abelian "
            "surface: C^2 >= r(r-1)+1; here C^2 = " << c.c_sq << " and r(r-1)+1 = "
         << c.r * (c.r - 1) + 1;
    const Verdict verdict =
        theta_obstruction_eliminates(c.c_sq, c.r) ? Verdict::Eliminated : Verdict::Survives;
    return {id.str(), Rule::Arithmetic, cite.str(), verdict};
}

std::vector<EliminationStep> eliminate_general_type() {
    std::vector<EliminationStep> steps;

    // Non-minimal X: the minimal model has c2 >= 1, so c2(X) = c2(Y) + k >= 2.
    Int min_c2_nonminimal = blowup_c2(1, 1);
    if (min_c2_nonminimal <= 1) throw std::logic_error("non-minimal bound failed");
    steps.push_back({"kappa=2/non-minimal", Rule::Arithmetic,
                     "a minimal surface of general type has positive Euler number, so a "
                     "non-minimal X has c2 = c2(Y) + k >= 2 > 1",
                     Verdict::Eliminated});

    // 0 < c1^2 < 3c2 = 3 since c1bar^2 = c1^2 - D^2 with D^2 < 0.
    std::vector<Int> range;
    for (Int v = 1; v < 3; ++v) range.push_back(v);
    steps.push_back({"kappa=2/c1sq-range", Rule::Arithmetic,
                     "c1bar^2 = c1^2 - D^2 = 3c2 = 3 with D^2 < 0 and c1^2 > 0 leaves "
                     "c1^2 in {1, 2}",
                     Verdict::Survives});

    for (Int c1_sq : range) {
        if (noether_filter(c1_sq, 1))
            throw std::logic_error("Noether filter unexpectedly passed");
        std::ostringstream id;
        id << "kappa=2/c1sq=" << c1_sq;
        std::ostringstream cite;
        cite << "Noether: c1^2 + c2 = " << c1_sq + 1 << " is not divisible by 12";
        steps.push_back({id.str(), Rule::Arithmetic, cite.str(), Verdict::Eliminated});
    }
    return steps;
}

std::vector<EliminationStep> eliminate_nonzero_kodaira() {
    std::vector<EliminationStep> steps;

    // kappa = 1: c2(X) = 12d + k, so c2 = 1 pins (d, k) = (0, 1).
    std::vector<std::pair<Int, Int>> solutions;
    for (Int d = 0; d <= 2; ++d) {
        for (Int k = 0; k <= 13; ++k) {
            if (blowup_c2(SurfaceClass::minimal_kodaira_one(d).c2(), k) == 1)
                solutions.push_back({d, k});
        }
    }
    if (solutions != std::vector<std::pair<Int, Int>>{{0, 1}})
        throw std::logic_error("12d + k = 1 must have the single solution (0, 1)");
    steps.push_back({"kappa=1/chern-count", Rule::Arithmetic,
                     "c2(X) = 12d + k with d, k >= 0 equals 1 only at (d, k) = (0, 1): X is the "
                     "blow-up at one point of a minimal elliptic surface with c2 = 0",
                     Verdict::Survives});
    steps.push_back({"kappa=1/base-genus-1", Rule::CitedGeometric,
                     "an n-section is normalized by an elliptic boundary component; the fiber "
                     "product with it has a holomorphic 1-section, hence no multiple fibers: "
                     "\"We then have kappa(Y)=0\"",
                     Verdict::Eliminated});
    steps.push_back({"kappa=1/base-genus-0", Rule::CitedGeometric,
                     "with trivial L the 1-section finite cover splits as a product of curves: "
                     "\"the Kodaira dimension of Y cannot be one\"",
                     Verdict::Eliminated});

    // kappa = -infinity: the rational minimal models are too large already.
    for (const SurfaceClass base : {SurfaceClass::projective_plane(), SurfaceClass::hirzebruch()}) {
        const Int c2 = blowup_c2(base.c2(), 0);
        if (c2 <= 1) throw std::logic_error("rational minimal model bound failed");
        std::ostringstream id;
        id << "kappa=-inf/" << base.name();
        std::ostringstream cite;
        cite << "c2 = " << base.c2() << " + k >= " << c2 << " > 1 for every blow-up";
        steps.push_back({id.str(), Rule::Arithmetic, cite.str(), Verdict::Eliminated});
    }
    steps.push_back({"kappa=-inf/ruled-genus>=2", Rule::CitedGeometric,
                     "a negative elliptic curve must be an n-section of the ruling and Hurwitz "
                     "bounds the base genus by one",
                     Verdict::Eliminated});
    if (blowup_c2(SurfaceClass::ruled_over_genus(1).c2(), 1) != 1)
        throw std::logic_error("ruled-over-elliptic blow-up count failed");
    steps.push_back({"kappa=-inf/ruled-elliptic/blow-up-count", Rule::Arithmetic,
                     "c2(Y) = 0 for a ruling over an elliptic curve, so c2(X) = k = 1 and the "
                     "Picard rank of X is 3",
                     Verdict::Survives});
    steps.push_back({"kappa=-inf/ruled-elliptic/cusp-bound", Rule::CitedGeometric,
                     "Picard rank 3 admits at most two cusps",
                     Verdict::Survives});
    steps.push_back({"kappa=-inf/ruled-elliptic/one-cusp", Rule::CitedGeometric,
                     "the blow-down curve is a singular n-section; the proper transform of the "
                     "fiber through its singular point stays in the open part: \"This is clearly "
                     "impossible\"",
                     Verdict::Eliminated});
    steps.push_back({"kappa=-inf/ruled-elliptic/two-cusps", Rule::CitedGeometric,
                     "two components meet at one ordinary point with distinct tangents and the "
                     "fiber argument repeats: \"This is again impossible\"",
                     Verdict::Eliminated});
    return steps;
}

namespace {

void append(std::vector<EliminationStep>& steps, std::vector<EliminationStep> more) {
    for (EliminationStep& s : more) steps.push_back(std::move(s));
}

std::vector<EliminationStep> kappa_zero_table_steps() {
    std::vector<EliminationStep> steps;
    for (const SurfaceClass base : {SurfaceClass::k3(), SurfaceClass::enriques()}) {
        const Int c2 = base.c2();
        if (c2 <= 1) throw std::logic_error("kappa = 0 table bound failed");
        std::ostringstream id;
        id << "kappa=0/" << base.name();
        std::ostringstream cite;
        cite << "c2 = " << c2 << " + k >= " << c2 << " > 1 for every blow-up";
        steps.push_back({id.str(), Rule::Arithmetic, cite.str(), Verdict::Eliminated});
    }
    steps.push_back({"kappa=0/bielliptic", Rule::CitedGeometric,
                     "excluded by hypothesis; for the bi-elliptic branch \"the classification "
                     "is in progress\"",
                     Verdict::OutOfScope});
    if (blowup_c2(SurfaceClass::abelian().c2(), 1) != 1)
        throw std::logic_error("abelian blow-up count failed");
    steps.push_back({"kappa=0/abelian/blow-up-count", Rule::Arithmetic,
                     "c2(Y) = 0 and c2(X) = 1 force the blow-up of an abelian surface at "
                     "exactly one point",
                     Verdict::Survives});
    return steps;
}

EliminationStep boundary_sum_step() {
    // c1bar^2 = K_X^2 - sum D_i^2 = -1 - sum D_i^2 must equal 3*c2bar = 3.
    std::vector<Int> witnesses;
    for (Int s = 0; s <= 16; ++s) {
        const LogChern lc = log_chern_numbers(
            {SurfaceClass::abelian(), 1, std::vector<Int>(static_cast<std::size_t>(s), -1)});
        if (bmy_equality(lc.c1bar_sq, lc.c2bar)) witnesses.push_back(s);
    }
    if (witnesses != std::vector<Int>{4})
        throw std::logic_error("boundary sum must be forced to 4");
    return {"kappa=0/abelian/boundary-sum", Rule::Arithmetic,
            "c1bar^2 = K_X^2 - sum D_i^2 = -1 - sum D_i^2 = 3 forces "
            "-D_1^2 - ... - D_k^2 = 4",
            Verdict::Survives};
}

std::vector<EliminationStep> partition_steps() {
    std::vector<EliminationStep> steps;
    steps.push_back({"kappa=0/abelian/component-types", Rule::CitedGeometric,
                     "a torus contains no rational curves, so a blow-down component is either a "
                     "smooth elliptic curve with C^2 = 0 or has a single singular point with "
                     "C^2 = 2n >= 2",
                     Verdict::Survives});

    const std::vector<SingularCase> singular = singular_curve_cases();
    for (const CuspPartition& partition : enumerate_cusp_partitions()) {
        const std::string id = "partition/" + partition_id(partition);
        // Entries below -1 need a singular blow-down curve of matching
        // self-intersection; the vanishing-locus bound kills each one.
        std::optional<SingularCase> blocking;
        for (Int entry : partition) {
            if (entry > -2) continue;
            for (const SingularCase& c : singular) {
                if (c.d_sq == entry && theta_obstruction_eliminates(c.c_sq, c.r)) {
                    blocking = c;
                    break;
                }
            }
            if (blocking) break;
        }
        if (blocking) {
            std::ostringstream cite;
            cite << "entry " << blocking->d_sq << " needs a singular component with r = "
                 << blocking->r << " and C^2 = " << blocking->c_sq
                 << "; the bound C^2 >= r(r-1)+1 = " << blocking->r * (blocking->r - 1) + 1
                 << " fails";
            steps.push_back({id, Rule::Arithmetic, cite.str(), Verdict::Eliminated});
        } else {
            steps.push_back({id, Rule::Arithmetic,
                             "every component is a smooth elliptic curve with C^2 = 0 through "
                             "the blown-up point, so each D_i^2 = 0 - 1^2 = -1",
                             Verdict::Survives});
        }
    }
    return steps;
}

} // namespace

ClassificationReport run_classification(const std::vector<OrderKind>& orders) {
    ClassificationReport report;

    append(report.steps, eliminate_general_type());
    append(report.steps, eliminate_nonzero_kodaira());
    append(report.steps, kappa_zero_table_steps());
    report.steps.push_back(boundary_sum_step());
    append(report.steps, partition_steps());

    // Deduplicate and order the searched rings deterministically.
    std::vector<OrderKind> searched;
    for (OrderKind order : all_orders()) {
        if (std::find(orders.begin(), orders.end(), order) != orders.end())
            searched.push_back(order);
    }

    std::optional<Survivor> survivor;
    for (OrderKind order : searched) {
        const std::vector<Configuration> classes = search_good_configurations(order);
        const std::string id = std::string("good-config/") + order_name(order);
        if (classes.empty()) {
            const std::string cite =
                order == OrderKind::Rational
                    ? "a generic lattice has units +-1 only and norm(1 - (-1)) = 4, so no "
                      "fourth curve meets the others once"
                    : "no unit u with u - 1 a unit exists, so no good configuration";
            report.steps.push_back({id, Rule::Arithmetic, cite, Verdict::Eliminated});
            continue;
        }
        std::ostringstream cite;
        cite << "normalized search over units finds " << classes.size()
             << " canonical class(es); the exhaustive small-slope search agrees";
        report.steps.push_back({id, Rule::Arithmetic, cite.str(), Verdict::Survives});

        if (classes.size() != 1 || order != OrderKind::Eisenstein6 || survivor)
            throw std::logic_error("uniqueness of the surviving configuration failed");

        const std::vector<Int> boundary = {-1, -1, -1, -1};
        const LogChern lc = log_chern_numbers({SurfaceClass::abelian(), 1, boundary});
        if (!bmy_equality(lc.c1bar_sq, lc.c2bar))
            throw std::logic_error("survivor must satisfy the proportionality equality");
        // Noether consistency on the blown-up surface: K_X^2 + c2 = -1 + 1.
        if (!noether_filter(checked::sub(SurfaceClass::abelian().k_squared(), 1), lc.c2bar))
            throw std::logic_error("survivor must be Noether-consistent");
        survivor = Survivor{order, classes.front(), boundary, lc.c1bar_sq, lc.c2bar};
    }

    if (survivor) {
        report.steps.push_back({"survivor/uniqueness", Rule::Arithmetic,
                                "the unique canonical good configuration {inf, 0, 1, t}; one "
                                "blow-up gives boundary {-1,-1,-1,-1} and (c1bar^2, c2bar) = "
                                "(3, 1) with 3*c2bar = c1bar^2",
                                Verdict::Survives});
    }
    report.survivor = std::move(survivor);
    return report;
}

const char* rule_name(Rule rule) {
    switch (rule) {
    case Rule::Arithmetic: return "arithmetic";
    case Rule::CitedGeometric: return "cited-geometric";
    }
    throw std::logic_error("unknown rule");
}

const char* verdict_name(Verdict verdict) {
    switch (verdict) {
    case Verdict::Eliminated: return "eliminated";
    case Verdict::Survives: return "survives";
    case Verdict::OutOfScope: return "out-of-scope";
    }
    throw std::logic_error("unknown verdict");
}

std::optional<Rule> rule_from_name(const std::string& name) {
    if (name == "arithmetic") return Rule::Arithmetic;
    if (name == "cited-geometric") return Rule::CitedGeometric;
    return std::nullopt;
}

std::optional<Verdict> verdict_from_name(const std::string& name) {
    if (name == "eliminated") return Verdict::Eliminated;
    if (name == "survives") return Verdict::Survives;
    if (name == "out-of-scope") return Verdict::OutOfScope;
    return std::nullopt;
}

} // namespace toroidal
