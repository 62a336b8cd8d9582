// The check registry: every verification suite exposed to the CLI and the
// acceptance runner, with stable ids and the object each check pins down.
#include "dwork/report.hpp"

#include "dwork/fibers.hpp"
#include "dwork/lines.hpp"
#include "dwork/lines_numeric.hpp"
#include "dwork/picard.hpp"
#include "dwork/plueckerdiv.hpp"

#include <stdexcept>

namespace dwork {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

std::vector<CheckDef> build_registry() {
    std::vector<CheckDef> defs;
    auto add = [&](std::string id, std::string provenance,
                   std::function<void(const CheckContext&)> body) {
        defs.push_back({std::move(id), std::move(provenance), std::move(body)});
    };

    // ----- dwork: the line family on the pencil ---------------------------
    add("dwork.membership_rows", "six membership conditions of a general line",
        [](const CheckContext&) { lines::check_membership_rows(); });
    add("dwork.factorization", "4F + 4PG^2 - (128-3P)H^2 = 0 and F = -P F+ F-",
        [](const CheckContext&) { lines::check_factorization(); });
    add("dwork.rho_symmetry", "G, H as polynomials in rho = 1/(s t)",
        [](const CheckContext&) { lines::check_rho_symmetry(); });
    add("dwork.scaling_chain", "scaling chain delta^5, kappa^5, psi-tilde",
        [](const CheckContext&) { lines::check_scaling_chain(); });
    add("dwork.van_geemen", "degenerate-coordinate lines and their count",
        [](const CheckContext&) { lines::check_van_geemen(); });
    add("dwork.s5_table", "parameter action of the four S5 generators on (G, H)",
        [](const CheckContext&) {
            lines::check_s5_table();
            require(lines::s5_group_order() == 120, "parameter group order is not 120");
        });
    add("dwork.intersection_points", "the 17 common points of F+ = F- = 0",
        [](const CheckContext&) { lines::check_intersection_points(); });
    add("dwork.node_local_form", "ordinary double point of the curve at (1,1)",
        [](const CheckContext&) { lines::check_node_local_form(); });
    add("dwork.no_extra_singularities", "resultant scan at five rational phi values",
        [](const CheckContext&) { lines::check_no_extra_singularities(); });
    add("dwork.family_samples", "sampled lines satisfy the quintic and Grassmann relations",
        [](const CheckContext& ctx) {
            lines::check_family_samples(static_cast<unsigned>(ctx.samples),
                                        static_cast<unsigned>(ctx.seed));
        });
    add("dwork.s5_row1_lines", "sigma <-> tau swap permutes line coordinates 1<->2, 3<->5",
        [](const CheckContext&) { lines::check_s5_row1_on_lines(); });
    add("dwork.van_geemen_limits", "family lines converge to the degenerate lines",
        [](const CheckContext&) { lines::check_van_geemen_limits(); });

    // ----- dp5: the quintic del Pezzo surface -----------------------------
    add("dp5.quadrics", "five quadrics cut out the blown-up surface in P^5",
        [](const CheckContext&) {
            require(dp5::quadrics().size() == 5, "quadric space dimension is not 5");
        });
    add("dp5.group_order", "closure of the four generator matrices has order 120",
        [](const CheckContext&) {
            require(dp5::s5_group().size() == 120, "matrix group order is not 120");
        });
    add("dp5.character", "character (6,0,-2,0,0,1,0) on the seven classes, irreducible",
        [](const CheckContext&) { dp5::character_check(); });
    add("dp5.wiman", "invariant quadrics G_z, H_z and their pullbacks G, H",
        [](const CheckContext&) { dp5::wiman_quadrics(); });
    add("dp5.exceptional_curves", "ten exceptional curves and the Petersen incidence",
        [](const CheckContext&) { dp5::exceptional_curves_check(); });
    add("dp5.p2_dictionary", "plane model via the degree-six pencil with four double points",
        [](const CheckContext&) { dp5::p2_dictionary_check(); });

    // ----- pluecker: coordinates and divisors of the family ---------------
    add("pluecker.minors", "each 2x2 minor collapses to a radical monomial times a polynomial",
        [](const CheckContext&) { pluecker::pluecker_minors(); });
    add("pluecker.pij", "pi_ij^5 / p_c divide exactly and homogenize to bidegree (6,6)",
        [](const CheckContext&) { pluecker::pij_polynomials(); });
    add("pluecker.table", "factorization table of the ten p_ij with recorded constants",
        [](const CheckContext&) {
            require(pluecker::table_divpl_check().size() == 10, "expected ten table rows");
        });
    add("pluecker.divisors", "intersection divisors of the twelve named curves with the pencil",
        [](const CheckContext&) {
            for (const char* name : {"m13", "m15", "m23", "m25", "m34", "m35", "m45", "l1",
                                     "l2", "k12", "k14", "k24"})
                pluecker::curve_intersection(name);
        });
    add("pluecker.worked_k14", "pullback of the pencil to the two components of k14",
        [](const CheckContext&) {
            require(pluecker::component_constants("k14").size() == 2,
                    "k14 should have two components");
        });
    add("pluecker.db", "common divisor of degree 38 with residue five times D_ij",
        [](const CheckContext&) { pluecker::db_decomposition(); });

    // ----- picard: the lattice and the restriction map --------------------
    add("picard.intersection_table", "pairing rules of the ten (-1)-classes",
        [](const CheckContext&) { pic::intersection_table_check(); });
    add("picard.canonical", "(-K)^2 = 5 and (-2K)^2 = 20",
        [](const CheckContext&) {
            pic::PicClass mk = (-1L) * pic::canonical_class();
            require(pic::intersect(mk, mk) == 5, "(-K)^2 != 5");
            pic::PicClass m2k = 2L * mk;
            require(pic::intersect(m2k, m2k) == 20, "(-2K)^2 != 20");
        });
    add("picard.exceptional_sum", "sum of the exceptional classes equals -2K",
        [](const CheckContext&) {
            pic::PicClass sum{};
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j) sum = sum + pic::e(i, j);
            require(sum == (-2L) * pic::canonical_class(), "sum E_ij != -2K");
        });
    add("picard.petersen", "disjoint labels meet once, shared labels are disjoint",
        [](const CheckContext&) {
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j)
                    for (int k = 1; k <= 5; ++k)
                        for (int l = k + 1; l <= 5; ++l) {
                            long v = pic::intersect(pic::e(i, j), pic::e(k, l));
                            bool same = (i == k && j == l);
                            bool share = (i == k || i == l || j == k || j == l);
                            long want = same ? -1 : (share ? 0 : 1);
                            require(v == want, "exceptional pairing rule violated");
                        }
        });
    add("picard.classes", "class arithmetic of the pencil curve in the lattice",
        [](const CheckContext&) { pic::class_checks(); });
    add("picard.root_basis", "K-perp basis with Gram matrix minus the A4 Cartan matrix",
        [](const CheckContext&) { pic::root_basis_check(); });
    add("picard.cartan", "explicit Cartan pairings of the root basis",
        [](const CheckContext&) {
            auto a = pic::root_basis();
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    long want = i == j ? -2 : (i + 1 == j || j + 1 == i ? 1 : 0);
                    require(pic::intersect(a[static_cast<size_t>(i)],
                                           a[static_cast<size_t>(j)]) == want,
                            "Cartan pairing violated");
                }
        });
    add("picard.istar_images", "pinned images of the restriction map in (Z/5)^3",
        [](const CheckContext&) {
            require(pic::istar(1, 5) == pic::F5Vec{1, 0, 0}, "istar(1,5)");
            require(pic::istar(4, 5) == pic::F5Vec{0, 0, 0}, "istar(4,5)");
            require(pic::istar(1, 2) == pic::F5Vec{2, 2, 1}, "istar(1,2)");
            require(pic::istar(3, 4) == pic::F5Vec{1, 1, 2}, "istar(3,4)");
        });
    add("picard.istar_chains", "chain replay, equivariance, faithfulness, index 125",
        [](const CheckContext&) { pic::istar_map(); });

    // ----- fiber: the three special members --------------------------------
    add("fiber.fermat.combinatorics", "375 isolated lines, 50 cones, 15/15 incidence, 27 cubic lines",
        [](const CheckContext&) { fib::fermat_combinatorics(); });
    add("fiber.fermat.cover", "restrictions to sigma = 0 and the Fermat form of the cover",
        [](const CheckContext&) { fib::fermat_fiber_cover(); });
    add("fiber.conifold.nodes", "six extra nodes at phi = 5 sqrt5/2, no unlisted singularities",
        [](const CheckContext&) { fib::conifold_nodes(); });
    add("fiber.conifold.parametrization", "F+(R1,R2) = 0 and icosahedral equivariance",
        [](const CheckContext& ctx) { fib::conifold_parametrization(ctx.seed, 10); });
    add("fiber.conifold.quadric", "the quadric surface, its line family and the vertex polynomial",
        [](const CheckContext&) { fib::quadric_fiber(); });
    add("fiber.conifold.split", "degree 48 = 38 + 5 x 2 splitting of the pulled-back Pluecker forms",
        [](const CheckContext&) {
            auto consts = fib::conifold_pluecker_split();
            require(consts.size() == 10, "expected ten split constants");
        });
    add("fiber.conifold.genus", "750 nodes, Euler characteristic -625, arithmetic genus 626",
        [](const CheckContext&) { fib::conifold_genus_arithmetic(); });
    add("fiber.infinity.factorization", "five-factor form at psi = infinity and q_ij = c_ij n_i n_j",
        [](const CheckContext&) {
            auto consts = fib::psi_infinity_fiber();
            require(consts.size() == 6, "expected six restriction constants");
        });

    return defs;
}

} // namespace

const std::vector<CheckDef>& all_checks() {
    static const std::vector<CheckDef> defs = build_registry();
    return defs;
}

} // namespace dwork
