#pragma once

#include "leibconf/report.hpp"
#include "leibconf/sesq.hpp"
#include "leibconf/shuffles.hpp"

namespace leibconf {

// Finitely supported graded module. The flattened module concatenates the
// component bases in increasing degree order; basis names must stay distinct
// across components.
struct GradedModule {
    std::map<int, ConfModule> components;
    ConfModule flat;
    std::vector<int> degree_of;  // per flat basis index

    GradedModule() = default;
    GradedModule(std::string name, std::map<int, ConfModule> comps);

    int offset_of(int degree) const;  // -1 if degree absent
    // same underlying basis with all degrees moved up by `by`
    GradedModule suspended(int by) const;

    friend bool operator==(const GradedModule& a, const GradedModule& b) {
        return a.components == b.components && a.flat == b.flat;
    }
    friend bool operator!=(const GradedModule& a, const GradedModule& b) { return !(a == b); }
};

// The tower of operations of a homotopy structure: one sesquilinear map per
// arity, finitely many nonzero. Unshifted towers carry degree k-2 in arity k;
// shifted towers carry degree -1 throughout. Homogeneity of every table entry
// is enforced at construction.
struct HomotopyOps {
    enum class Flavor { unshifted, shifted };
    Flavor flavor = Flavor::unshifted;
    GradedModule mod;
    std::map<int, SesqMap> ops;

    friend bool operator==(const HomotopyOps& a, const HomotopyOps& b) {
        return a.flavor == b.flavor && a.mod == b.mod && a.ops == b.ops;
    }
    friend bool operator!=(const HomotopyOps& a, const HomotopyOps& b) { return !(a == b); }
};

HomotopyOps make_homotopy_ops(HomotopyOps::Flavor flavor, GradedModule mod,
                              std::map<int, SesqMap> ops);

// shape for the arity-k operation of the given flavor
SesqMap homotopy_op_shape(const GradedModule& mod, int arity, HomotopyOps::Flavor flavor);

// check one table entry pattern for homogeneity; used by validating ctors
void require_homogeneous(const GradedModule& mod, const SesqMap& map);

// The single summand family of the structure identities: outer composed with
// inner at insertion slot i (1-based), prefix/inner-block arguments permuted
// by the shuffle; evaluated on a flat basis tuple. Output variables l1..l_{n-1}
// where n = tuple length; tuple position j (0-based, j < n-1) carries l_{j+1}
// and the final position carries none. The combined parameter of the inner
// insertion is the sum of the inner block's variables plus its anchor's.
ModValue insertion_composite(const SesqMap& outer, const SesqMap& inner, int i,
                             const std::vector<int>& sigma, const std::vector<int>& tuple);

// Full structure-identity residual at level n on a flat basis tuple: the
// shuffle sum over k+l = n+1 with signs eps(sigma) * sgn(sigma) *
// (-1)^{(k-i-1)(l-1)} * (-1)^{l(|x_sigma(1)|+...+|x_sigma(i-1)|)}. Zero on
// every tuple for every n iff the tower is a homotopy structure.
ModValue leibnizator_sum(const HomotopyOps& ops, int n, const std::vector<int>& tuple);

CheckReport verify_leib_infty(const HomotopyOps& ops, int n_max = 4, int jobs = 1);

// Degree suspension between the two flavors. The arity-k table picks up
// (-1)^{k(k-1)/2} together with the sign of moving the k desuspensions past
// the arguments, (-1)^{sum_u (k-u) |h_u|}; unshift(shift(ops)) == ops.
HomotopyOps shift(const HomotopyOps& unshifted);
HomotopyOps unshift(const HomotopyOps& shifted);

// An element of the convolution graded Lie algebra on a (shifted) graded
// module: a finite sum of conformal sesquilinear pieces by arity, all of one
// degree.
struct ConvElem {
    int degree = 0;
    GradedModule mod;
    std::map<int, SesqMap> pieces;

    bool is_zero() const;
    friend bool operator==(const ConvElem& a, const ConvElem& b) {
        return a.degree == b.degree && a.mod == b.mod && a.pieces == b.pieces;
    }
};

ConvElem make_conv_elem(GradedModule mod, int degree, std::map<int, SesqMap> pieces);
ConvElem conv_zero(GradedModule mod, int degree);
ConvElem to_conv(const HomotopyOps& shifted);
ConvElem conv_add(const ConvElem& a, const ConvElem& b);
ConvElem conv_scaled(const ConvElem& a, const Rat& c);

// one composition piece: outer_k ◊ inner_l, arity k+l-1; the sign of each
// summand is eps(sigma) * (-1)^{deg(inner) * (prefix degrees)}
SesqMap diamond_piece(const GradedModule& mod, const SesqMap& outer, const SesqMap& inner);

ConvElem diamond(const ConvElem& a, const ConvElem& b, int max_arity = 8);
// [[a, b]] = a ◊ b - (-1)^{deg a deg b} b ◊ a
ConvElem gla_bracket(const ConvElem& a, const ConvElem& b, int max_arity = 8);

// sum_{k+l = n+1} rho_k ◊ rho_l = 0 for every n <= n_max
bool is_maurer_cartan(const HomotopyOps& shifted, int n_max = 4);

// coboundary of the homotopy-structure complex: for phi of cochain degree n
// (stored convolution degree -(n-1)), delta(phi) = (-1)^{n-1} [[rho, phi]]
ConvElem linfty_coboundary(const HomotopyOps& shifted, const ConvElem& phi, int max_arity = 8);

// reinterpret a sesquilinear table as a piece on a graded module whose flat
// module matches the table's sources/target, with the stated degree label
SesqMap with_degree(SesqMap map, int degree);

// lift a table between single components into the flat module; the piece's
// sources must be the components at `source_degrees` and its target the
// component at `target_degree`
SesqMap lift_to_flat(const GradedModule& mod, const SesqMap& piece,
                     const std::vector<int>& source_degrees, int target_degree, int degree_label);

// a plain algebra as a tower concentrated in degree 0 (rho_2 = bracket)
HomotopyOps degree0_tower(const ConfModule& mod, const SesqMap& bracket);

}  // namespace leibconf
