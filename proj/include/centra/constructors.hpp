#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "centra/group.hpp"

namespace centra {

enum class Variant { Plus, Minus };

/// Cyclic group; element i is the i-th power of the generator.
Group construct_cyclic(std::size_t n);

/// A×B; the pair (a, b) has index a·|B| + b.
Group construct_direct_product(const Group& a, const Group& b);

/// Dihedral group of the given (even) order 2m: indices 0..m-1 are r⁰..r^{m-1},
/// indices m..2m-1 are s·r⁰..s·r^{m-1}.
Group construct_dihedral(std::size_t order);

/// Q8 with indices 0..7 = 1, -1, i, -i, j, -j, k, -k.
Group construct_quaternion8();

/// S_k (1 <= k <= 5): permutations of {0..k-1} in lexicographic order; the
/// product σ·τ applies σ first, then τ.
Group construct_symmetric(unsigned k);

/// A4: the even permutations of S4 in lexicographic order.
Group construct_alternating4();

/// Upper unitriangular 3×3 matrices over F_p, p an odd prime; (a, b, c) with
/// a, b above the diagonal and c in the corner has index a·p² + b·p + c.
Group construct_heisenberg(unsigned p);

/// Central product amalgamating the order-p centers of A and B through their
/// minimal non-identity central elements.
Group central_product(const Group& a, const Group& b);

/// Extraspecial group of order p^{2a+1}.
/// Odd p: PLUS is the central product of a Heisenberg groups (exponent p),
/// MINUS replaces one factor by C_{p²} ⋊ C_p (exponent p²).
/// p = 2: PLUS is a central product of a copies of D8, MINUS uses a-1 copies
/// of D8 and one Q8.
Group construct_extraspecial(unsigned p, unsigned a, Variant variant,
                             std::size_t order_cap = default_order_cap());

/// Parses and builds a constructor spec:
///   cyclic:n=<n> | dihedral:n=<2m> | quaternion8 | symmetric:k=<k> | alternating4 |
///   extraspecial:p=<p>,a=<a>,variant=<+|-> | heisenberg:p=<p> | product:<specA>*<specB>
/// Throws ParseError (line 0) for grammar errors and the constructor's own
/// errors for out-of-range parameters.
Group construct_from_spec(std::string_view spec, std::size_t order_cap = default_order_cap());

}  // namespace centra
