#pragma once

// Generators for the benchmark families: qnp1, qnp2, their f01/f11
// variants, the four-state example with its eight constraint sets, and the
// clear(x) QNP.

#include <optional>
#include <string>
#include <string_view>

#include "fondplus/frontend.hpp"
#include "fondplus/model.hpp"

namespace fondplus {

enum class Family { qnp1, qnp2, f01_qnp1, f01_qnp2, f11_qnp1, f11_qnp2, figure1, clear };

const char* to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

/// `n` is the size parameter (at least 2), or the variant 1..8 for figure1.
/// It is ignored for clear.
struct FamilySpec {
  Family family;
  int n = 2;
};

/// Variables x1..xn, all positive initially, goal xn=0, atom p initially
/// false. b = <-p; p>, a1 = <p, x1>0; -p, dec(x1)>, and for i > 1
/// ai = <p, x(i-1)=0, xi>0; -p, dec(xi)>.
Qnp gen_qnp1(int n);

/// As qnp1, except that ai for i > 1 also increments x(i-1).
Qnp gen_qnp2(int n);

/// Compact form of t_direct(gen_qnp<k>(n)) with b replaced by the
/// non-deterministic bprime = <-p; oneof(p, -p)>, which belongs to no
/// constraint. The per-variable constraints of the QNP are kept by name.
CompactDocument gen_f01_compact(Family base, int n);

/// gen_f01_compact plus atoms q and r (initially false); each ai gains
/// precondition q and effect -q; c = <-q; r, oneof(q, -q)>,
/// d = <r; q, -r>; and the constraint {bprime}/{}.
CompactDocument gen_f11_compact(Family base, int n);

FondPlusProblem gen_f01(Family base, int n);
FondPlusProblem gen_f11(Family base, int n);

/// States s0, s1, s2, g; a: s0 -> {s1, s2}; b: s1, s2 -> {s0, g}. Variant k
/// attaches constraint set Ck, every A written as a singleton:
/// C1 {}, C2 {a},{b}, C3 {a}, C4 {b}, C5 {a}/{b}, C6 {a},{b}/{a},
/// C7 {b},{a}/{b}, C8 {a}/{b},{b}/{a}.
FondPlusProblem figure1(int variant);

/// At {p}, V {n}, I {-p, n>0}, G {n=0}, a = <p, n>0; -p, dec(n)>, b = <-p; p>.
Qnp clear_qnp();

/// File text for the family in the matching input format: QNP for qnp1,
/// qnp2 and clear; compact for the f01/f11 families; explicit for figure1.
/// Throws ModelError on an out-of-range parameter.
std::string generate(const FamilySpec& spec);

}  // namespace fondplus
