#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sylint/arith.hpp"

namespace sylint::lie {

using arith::FactoredInteger;
using arith::Int;
using arith::Rat;

enum class Family {
  Linear,
  Unitary,
  Symplectic,
  OrthogonalOdd,
  OrthogonalPlus,
  OrthogonalMinus,
  G2,
  F4,
  E6,
  TwistedE6,
  E7,
  E8,
  ThreeD4,
  TwoB2,
  TwoG2,
  TwoF4,
  Alternating,
  Sporadic,
};

bool is_classical(Family f);
bool is_exceptional(Family f);
std::string family_token(Family f);

/// Symbolic identifier for a simple group: family plus (n, q), or the
/// degree for alternating groups, or a name for sporadic groups.
struct GroupId {
  Family family;
  unsigned n = 0;           // dimension (classical) / degree (alternating)
  unsigned long q = 0;      // field size; 0 for alternating/sporadic
  std::string sporadic_name;

  unsigned long r = 0;      // defining characteristic (q = r^f)
  unsigned f = 0;

  std::string name() const;
  bool operator==(const GroupId&) const = default;
  bool operator<(const GroupId& o) const;
};

/// Validating constructors; throw std::domain_error naming the violated
/// constraint. The classical parameter ranges follow the admissible list
/// (exceptional isomorphisms removed): L_n n>=2 with q>=5 if n=2,
/// U_n n>=3 with (n,q) != (3,2), PSp_n n>=4 even with (n,q) != (4,2),
/// Omega_n n>=7 odd with q odd, POmega_n^+- n>=8 even.
GroupId make_group(Family fam, unsigned n, unsigned long q);
GroupId alternating_group(unsigned n);
GroupId sporadic_group(const std::string& name);

/// Token parser for the CLI: "L", "U", "Sp", "O", "O+", "O-", "G2", "F4",
/// "E6", "2E6", "E7", "E8", "3D4", "2B2", "2G2", "2F4"; "L4" and "A5" style
/// tokens carry the dimension/degree.
std::optional<GroupId> parse_group_token(const std::string& token,
                                         unsigned long q);

/// The four groups where the formula-level Q_r equality is not available:
/// Sp4(2)', G2(2)', 2G2(3)', 2F4(2)'.
bool zenkov_excluded(const GroupId& G);

/// True for the parameter values where the named group of Lie type is the
/// derived subgroup of the formula group (same four cases as above).
bool derived_subgroup_case(const GroupId& G);

struct GroupOrderData {
  FactoredInteger order;
  FactoredInteger borel_order;      // |N_G(H_r)|
  FactoredInteger unipotent_order;  // |H_r|
  unsigned d = 1;                   // centre gcd, e.g. (n, q-1)
  std::vector<Int> pi;              // primes dividing |G|
  std::vector<Int> pi_prime;        // pi without the defining characteristic
  bool borel_paper_verbatim = true; // false where no proof line states |B|
};

/// Exact factored order data; throws for sporadic groups (their data is
/// ingested, never computed).
GroupOrderData group_order(const GroupId& G);

/// p-part of |G|; requires p in pi(G).
Int sylow_order(const GroupId& G, const Int& p);

/// Family-specific closed form for |H_p| where a case-by-case proof states
/// one (linear/unitary/symplectic/orthogonal congruence cases, plus the
/// 2E6/F4/G2 two-part formulas). Empty when no structured form applies.
std::optional<Int> structured_sylow_order(const GroupId& G, const Int& p);

/// Q_r(G) = 1 - |H_r||N_G(H_r)|/|G| for groups of Lie type outside the
/// excluded list.
Rat qr_defining(const GroupId& G);

struct MersenneL2 {
  Rat q2;                 // 1/2 + (q+3)/(2q(q-1))
  Int regular_orbits;     // s = (q-3)/4
};
/// L2(q) with q a Mersenne prime: exact Q_2 and the regular orbit count.
MersenneL2 l2_mersenne_q2(unsigned long q);

}  // namespace sylint::lie
