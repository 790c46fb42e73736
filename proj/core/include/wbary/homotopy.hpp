#pragma once

// Homotopy types of weighted barycenter spaces in the cases where they are
// known exactly (at most two singular points, X connected or with two
// components), the decomposition of B_rho into conic subspaces, and Euler
// characteristics of the symbolic descriptions.

#include "wbary/exact.hpp"
#include "wbary/space.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace wbary {

// ---------------------------------------------------------------------------
// Space expressions

struct SpaceExpr;

struct BaseSpace {
  std::string label;  // "X", "A1", "A2"
  BigInt chi;
  friend bool operator==(const BaseSpace&, const BaseSpace&) = default;
};
struct PointSpace {
  friend bool operator==(const PointSpace&, const PointSpace&) = default;
};
struct CircleSpace {
  friend bool operator==(const CircleSpace&, const CircleSpace&) = default;
};
struct WedgeOf {
  std::vector<SpaceExpr> parts;
  friend bool operator==(const WedgeOf&, const WedgeOf&) = default;
};
struct DisjointUnionOf {
  std::vector<SpaceExpr> parts;
  friend bool operator==(const DisjointUnionOf&, const DisjointUnionOf&) = default;
};

struct SpaceExpr {
  std::variant<BaseSpace, PointSpace, CircleSpace, WedgeOf, DisjointUnionOf> node;
  friend bool operator==(const SpaceExpr&, const SpaceExpr&) = default;
};

SpaceExpr base(std::string label, BigInt chi);
SpaceExpr circle();
SpaceExpr point();
SpaceExpr wedge(std::vector<SpaceExpr> parts);
SpaceExpr disjoint_union(std::vector<SpaceExpr> parts);

/// Wedge: sum of chi minus (count - 1). Disjoint union: sum of chi.
BigInt chi_of(const SpaceExpr& expr);

/// "X", "S1", "pt", "X v S1", "A1 v S1 | A2". Union binds looser than wedge.
std::string to_string(const SpaceExpr& expr);

// ---------------------------------------------------------------------------
// Homotopy descriptors

struct HomotopyDescriptor;

struct Contractible {
  friend bool operator==(const Contractible&, const Contractible&) = default;
};
/// B_n(space). n = 0 is the empty space.
struct Bary {
  std::int64_t n = 0;
  SpaceExpr space;
  friend bool operator==(const Bary&, const Bary&) = default;
};
struct Suspension {
  std::shared_ptr<const HomotopyDescriptor> inner;
  friend bool operator==(const Suspension& a, const Suspension& b);
};

struct HomotopyDescriptor {
  std::variant<Contractible, Bary, Suspension> node;
  friend bool operator==(const HomotopyDescriptor&, const HomotopyDescriptor&) = default;
};

HomotopyDescriptor contractible();
HomotopyDescriptor bary(std::int64_t n, SpaceExpr space);
HomotopyDescriptor suspension(HomotopyDescriptor inner);

/// Contractible: 1. B_n(S): 1 - C(n - chi(S), n), or 0 for n = 0.
/// Suspension: 2 - chi(inner).
BigInt chi_of_descriptor(const HomotopyDescriptor& descriptor);

/// "contractible", "B_<n>(<expr>)", "susp(<desc>)".
std::string to_string(const HomotopyDescriptor& descriptor);

// ---------------------------------------------------------------------------
// Conic decomposition (all weights < 1)

/// B_n(X, p_i : i in I): at most n generic points plus mass on the p_i.
struct ConicPiece {
  std::int64_t n = 0;
  std::uint64_t singular_mask = 0;
  friend bool operator==(const ConicPiece&, const ConicPiece&) = default;
  friend auto operator<=>(const ConicPiece&, const ConicPiece&) = default;
};

std::string to_string(const ConicPiece& piece);

/// One piece B_{floor(rho - w_I)}(X, p_I) per subset I with w_I <= rho, in
/// binary-counter order. Throws Error(WeightOutOfRange) if some w_i >= 1.
std::vector<ConicPiece> colimit_pieces(const ValidatedInstance& instance);

/// a is contained in b: a.n <= b.n and at most b.n - a.n of a's singular
/// points lie outside b's.
bool piece_includes(const ConicPiece& a, const ConicPiece& b);

/// The inclusion-maximal colimit pieces, in colimit_pieces order.
std::vector<ConicPiece> maximal_pieces(const ValidatedInstance& instance);

// ---------------------------------------------------------------------------
// Classification

/// r = 1, X connected, 0 < w_1 <= 1. Throws Error(OutOfScope) otherwise.
HomotopyDescriptor classify_r1(const ValidatedInstance& instance);

/// r = 2, X connected, 0 < w_1 <= w_2 <= 1.
HomotopyDescriptor classify_r2_connected(const ValidatedInstance& instance);

enum class Placement { OneEach, BothInFirst };

/// X = A1 u A2 with r = 2; OneEach puts p_1 in A1 and p_2 in A2, BothInFirst
/// puts both in A1. chi_a1 + chi_a2 must equal the instance's chi_c.
HomotopyDescriptor classify_r2_two_components(const ValidatedInstance& instance, Placement placement,
                                              const BigInt& chi_a1, const BigInt& chi_a2);

/// Euler characteristic of B_k(A u B) read off the wedge decomposition of
/// its homology: B_k A, S B_{k-1} A, B_k B, S B_{k-1} B, the joins
/// B_{k-l} A * B_l B, their suspended neighbours, and the 2k wedge points.
/// Requires k >= 2.
BigInt chi_disjoint_union_decomposition(const BigInt& chi_a, const BigInt& chi_b, std::int64_t k);

}  // namespace wbary
