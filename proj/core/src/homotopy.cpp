#include "wbary/homotopy.hpp"

#include "wbary/combinatorics.hpp"
#include "wbary/error.hpp"
#include "wbary/euler.hpp"

#include <bit>

namespace wbary {

// ---------------------------------------------------------------------------
// Space expressions

SpaceExpr base(std::string label, BigInt chi) { return SpaceExpr{BaseSpace{std::move(label), std::move(chi)}}; }
SpaceExpr circle() { return SpaceExpr{CircleSpace{}}; }
SpaceExpr point() { return SpaceExpr{PointSpace{}}; }
SpaceExpr wedge(std::vector<SpaceExpr> parts) { return SpaceExpr{WedgeOf{std::move(parts)}}; }
SpaceExpr disjoint_union(std::vector<SpaceExpr> parts) { return SpaceExpr{DisjointUnionOf{std::move(parts)}}; }

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

BigInt chi_of(const SpaceExpr& expr) {
  return std::visit(
      overloaded{
          [](const BaseSpace& b) { return b.chi; },
          [](const PointSpace&) { return BigInt(1); },
          [](const CircleSpace&) { return BigInt(0); },
          [](const WedgeOf& w) {
            if (w.parts.empty()) return BigInt(1);
            BigInt sum = 0;
            for (const auto& part : w.parts) sum += chi_of(part);
            return BigInt(sum - static_cast<std::int64_t>(w.parts.size() - 1));
          },
          [](const DisjointUnionOf& u) {
            BigInt sum = 0;
            for (const auto& part : u.parts) sum += chi_of(part);
            return sum;
          },
      },
      expr.node);
}

std::string to_string(const SpaceExpr& expr) {
  auto join = [](const std::vector<SpaceExpr>& parts, const char* sep, bool paren_unions) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += sep;
      const bool needs_paren = paren_unions && std::holds_alternative<DisjointUnionOf>(parts[i].node);
      out += needs_paren ? "(" + to_string(parts[i]) + ")" : to_string(parts[i]);
    }
    return out;
  };
  return std::visit(overloaded{
                        [](const BaseSpace& b) { return b.label; },
                        [](const PointSpace&) { return std::string("pt"); },
                        [](const CircleSpace&) { return std::string("S1"); },
                        [&](const WedgeOf& w) { return w.parts.empty() ? std::string("pt") : join(w.parts, " v ", true); },
                        [&](const DisjointUnionOf& u) { return join(u.parts, " | ", false); },
                    },
                    expr.node);
}

// ---------------------------------------------------------------------------
// Homotopy descriptors

bool operator==(const Suspension& a, const Suspension& b) {
  if (a.inner == b.inner) return true;
  if (!a.inner || !b.inner) return false;
  return *a.inner == *b.inner;
}

HomotopyDescriptor contractible() { return HomotopyDescriptor{Contractible{}}; }
HomotopyDescriptor bary(std::int64_t n, SpaceExpr space) {
  return HomotopyDescriptor{Bary{n, std::move(space)}};
}
HomotopyDescriptor suspension(HomotopyDescriptor inner) {
  return HomotopyDescriptor{Suspension{std::make_shared<const HomotopyDescriptor>(std::move(inner))}};
}

BigInt chi_of_descriptor(const HomotopyDescriptor& descriptor) {
  return std::visit(overloaded{
                        [](const Contractible&) { return BigInt(1); },
                        [](const Bary& b) {
                          if (b.n <= 0) return BigInt(0);
                          return BigInt(1 - ext_binomial(b.n - chi_of(b.space), b.n));
                        },
                        [](const Suspension& s) { return chi_suspension(chi_of_descriptor(*s.inner), 1); },
                    },
                    descriptor.node);
}

std::string to_string(const HomotopyDescriptor& descriptor) {
  return std::visit(overloaded{
                        [](const Contractible&) { return std::string("contractible"); },
                        [](const Bary& b) { return "B_" + std::to_string(b.n) + "(" + to_string(b.space) + ")"; },
                        [](const Suspension& s) { return "susp(" + to_string(*s.inner) + ")"; },
                    },
                    descriptor.node);
}

// ---------------------------------------------------------------------------
// Conic decomposition

std::string to_string(const ConicPiece& piece) {
  std::string out = "B_" + std::to_string(piece.n) + "(X";
  for (std::uint64_t m = piece.singular_mask; m != 0; m &= m - 1) {
    out += ",p" + std::to_string(std::countr_zero(m) + 1);
  }
  return out + ")";
}

std::vector<ConicPiece> colimit_pieces(const ValidatedInstance& instance) {
  for (const Rational& w : instance.weights()) {
    if (w >= 1) {
      throw Error(ErrorCode::WeightOutOfRange,
                  "the conic decomposition needs every weight below 1, got " + to_string(w));
    }
  }
  std::vector<ConicPiece> pieces;
  for (const SubsetWeight subset : enumerate_subset_weights(instance)) {
    const BigInt n = floor_rational(instance.rho() - subset.total);
    if (n < 0) continue;
    pieces.push_back({to_int64(n), subset.mask});
  }
  return pieces;
}

bool piece_includes(const ConicPiece& a, const ConicPiece& b) {
  if (a.n > b.n) return false;
  const auto outside = std::popcount(a.singular_mask & ~b.singular_mask);
  return outside <= b.n - a.n;
}

std::vector<ConicPiece> maximal_pieces(const ValidatedInstance& instance) {
  const std::vector<ConicPiece> pieces = colimit_pieces(instance);
  std::vector<ConicPiece> maximal;
  for (const ConicPiece& candidate : pieces) {
    bool dominated = false;
    for (const ConicPiece& other : pieces) {
      if (other != candidate && piece_includes(candidate, other)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(candidate);
  }
  return maximal;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

struct Split {
  std::int64_t n;   // floor(rho)
  Rational epsilon; // rho - floor(rho)
};

Split split_rho(const Rational& rho) {
  const BigInt n = floor_rational(rho);
  return {to_int64(n), rho - Rational(n)};
}

void require_weights_at_most_one(const ValidatedInstance& instance) {
  for (const Rational& w : instance.weights()) {
    if (w > 1) {
      throw Error(ErrorCode::OutOfScope,
                  "homotopy types are only classified for weights <= 1, got " + to_string(w));
    }
  }
}

enum class TwoPointCase { SumBelowEps = 1, BothBelowEps, OneBelowEps, BothAboveEps, SumAboveOnePlusEps };

// Weights are sorted ascending by validation; the five cases are exhaustive
// and pairwise disjoint for 0 < w1 <= w2 <= 1.
TwoPointCase two_point_case(const ValidatedInstance& instance, const Rational& epsilon) {
  const Rational& w1 = instance.weights()[0];
  const Rational& w2 = instance.weights()[1];
  const Rational sum = w1 + w2;
  if (sum <= epsilon) return TwoPointCase::SumBelowEps;
  if (w1 <= epsilon && w2 <= epsilon) return TwoPointCase::BothBelowEps;
  if (w1 <= epsilon) return TwoPointCase::OneBelowEps;
  if (sum <= 1 + epsilon) return TwoPointCase::BothAboveEps;
  return TwoPointCase::SumAboveOnePlusEps;
}

}  // namespace

HomotopyDescriptor classify_r1(const ValidatedInstance& instance) {
  if (instance.r() != 1) throw Error(ErrorCode::OutOfScope, "classify_r1 needs exactly one singular point");
  if (instance.space().components.size() > 1) throw Error(ErrorCode::OutOfScope, "classify_r1 needs X connected");
  require_weights_at_most_one(instance);
  const auto [n, epsilon] = split_rho(instance.rho());
  const BigInt reduced = floor_rational(instance.rho() - instance.weights()[0]);
  if (reduced < n) return bary(n, base("X", instance.chi_c()));
  return contractible();
}

HomotopyDescriptor classify_r2_connected(const ValidatedInstance& instance) {
  if (instance.r() != 2) throw Error(ErrorCode::OutOfScope, "classify_r2_connected needs two singular points");
  if (instance.space().components.size() > 1) throw Error(ErrorCode::OutOfScope, "classify_r2_connected needs X connected");
  require_weights_at_most_one(instance);
  const auto [n, epsilon] = split_rho(instance.rho());
  const SpaceExpr x = base("X", instance.chi_c());
  switch (two_point_case(instance, epsilon)) {
    case TwoPointCase::SumBelowEps:
    case TwoPointCase::OneBelowEps:
      return contractible();
    case TwoPointCase::BothBelowEps:
      return suspension(bary(n, wedge({x, circle()})));
    case TwoPointCase::BothAboveEps:
      return bary(n, wedge({x, circle()}));
    case TwoPointCase::SumAboveOnePlusEps:
      return bary(n, x);
  }
  throw Error(ErrorCode::OutOfScope, "unreachable two-point case");
}

HomotopyDescriptor classify_r2_two_components(const ValidatedInstance& instance, Placement placement,
                                              const BigInt& chi_a1, const BigInt& chi_a2) {
  if (instance.r() != 2) throw Error(ErrorCode::OutOfScope, "two-component classification needs r = 2");
  if (chi_a1 + chi_a2 != instance.chi_c()) {
    throw Error(ErrorCode::InconsistentComponents, "chi(A1) + chi(A2) = " + BigInt(chi_a1 + chi_a2).str() +
                                                       " but chi_c = " + instance.chi_c().str());
  }
  require_weights_at_most_one(instance);
  const auto [n, epsilon] = split_rho(instance.rho());
  const SpaceExpr a1 = base("A1", chi_a1);
  const SpaceExpr a2 = base("A2", chi_a2);
  // The quotient X / (p1 ~ p2) for the two placements.
  const SpaceExpr identified = placement == Placement::OneEach
                                   ? wedge({a1, a2})
                                   : disjoint_union({wedge({a1, circle()}), a2});
  switch (two_point_case(instance, epsilon)) {
    case TwoPointCase::SumBelowEps:
    case TwoPointCase::OneBelowEps:
      return contractible();
    case TwoPointCase::BothBelowEps:
      return suspension(bary(n, identified));
    case TwoPointCase::BothAboveEps:
      return bary(n, identified);
    case TwoPointCase::SumAboveOnePlusEps:
      return bary(n, disjoint_union({a1, a2}));
  }
  throw Error(ErrorCode::OutOfScope, "unreachable two-point case");
}

BigInt chi_disjoint_union_decomposition(const BigInt& chi_a, const BigInt& chi_b, std::int64_t k) {
  if (k < 2) throw Error(ErrorCode::OutOfScope, "the disjoint-union decomposition needs k >= 2");
  auto chi_bary = [](std::int64_t n, const BigInt& chi) {
    return chi_of_descriptor(bary(n, base("Y", chi)));
  };
  auto compact = [](BigInt chi) { return JoinFactor{std::move(chi), true}; };

  BigInt total = chi_bary(k, chi_a) + chi_suspension(chi_bary(k - 1, chi_a), 1) + chi_bary(k, chi_b) +
                 chi_suspension(chi_bary(k - 1, chi_b), 1);
  for (std::int64_t l = 1; l <= k - 1; ++l) {
    total += chi_join(compact(chi_bary(k - l, chi_a)), compact(chi_bary(l, chi_b)));
  }
  for (std::int64_t l = 2; l <= k - 1; ++l) {
    total += chi_suspension(chi_join(compact(chi_bary(k - l, chi_a)), compact(chi_bary(l - 1, chi_b))), 1);
  }
  // 2k + 1 summands share one wedge point.
  return total - 2 * k;
}

}  // namespace wbary
