#include "wbary/euler.hpp"

#include "wbary/combinatorics.hpp"
#include "wbary/error.hpp"

#include <algorithm>

namespace wbary {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Direct: return "direct";
    case Method::Strata: return "strata";
    case Method::Series: return "series";
  }
  return "direct";
}

namespace {

ChiResult finish(BigInt chi, Method method, std::vector<SubsetTerm> terms) {
  ChiResult out;
  out.degree = 1 - chi;
  out.chi_c = std::move(chi);
  out.method = method;
  out.terms = std::move(terms);
  return out;
}

}  // namespace

ChiResult chi_c_direct(const ValidatedInstance& instance) {
  const BigInt shift = BigInt(static_cast<std::int64_t>(instance.r())) - instance.chi_c();
  BigInt sum = 0;
  std::vector<SubsetTerm> terms;
  for (const SubsetWeight subset : enumerate_subset_weights(instance)) {
    const BigInt n = floor_rational(instance.rho() - subset.total);
    if (n < 0) continue;
    BigInt term = ext_binomial(n + shift, to_int64(n));
    if (subset.sign() < 0) term = -term;
    sum += term;
    terms.push_back({subset.mask, std::move(term)});
  }
  return finish(1 - sum, Method::Direct, std::move(terms));
}

ChiResult chi_c_strata(const ValidatedInstance& instance) {
  // B_rho is the disjoint union, over subsets I with w_I <= rho, of the
  // configurations containing exactly the singular points of I. Each such
  // piece is itself cut into locally closed layers by the number i of
  // generic points, and chi_c is added layer by layer.
  const BigInt complement_chi = chi_c_complement(instance.chi_c(), static_cast<std::int64_t>(instance.r()));

  // chi_c of B_i(Y) - B_{i-1}(Y) for Y = X - Q_r, i >= 1.
  auto layer = [&](std::int64_t i) { return -ext_binomial(BigInt(i - 1) - complement_chi, i); };

  BigInt total = 0;
  std::vector<SubsetTerm> terms;
  for (const SubsetWeight subset : enumerate_subset_weights(instance)) {
    const BigInt floor_value = floor_rational(instance.rho() - subset.total);
    if (floor_value < 0) continue;
    const std::int64_t n = to_int64(floor_value);
    const std::size_t k = subset.size();

    BigInt stratum = 0;
    if (k == 0) {
      // B_n(X - Q_r); empty when n = 0.
      for (std::int64_t i = 1; i <= n; ++i) stratum += layer(i);
    } else {
      // Open (k-1)-simplex spanned by the singular points, then the layers
      // joined to it; joining flips the sign by (-1)^k.
      const int sign = (k % 2 == 0) ? 1 : -1;
      stratum = -sign;
      for (std::int64_t i = 1; i <= n; ++i) stratum += sign * layer(i);
    }
    if (stratum == 0 && k == 0 && n == 0) continue;
    total += stratum;
    terms.push_back({subset.mask, std::move(stratum)});
  }
  return finish(std::move(total), Method::Strata, std::move(terms));
}

namespace {

ValidatedInstance drop_weights(const ValidatedInstance& instance, auto&& drop, bool remove_points) {
  ProblemInstance out = instance.to_problem();
  const std::size_t r = instance.r();
  std::vector<std::size_t> new_index(r, r);
  std::vector<Rational> kept;
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (drop(instance.weights()[i])) {
      ++dropped;
    } else {
      new_index[i] = kept.size();
      kept.push_back(instance.weights()[i]);
    }
  }
  if (dropped == 0) return instance;

  out.weights = std::move(kept);
  if (remove_points) out.chi_c -= dropped;
  for (auto& component : out.space.components) {
    std::vector<std::size_t> indices;
    for (std::size_t index : component.singular_indices) {
      if (new_index[index] == r) {
        if (remove_points) component.chi_c -= 1;
      } else {
        indices.push_back(new_index[index]);
      }
    }
    component.singular_indices = std::move(indices);
  }
  return validate(out);
}

}  // namespace

ValidatedInstance normalize_drop_heavy(const ValidatedInstance& instance) {
  const Rational& rho = instance.rho();
  return drop_weights(instance, [&](const Rational& w) { return w > rho; }, true);
}

ValidatedInstance normalize_drop_unit_weights(const ValidatedInstance& instance) {
  return drop_weights(instance, [](const Rational& w) { return w == 1; }, false);
}

bool topological_chi_applicable(const ValidatedInstance& instance) {
  const auto& weights = instance.weights();
  if (std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return w > 1; })) {
    return false;
  }
  const SpaceDescriptor& space = instance.space();
  switch (space.kind) {
    case SpaceKind::Compact:
    case SpaceKind::InteriorEvenDimManifold:
      return true;
    case SpaceKind::LocallyClosedBasic:
      return false;
    case SpaceKind::UnionOfBasic:
      return !space.components.empty() &&
             std::all_of(space.components.begin(), space.components.end(),
                         [](const ComponentSpec& c) { return c.is_compact || c.even_dim_interior; });
  }
  return false;
}

BigInt chi_c_complement(const BigInt& chi_c, std::int64_t r) { return chi_c - r; }

BigInt chi_join(const JoinFactor& x, const JoinFactor& y) {
  if (!x.is_compact && !y.is_compact) return -(x.chi_c * y.chi_c);
  return x.chi_c + y.chi_c - x.chi_c * y.chi_c;
}

BigInt chi_suspension(const BigInt& chi_c, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::OutOfScope, "suspension order must be non-negative");
  return k % 2 == 0 ? chi_c : BigInt(2 - chi_c);
}

BigInt chi_quotient_wedge(std::span<const ComponentSpec> components, std::size_t r) {
  std::vector<int> owner(r, 0);
  BigInt chi_total = 0;
  for (const auto& component : components) {
    chi_total += component.chi_c;
    for (std::size_t index : component.singular_indices) {
      if (index >= r || ++owner[index] > 1) {
        throw Error(ErrorCode::InconsistentComponents, "singular indices must partition 0..r-1");
      }
    }
  }
  if (std::find(owner.begin(), owner.end(), 0) != owner.end()) {
    throw Error(ErrorCode::InconsistentComponents, "singular indices must partition 0..r-1");
  }

  // Wedge summands: Abar/dA for every non-compact component (chi_c + 1),
  // every compact component carrying singular points, and circles: a_i per
  // non-compact component, b_j - 1 per compact one. Compact components
  // without singular points stay as disjoint pieces.
  BigInt wedge_chi = 0;
  std::int64_t summands = 0;
  std::int64_t circles = 0;
  BigInt detached_chi = 0;
  for (const auto& component : components) {
    const auto points = static_cast<std::int64_t>(component.singular_indices.size());
    if (!component.is_compact) {
      wedge_chi += component.chi_c + 1;
      ++summands;
      circles += points;
    } else if (points > 0) {
      wedge_chi += component.chi_c;
      ++summands;
      circles += points - 1;
    } else {
      detached_chi += component.chi_c;
    }
  }
  const std::int64_t pieces = summands + circles;
  // An empty wedge is the basepoint alone.
  const BigInt wedge = pieces == 0 ? BigInt(1) : BigInt(wedge_chi - (pieces - 1));
  const BigInt bookkeeping = wedge + detached_chi;

  const BigInt closed_form = chi_total - static_cast<std::int64_t>(r) + 1;
  if (bookkeeping != closed_form) {
    throw std::logic_error("chi_quotient_wedge: wedge bookkeeping " + bookkeeping.str() +
                           " disagrees with chi_c - r + 1 = " + closed_form.str());
  }
  return bookkeeping;
}

}  // namespace wbary
