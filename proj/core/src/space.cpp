#include "wbary/space.hpp"

#include "wbary/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace wbary {

std::string_view to_string(SpaceKind kind) noexcept {
  switch (kind) {
    case SpaceKind::Compact: return "compact";
    case SpaceKind::LocallyClosedBasic: return "lc";
    case SpaceKind::InteriorEvenDimManifold: return "even-interior";
    case SpaceKind::UnionOfBasic: return "union";
  }
  return "compact";
}

std::optional<SpaceKind> space_kind_from_string(std::string_view name) noexcept {
  if (name == "compact") return SpaceKind::Compact;
  if (name == "lc") return SpaceKind::LocallyClosedBasic;
  if (name == "even-interior") return SpaceKind::InteriorEvenDimManifold;
  if (name == "union") return SpaceKind::UnionOfBasic;
  return std::nullopt;
}

ValidatedInstance validate(const ProblemInstance& instance) {
  const std::size_t r = instance.weights.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (instance.weights[i] <= 0) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "weight " + std::to_string(i + 1) + " is " + to_string(instance.weights[i]));
    }
  }
  if (instance.rho <= 0) {
    throw Error(ErrorCode::NonPositiveRho, "rho is " + to_string(instance.rho));
  }
  if (r > kMaxSingularPoints) {
    throw Error(ErrorCode::TooManySingularPoints,
                std::to_string(r) + " singular points exceed the cap of " +
                    std::to_string(kMaxSingularPoints));
  }

  const auto& components = instance.space.components;
  if (!components.empty()) {
    BigInt chi_sum = 0;
    std::vector<int> owner(r, 0);
    for (const auto& component : components) {
      chi_sum += component.chi_c;
      for (std::size_t index : component.singular_indices) {
        if (index >= r) {
          throw Error(ErrorCode::InconsistentComponents,
                      "singular index " + std::to_string(index + 1) + " out of range");
        }
        if (++owner[index] > 1) {
          throw Error(ErrorCode::InconsistentComponents,
                      "singular point " + std::to_string(index + 1) + " lies in two components");
        }
      }
    }
    if (chi_sum != instance.chi_c) {
      throw Error(ErrorCode::InconsistentComponents,
                  "component chi_c values sum to " + chi_sum.str() + ", not " + instance.chi_c.str());
    }
    if (std::find(owner.begin(), owner.end(), 0) != owner.end()) {
      throw Error(ErrorCode::InconsistentComponents,
                  "every singular point must belong to exactly one component");
    }
  }

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.weights[a] < instance.weights[b];
  });
  std::vector<std::size_t> sorted_position(r);
  for (std::size_t pos = 0; pos < r; ++pos) sorted_position[order[pos]] = pos;

  ValidatedInstance out;
  out.chi_c_ = instance.chi_c;
  out.rho_ = instance.rho;
  out.space_ = instance.space;
  out.weights_.reserve(r);
  for (std::size_t pos = 0; pos < r; ++pos) out.weights_.push_back(instance.weights[order[pos]]);
  out.original_index_ = order;
  for (auto& component : out.space_.components) {
    for (auto& index : component.singular_indices) index = sorted_position[index];
    std::sort(component.singular_indices.begin(), component.singular_indices.end());
  }
  return out;
}

ProblemInstance ValidatedInstance::to_problem() const {
  return ProblemInstance{chi_c_, weights_, rho_, space_};
}

std::size_t SubsetWeight::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask));
}

std::vector<std::size_t> SubsetWeight::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

SubsetRange::SubsetRange(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.size() > kMaxSingularPoints) {
    throw Error(ErrorCode::TooManySingularPoints, "subset enumeration is capped at " +
                                                      std::to_string(kMaxSingularPoints) + " points");
  }
}

SubsetWeight SubsetRange::iterator::operator*() const {
  SubsetWeight out{mask_, Rational(0)};
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.total += (*weights_)[static_cast<std::size_t>(std::countr_zero(m))];
  }
  return out;
}

SubsetRange enumerate_subset_weights(const ValidatedInstance& instance) {
  return SubsetRange(instance.weights());
}

}  // namespace wbary
