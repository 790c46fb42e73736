#pragma once

// Problem instances: the Euler characteristic with compact supports of the
// underlying space X, the weights of the singular points, and the threshold
// rho. Everything downstream consumes a ValidatedInstance.

#include "wbary/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string_view>
#include <vector>

namespace wbary {

/// Largest number of singular points the subset sums will enumerate.
inline constexpr std::size_t kMaxSingularPoints = 30;

enum class SpaceKind {
  Compact,
  LocallyClosedBasic,
  InteriorEvenDimManifold,
  UnionOfBasic,
};

std::string_view to_string(SpaceKind kind) noexcept;
std::optional<SpaceKind> space_kind_from_string(std::string_view name) noexcept;

/// One connected component of a disconnected X. Singular indices are
/// zero-based positions into the instance's weight list.
struct ComponentSpec {
  BigInt chi_c;
  bool is_compact = true;
  /// Interior of an even dimensional manifold with boundary.
  bool even_dim_interior = false;
  std::vector<std::size_t> singular_indices;

  friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::Compact;
  std::vector<ComponentSpec> components;

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

struct ProblemInstance {
  BigInt chi_c;
  std::vector<Rational> weights;
  Rational rho;
  SpaceDescriptor space;
};

class ValidatedInstance;
ValidatedInstance validate(const ProblemInstance& instance);

/// An instance whose invariants have been checked. Weights are sorted
/// ascending (stable); original_index(i) recovers the caller's position of
/// the i-th weight, and component singular indices refer to sorted positions.
class ValidatedInstance {
 public:
  const BigInt& chi_c() const noexcept { return chi_c_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& rho() const noexcept { return rho_; }
  const SpaceDescriptor& space() const noexcept { return space_; }
  std::size_t r() const noexcept { return weights_.size(); }
  std::size_t original_index(std::size_t i) const { return original_index_.at(i); }

  /// The instance in canonical (sorted) form; validating it again returns an
  /// equal instance.
  ProblemInstance to_problem() const;

  friend bool operator==(const ValidatedInstance& a, const ValidatedInstance& b) {
    return a.chi_c_ == b.chi_c_ && a.weights_ == b.weights_ && a.rho_ == b.rho_ &&
           a.space_ == b.space_;
  }

 private:
  friend ValidatedInstance validate(const ProblemInstance&);
  ValidatedInstance() = default;

  BigInt chi_c_;
  std::vector<Rational> weights_;
  std::vector<std::size_t> original_index_;
  Rational rho_;
  SpaceDescriptor space_;
};

/// A subset I of the singular points (bit i set means weight i is in I)
/// together with w_I, the exact sum of its weights.
struct SubsetWeight {
  std::uint64_t mask = 0;
  Rational total;

  std::size_t size() const noexcept;
  /// (-1)^|I|
  int sign() const noexcept { return size() % 2 == 0 ? 1 : -1; }
  std::vector<std::size_t> members() const;
};

/// All 2^r subsets of the weight list in binary-counter order, starting with
/// the empty set. Totals are computed exactly on dereference.
class SubsetRange {
 public:
  explicit SubsetRange(std::vector<Rational> weights);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SubsetWeight;
    using difference_type = std::ptrdiff_t;
    using pointer = const SubsetWeight*;
    using reference = SubsetWeight;

    iterator() = default;
    SubsetWeight operator*() const;
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++mask_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    friend class SubsetRange;
    iterator(const std::vector<Rational>* weights, std::uint64_t mask)
        : weights_(weights), mask_(mask) {}
    const std::vector<Rational>* weights_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return iterator(&weights_, 0); }
  iterator end() const { return iterator(&weights_, std::uint64_t{1} << weights_.size()); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << weights_.size(); }

 private:
  std::vector<Rational> weights_;
};

SubsetRange enumerate_subset_weights(const ValidatedInstance& instance);

}  // namespace wbary
