#pragma once

#include "logcy/error.hpp"
#include "logcy/int_matrix.hpp"

#include <string>

namespace logcy {

/// Which lattice a PicVector lives in: the threefold, or the component D_v.
struct PicTag {
  int vertex = -1;  // -1 for the threefold

  static PicTag threefold() { return {}; }
  static PicTag component(int v) { return {v}; }
  bool is_threefold() const { return vertex < 0; }
  std::string name() const { return is_threefold() ? "Pic(Y)" : "Pic(D_" + std::to_string(vertex) + ")"; }

  friend bool operator==(const PicTag&, const PicTag&) = default;
};

/// Divisor class as integer coordinates in a fixed basis.
class PicVector {
public:
  PicVector() = default;
  PicVector(std::size_t rank, PicTag tag) : coords_(rank), tag_(tag) {}
  PicVector(IntVector coords, PicTag tag) : coords_(std::move(coords)), tag_(tag) {}

  const IntVector& coords() const { return coords_; }
  IntVector& coords() { return coords_; }
  PicTag tag() const { return tag_; }
  std::size_t size() const { return coords_.size(); }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  BigInt& operator[](std::size_t i) { return coords_[i]; }
  bool is_zero() const;

  PicVector& operator+=(const PicVector& o);
  PicVector& operator-=(const PicVector& o);
  friend PicVector operator+(PicVector a, const PicVector& b) { return a += b; }
  friend PicVector operator-(PicVector a, const PicVector& b) { return a -= b; }
  friend PicVector operator*(const BigInt& k, PicVector a);
  friend bool operator==(const PicVector&, const PicVector&) = default;

  /// Throws BasisMismatch unless tags and ranks agree.
  void require(PicTag tag, std::size_t rank) const;

private:
  IntVector coords_;
  PicTag tag_;
};

}  // namespace logcy
