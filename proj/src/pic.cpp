#include "logcy/pic.hpp"

namespace logcy {

bool PicVector::is_zero() const {
  for (const auto& x : coords_)
    if (sgn(x) != 0) return false;
  return true;
}

void PicVector::require(PicTag tag, std::size_t rank) const {
  if (!(tag_ == tag) || coords_.size() != rank)
    throw BasisMismatch("expected a class in " + tag.name() + " of rank " + std::to_string(rank) + ", got " +
                        tag_.name() + " of rank " + std::to_string(coords_.size()));
}

PicVector& PicVector::operator+=(const PicVector& o) {
  o.require(tag_, coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

PicVector& PicVector::operator-=(const PicVector& o) {
  o.require(tag_, coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

PicVector operator*(const BigInt& k, PicVector a) {
  for (auto& x : a.coords_) x *= k;
  return a;
}

}  // namespace logcy
