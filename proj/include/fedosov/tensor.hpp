#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fedosov/errors.hpp"
#include "fedosov/rational.hpp"

namespace fedosov {

enum class Slot { Covariant, Contravariant };

/// Dense multi-index array with a declared valence.
///
/// Storage is row-major in slot order; every slot ranges over 0..dim-1.
/// For a (1,2)-tensor written A_X Y the slot order is (X, Y, output), and
/// for a (1,3)-tensor R_{XY} Z it is (X, Y, Z, output): the contravariant
/// output always comes last.
template <class Scalar>
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t dim, std::vector<Slot> slots) : dim_(dim), slots_(std::move(slots)) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < slots_.size(); ++i) size *= dim_;
    data_.assign(size, Scalar(0));
  }

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return slots_.size(); }
  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t size() const { return data_.size(); }

  std::vector<Scalar>& data() { return data_; }
  const std::vector<Scalar>& data() const { return data_; }

  std::size_t flat_index(std::span<const std::size_t> index) const {
    if (index.size() != slots_.size()) throw std::out_of_range("tensor index arity mismatch");
    std::size_t flat = 0;
    for (auto i : index) {
      if (i >= dim_) throw std::out_of_range("tensor index out of range");
      flat = flat * dim_ + i;
    }
    return flat;
  }

  std::vector<std::size_t> multi_index(std::size_t flat) const {
    std::vector<std::size_t> index(slots_.size());
    for (std::size_t k = slots_.size(); k-- > 0;) {
      index[k] = flat % dim_;
      flat /= dim_;
    }
    return index;
  }

  Scalar& at(std::span<const std::size_t> index) { return data_[flat_index(index)]; }
  const Scalar& at(std::span<const std::size_t> index) const { return data_[flat_index(index)]; }

  template <class... I>
  Scalar& operator()(I... i) {
    const std::size_t index[] = {static_cast<std::size_t>(i)...};
    return at(index);
  }
  template <class... I>
  const Scalar& operator()(I... i) const {
    const std::size_t index[] = {static_cast<std::size_t>(i)...};
    return at(index);
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  /// First nonzero component in storage order (0-based multi-index).
  std::optional<std::vector<std::size_t>> first_nonzero() const {
    for (std::size_t f = 0; f < data_.size(); ++f) {
      if (!data_[f].is_zero()) return multi_index(f);
    }
    return std::nullopt;
  }

  bool same_shape(const Tensor& other) const { return dim_ == other.dim_ && slots_ == other.slots_; }

  Tensor& operator+=(const Tensor& other) {
    require_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& other) {
    require_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }
  Tensor& operator*=(const Scalar& s) {
    for (auto& v : data_) v = v * s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  Tensor operator-() const {
    Tensor out = *this;
    for (auto& v : out.data_) v = -v;
    return out;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (!(a.data_[i] == b.data_[i])) return false;
    }
    return true;
  }

 private:
  void require_same_shape(const Tensor& other) const {
    if (!same_shape(other)) throw SchemaError("tensor shape mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Slot> slots_;
  std::vector<Scalar> data_;
};

using PointTensor = Tensor<Rational>;

inline std::vector<Slot> covariant_slots(std::size_t k) { return std::vector<Slot>(k, Slot::Covariant); }

/// (1,k) valence: k covariant inputs followed by one contravariant output.
inline std::vector<Slot> endomorphism_valued_slots(std::size_t k) {
  std::vector<Slot> slots(k, Slot::Covariant);
  slots.push_back(Slot::Contravariant);
  return slots;
}

/// 1-based "(i,j,k)" rendering of a multi-index.
inline std::string format_index(std::span<const std::size_t> index) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i) os << ",";
    os << index[i] + 1;
  }
  os << ")";
  return os.str();
}

/// Witness text for the first nonzero component, or nullopt if zero.
template <class Scalar>
std::optional<std::string> nonzero_witness(const Tensor<Scalar>& t) {
  auto idx = t.first_nonzero();
  if (!idx) return std::nullopt;
  return "component " + format_index(*idx) + " = " + t.at(*idx).to_string();
}

}  // namespace fedosov
