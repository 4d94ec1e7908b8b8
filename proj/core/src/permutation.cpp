#include "mgh/permutation.hpp"

#include <numeric>

#include "mgh/errors.hpp"

namespace mgh {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || hit[v]) throw InputError("permutation image is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& b) const {
  if (b.size() != size()) throw InputError("permutation size mismatch");
  std::vector<std::size_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[i] = b.image_[image_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[image_[i]] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

}  // namespace mgh
