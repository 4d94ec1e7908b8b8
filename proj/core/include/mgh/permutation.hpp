#ifndef MGH_PERMUTATION_HPP
#define MGH_PERMUTATION_HPP

#include <cstddef>
#include <vector>

namespace mgh {

/// A bijection on {0, ..., n-1} stored as its image array.
class Permutation {
public:
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  /// (a.then(b))(i) == b(a(i)).
  Permutation then(const Permutation& b) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return image_ == o.image_; }
  bool operator<(const Permutation& o) const { return image_ < o.image_; }

private:
  std::vector<std::size_t> image_;
};

}  // namespace mgh

#endif
