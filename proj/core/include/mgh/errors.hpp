#ifndef MGH_ERRORS_HPP
#define MGH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgh {

/// Base class for all validation failures. Every subclass carries the
/// witness indices that falsify the violated axiom.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class AsymmetryError : public ValidationError {
public:
  std::size_t i, j;
  AsymmetryError(std::size_t i_, std::size_t j_)
      : ValidationError("matrix not symmetric at (" + std::to_string(i_) + ", " +
                        std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

class DiagonalError : public ValidationError {
public:
  std::size_t i;
  explicit DiagonalError(std::size_t i_)
      : ValidationError("nonzero diagonal entry at " + std::to_string(i_)), i(i_) {}
};

class NonPositiveError : public ValidationError {
public:
  std::size_t i, j;
  NonPositiveError(std::size_t i_, std::size_t j_)
      : ValidationError("non-positive off-diagonal distance at (" + std::to_string(i_) +
                        ", " + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

class NegativeEntryError : public ValidationError {
public:
  std::size_t i, j;
  NegativeEntryError(std::size_t i_, std::size_t j_)
      : ValidationError("negative entry at (" + std::to_string(i_) + ", " +
                        std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

class TriangleError : public ValidationError {
public:
  std::size_t i, j, k;
  TriangleError(std::size_t i_, std::size_t j_, std::size_t k_, const std::string& note = "")
      : ValidationError("triangle inequality fails: d(" + std::to_string(i_) + ", " +
                        std::to_string(k_) + ") > d(" + std::to_string(i_) + ", " +
                        std::to_string(j_) + ") + d(" + std::to_string(j_) + ", " +
                        std::to_string(k_) + ")" + (note.empty() ? "" : " [" + note + "]")),
        i(i_), j(j_), k(k_) {}
};

class AssociativityError : public ValidationError {
public:
  std::size_t a, b, c;
  AssociativityError(std::size_t a_, std::size_t b_, std::size_t c_)
      : ValidationError("multiplication not associative at (" + std::to_string(a_) + ", " +
                        std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

class IdentityError : public ValidationError {
public:
  IdentityError() : ValidationError("multiplication table has no two-sided identity") {}
};

class InverseError : public ValidationError {
public:
  std::size_t g;
  explicit InverseError(std::size_t g_)
      : ValidationError("element " + std::to_string(g_) + " has no inverse"), g(g_) {}
};

class LeftInvarianceError : public ValidationError {
public:
  std::size_t h, g1, g2;
  LeftInvarianceError(std::size_t h_, std::size_t g1_, std::size_t g2_)
      : ValidationError("metric not left-invariant: translate by " + std::to_string(h_) +
                        " moves d(" + std::to_string(g1_) + ", " + std::to_string(g2_) + ")"),
        h(h_), g1(g1_), g2(g2_) {}
};

class NotHomomorphismError : public ValidationError {
public:
  std::size_t g1, g2;
  NotHomomorphismError(std::size_t g1_, std::size_t g2_)
      : ValidationError("map is not a homomorphism: image(" + std::to_string(g1_) + " * " +
                        std::to_string(g2_) + ") != image(" + std::to_string(g1_) +
                        ") * image(" + std::to_string(g2_) + ")"),
        g1(g1_), g2(g2_) {}
};

class NonSurjectiveBondError : public ValidationError {
public:
  std::size_t bond;
  explicit NonSurjectiveBondError(std::size_t bond_)
      : ValidationError("bond " + std::to_string(bond_) + " is not surjective"), bond(bond_) {}
};

class ExpansiveBondError : public ValidationError {
public:
  std::size_t bond, i, j;
  ExpansiveBondError(std::size_t bond_, std::size_t i_, std::size_t j_)
      : ValidationError("bond " + std::to_string(bond_) + " expands the pair (" +
                        std::to_string(i_) + ", " + std::to_string(j_) + ")"),
        bond(bond_), i(i_), j(j_) {}
};

class CoherenceError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Malformed or out-of-contract input that is not an axiom violation
/// (size mismatches, bad parameters, unknown names).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace mgh

#endif
