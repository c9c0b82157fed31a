#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ncalc {

/// A permutation of {0..n-1}; image[s] is where slot s is sent.
struct Permutation {
  std::vector<std::size_t> image;

  static Permutation identity(std::size_t n);

  std::size_t size() const { return image.size(); }
  std::size_t operator[](std::size_t s) const { return image[s]; }
  bool valid() const;
  /// +1 for even, -1 for odd.
  int parity() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Every permutation of n symbols in lexicographic order. n <= 10.
std::vector<Permutation> gen_S(std::size_t n);

/// A word of SE(n): 0 stands for y, k >= 1 for h_k.
using SEWord = std::vector<int>;

/// SE(n) built by inserting h_n immediately left or right of y in each word of
/// SE(n-1). n <= 10.
std::vector<SEWord> gen_SE(std::size_t n);
/// The two insertion maps used by gen_SE.
SEWord se_insert_left(const SEWord& word, int h);
SEWord se_insert_right(const SEWord& word, int h);
std::string se_word_string(const SEWord& word);

/// Order-preserving placements of k derivative slots among n positions.
/// Each result maps position -> 0..k-1 for derivative slots (in the order
/// the derivative arguments are assigned) and k.. for the remaining x-slots,
/// which keep their relative order. Count n!/(n-k)!.
std::vector<Permutation> gen_SO(std::size_t k, std::size_t n);

std::size_t factorial(std::size_t n);

}  // namespace ncalc
