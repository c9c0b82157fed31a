#include "ncalc/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ncalc/error.hpp"

namespace ncalc {

namespace {

constexpr std::size_t kMaxSymbols = 10;

void guard(std::size_t n) {
  if (n > kMaxSymbols) throw Error(ErrorKind::TooLarge, "permutation sets are capped at n = 10");
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), std::size_t{0});
  return p;
}

bool Permutation::valid() const {
  std::vector<bool> seen(image.size(), false);
  for (std::size_t v : image) {
    if (v >= image.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

int Permutation::parity() const {
  std::vector<bool> seen(image.size(), false);
  int sign = 1;
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t c = s; !seen[c]; c = image[c]) seen[c] = true, ++len;
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<Permutation> gen_S(std::size_t n) {
  guard(n);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  Permutation p = Permutation::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.image.begin(), p.image.end()));
  return out;
}

SEWord se_insert_left(const SEWord& word, int h) {
  SEWord w = word;
  w.insert(std::find(w.begin(), w.end(), 0), h);
  return w;
}

SEWord se_insert_right(const SEWord& word, int h) {
  SEWord w = word;
  w.insert(std::find(w.begin(), w.end(), 0) + 1, h);
  return w;
}

std::vector<SEWord> gen_SE(std::size_t n) {
  guard(n);
  std::vector<SEWord> words{{0}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<SEWord> next;
    next.reserve(words.size() * 2);
    for (const auto& w : words) {
      next.push_back(se_insert_left(w, static_cast<int>(m)));
      next.push_back(se_insert_right(w, static_cast<int>(m)));
    }
    words = std::move(next);
  }
  return words;
}

std::string se_word_string(const SEWord& word) {
  std::string s;
  for (int v : word) s += v == 0 ? std::string("y") : "h" + std::to_string(v);
  return s;
}

std::vector<Permutation> gen_SO(std::size_t k, std::size_t n) {
  guard(n);
  if (k > n) throw Error(ErrorKind::InvalidArgument, "SO(k,n) needs k <= n");
  std::vector<Permutation> out;
  // Choose which positions receive derivative slots, then which derivative
  // argument goes where; x positions are filled in order.
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::vector<std::vector<std::size_t>> subsets;
  do {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
      if (chosen[i]) pos.push_back(i);
    subsets.push_back(pos);
  } while (std::prev_permutation(chosen.begin(), chosen.end()));

  for (const auto& pos : subsets) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      Permutation p;
      p.image.assign(n, 0);
      std::vector<bool> is_d(n, false);
      for (std::size_t d = 0; d < k; ++d) p.image[pos[d]] = order[d], is_d[pos[d]] = true;
      std::size_t next_x = k;
      for (std::size_t i = 0; i < n; ++i)
        if (!is_d[i]) p.image[i] = next_x++;
      out.push_back(std::move(p));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

}  // namespace ncalc
