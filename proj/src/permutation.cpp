#include "unialg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unialg {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v == 0 || v > images_.size() || seen[v]) throw std::invalid_argument("not a permutation of {1..n}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  if (i == 0 || j == 0 || i > n || j > n) throw std::invalid_argument("transposition index out of range");
  auto p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

std::vector<Permutation> Permutation::all(std::uint32_t n) {
  std::vector<Permutation> out;
  auto images = identity(n).images_;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::lifted(std::uint32_t k) const {
  auto images = images_;
  for (std::uint32_t i = 1; i <= k; ++i) images.push_back(arity() + i);
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.arity() != tau.arity()) throw std::invalid_argument("composing permutations of different arity");
  std::vector<std::uint32_t> images(tau.arity());
  for (std::uint32_t i = 1; i <= tau.arity(); ++i) images[i - 1] = sigma(tau(i));
  return Permutation(std::move(images));
}

Flow representation(const Permutation& sigma) {
  const auto n = sigma.arity();
  std::vector<Term> lhs;
  std::vector<Term> rhs;
  lhs.reserve(n + 1);
  rhs.reserve(n + 1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    lhs.push_back(Term::variable(vars::canonical(i)));
    rhs.push_back(Term::variable(vars::canonical(sigma(i))));
  }
  auto tail = Term::variable(vars::canonical(n + 1));
  lhs.push_back(tail);
  rhs.push_back(tail);
  return Flow(chain(lhs), chain(rhs));
}

}  // namespace unialg
