#pragma once

#include <map>

#include "unialg/coefficient.hpp"
#include "unialg/flow.hpp"

namespace unialg {

/// Finite linear combination of flows with Gaussian-rational coefficients.
/// Always in normal form: one entry per canonical flow, no zero coefficient.
/// The zero wiring is the empty one.
class Wiring {
 public:
  using Entries = std::map<Flow, Coefficient>;

  Wiring() = default;
  explicit Wiring(Flow f, Coefficient c = 1) { add(std::move(f), std::move(c)); }
  Wiring(std::initializer_list<Flow> flows) {
    for (const auto& f : flows) add(f, 1);
  }

  static Wiring identity() { return Wiring(Flow::identity()); }

  /// Merges c·f into the sum.
  void add(const Flow& f, const Coefficient& c);

  const Entries& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  /// Zero when f does not occur.
  Coefficient coefficient(const Flow& f) const;

  /// Every coefficient equals 1.
  bool is_concrete() const;

  friend bool operator==(const Wiring&, const Wiring&) = default;

 private:
  Entries entries_;
};

Wiring operator+(const Wiring& f, const Wiring& g);
Wiring operator-(const Wiring& f, const Wiring& g);
/// Sum over all pairs whose flow product is defined.
Wiring operator*(const Wiring& f, const Wiring& g);
Wiring operator*(const Coefficient& c, const Wiring& f);

Wiring dagger(const Wiring& f);
Wiring tensor(const Wiring& f, const Wiring& g);

/// u ⇌ v := (u ↼ v) + (v ↼ u)
Wiring exchange(const Term& u, const Term& v);

/// Element of the free vector space over closed terms.
class TermVector {
 public:
  using Entries = std::map<Term, Coefficient>;

  TermVector() = default;
  explicit TermVector(Term t, Coefficient c = 1) { add(std::move(t), std::move(c)); }

  void add(const Term& t, const Coefficient& c);

  const Entries& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  friend bool operator==(const TermVector&, const TermVector&) = default;

 private:
  Entries entries_;
};

/// Linear extension of the flow action.
TermVector apply(const Wiring& f, const TermVector& v);
TermVector apply(const Wiring& f, const Term& t);

/// U U† U = U
bool is_partial_isometry(const Wiring& u);

/// Concrete, with pairwise disjoint left sides and pairwise disjoint right sides.
bool is_isometric(const Wiring& f);

}  // namespace unialg
