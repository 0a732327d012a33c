#include "unialg/wiring.hpp"

#include <vector>

#include "unialg/unify.hpp"

namespace unialg {

void Wiring::add(const Flow& f, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(f, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

Coefficient Wiring::coefficient(const Flow& f) const {
  auto it = entries_.find(f);
  return it == entries_.end() ? Coefficient{} : it->second;
}

bool Wiring::is_concrete() const {
  for (const auto& [f, c] : entries_) {
    if (!c.is_one()) return false;
  }
  return true;
}

Wiring operator+(const Wiring& f, const Wiring& g) {
  Wiring out = f;
  for (const auto& [flow, c] : g) out.add(flow, c);
  return out;
}

Wiring operator-(const Wiring& f, const Wiring& g) { return f + Coefficient(-1) * g; }

Wiring operator*(const Wiring& f, const Wiring& g) {
  Wiring out;
  for (const auto& [l, lambda] : f) {
    for (const auto& [k, mu] : g) {
      if (auto lk = product(l, k)) out.add(*lk, lambda * mu);
    }
  }
  return out;
}

Wiring operator*(const Coefficient& c, const Wiring& f) {
  Wiring out;
  if (c.is_zero()) return out;
  for (const auto& [flow, lambda] : f) out.add(flow, c * lambda);
  return out;
}

Wiring dagger(const Wiring& f) {
  Wiring out;
  for (const auto& [flow, lambda] : f) out.add(dagger(flow), lambda.conj());
  return out;
}

Wiring tensor(const Wiring& f, const Wiring& g) {
  Wiring out;
  for (const auto& [l, lambda] : f) {
    for (const auto& [k, mu] : g) out.add(tensor(l, k), lambda * mu);
  }
  return out;
}

Wiring exchange(const Term& u, const Term& v) {
  Wiring out;
  out.add(Flow(u, v), 1);
  out.add(Flow(v, u), 1);
  return out;
}

void TermVector::add(const Term& t, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

TermVector apply(const Wiring& f, const TermVector& v) {
  TermVector out;
  for (const auto& [t, mu] : v) {
    for (const auto& [flow, lambda] : f) {
      if (auto image = apply(flow, t)) out.add(*image, lambda * mu);
    }
  }
  return out;
}

TermVector apply(const Wiring& f, const Term& t) {
  TermVector out;
  for (const auto& [flow, lambda] : f) {
    if (auto image = apply(flow, t)) out.add(*image, lambda);
  }
  return out;
}

bool is_partial_isometry(const Wiring& u) { return u * dagger(u) * u == u; }

bool is_isometric(const Wiring& f) {
  if (!f.is_concrete()) return false;
  std::vector<const Flow*> flows;
  flows.reserve(f.size());
  for (const auto& [flow, c] : f) flows.push_back(&flow);
  for (std::size_t i = 0; i < flows.size(); ++i) {
    for (std::size_t j = i + 1; j < flows.size(); ++j) {
      if (!disjoint(flows[i]->lhs(), flows[j]->lhs())) return false;
      if (!disjoint(flows[i]->rhs(), flows[j]->rhs())) return false;
    }
  }
  return true;
}

}  // namespace unialg
