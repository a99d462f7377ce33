#include "cy4gv/chow/k_class.hpp"

#include <sstream>

#include "cy4gv/error.hpp"

namespace cy4gv::chow {

KClass::KClass(std::map<Label, std::int64_t> terms) {
  for (const auto& [label, m] : terms) add(label, m);
}

KClass KClass::line(Label label, std::int64_t multiplicity) {
  KClass out;
  out.add(label, multiplicity);
  return out;
}

KClass KClass::trivial(std::size_t generators, std::int64_t multiplicity) {
  return line(Label(generators, 0), multiplicity);
}

void KClass::add(const Label& label, std::int64_t m) {
  if (!terms_.empty() && terms_.begin()->first.size() != label.size()) {
    throw DomainError("line bundle labels of different length");
  }
  if (m == 0) return;
  auto [it, inserted] = terms_.try_emplace(label, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t KClass::rank() const {
  std::int64_t r = 0;
  for (const auto& [label, m] : terms_) r += m;
  return r;
}

KClass KClass::dual() const {
  KClass out;
  for (const auto& [label, m] : terms_) {
    Label neg(label.size());
    for (std::size_t i = 0; i < label.size(); ++i) neg[i] = -label[i];
    out.add(neg, m);
  }
  return out;
}

KClass& KClass::operator+=(const KClass& rhs) {
  for (const auto& [label, m] : rhs.terms_) add(label, m);
  return *this;
}

KClass& KClass::operator-=(const KClass& rhs) {
  for (const auto& [label, m] : rhs.terms_) add(label, -m);
  return *this;
}

KClass KClass::operator-() const { return -1 * *this; }

KClass operator*(std::int64_t s, KClass a) {
  if (s == 0) return KClass();
  for (auto& [label, m] : a.terms_) m *= s;
  return a;
}

KClass operator*(const KClass& a, const KClass& b) {
  KClass out;
  for (const auto& [la, ma] : a.terms_) {
    for (const auto& [lb, mb] : b.terms_) {
      if (la.size() != lb.size()) throw DomainError("line bundle labels of different length");
      KClass::Label l(la.size());
      for (std::size_t i = 0; i < l.size(); ++i) l[i] = la[i] + lb[i];
      out.add(l, ma * mb);
    }
  }
  return out;
}

std::string KClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, m] : terms_) {
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << '-';
    const auto a = m < 0 ? -m : m;
    if (a != 1) os << a;
    os << "O(";
    for (std::size_t i = 0; i < label.size(); ++i) os << (i ? "," : "") << label[i];
    os << ')';
    first = false;
  }
  return os.str();
}

}  // namespace cy4gv::chow
