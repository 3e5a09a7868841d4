#include "normgraph/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "normgraph/error.hpp"

namespace normgraph::oracle {

ElementSet::ElementSet(ProductSpace space) : space_(std::move(space)) {
  auto n = space_.order().to_u64();
  if (!n || *n > kMaxAmbient) throw Error(ErrorCode::TooLargeToEnumerate, "oracle ambient");
}

std::vector<Element> ElementSet::elements() const {
  std::vector<std::uint64_t> idx(members_.begin(), members_.end());
  std::sort(idx.begin(), idx.end());
  std::vector<Element> out;
  for (auto i : idx) out.push_back(space_.element_at(i));
  return out;
}

ElementSet span(const ProductSpace& space, const std::vector<Element>& generators) {
  ElementSet s(space);
  std::deque<Element> queue{space.zero()};
  s.insert(space.zero());
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Element y = space.add(x, g);
      if (!s.contains(y)) {
        s.insert(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return s;
}

ElementSet from_subgroup(const CodeSubgroup& c) {
  ElementSet s(c.ambient());
  for_each_element(c, [&](const Element& x) { s.insert(x); }, std::uint64_t{1} << 24);
  return s;
}

ElementSet orthogonal(const ElementSet& c) {
  const auto& sp = c.space();
  // A small generating set suffices for the orthogonality test.
  std::vector<Element> members;
  ElementSet reached = span(sp, {});
  for (const auto& x : c.elements())
    if (!reached.contains(x)) {
      members.push_back(x);
      reached = span(sp, members);
    }
  ElementSet out(sp);
  auto n = *sp.order().to_u64();
  for (std::uint64_t i = 0; i < n; ++i) {
    Element y = sp.element_at(i);
    bool ok = true;
    for (const auto& x : members)
      if (!sp.pair(x, y).is_zero()) {
        ok = false;
        break;
      }
    if (ok) out.insert(y);
  }
  return out;
}

namespace {

Element pick(const ProductSpace& sp, const Element& x, const std::vector<std::string>& part) {
  Element out;
  for (const auto& l : part) {
    auto v = sp.slot(x, l);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace

ElementSet project(const ElementSet& c, const std::vector<std::string>& part) {
  ElementSet out(c.space().select(part));
  for (const auto& x : c.elements()) out.insert(pick(c.space(), x, part));
  return out;
}

ElementSet cross_section(const ElementSet& c, const std::vector<std::string>& part) {
  std::set<std::string> in(part.begin(), part.end());
  ElementSet out(c.space().select(part));
  for (const auto& x : c.elements()) {
    bool zero_outside = true;
    for (const auto& f : c.space().factors()) {
      if (in.count(f.label)) continue;
      for (Int v : c.space().slot(x, f.label))
        if (v != 0) zero_outside = false;
    }
    if (zero_outside) out.insert(pick(c.space(), x, part));
  }
  return out;
}

ElementSet sum(const ElementSet& a, const ElementSet& b) {
  auto gens = a.elements();
  auto more = b.elements();
  gens.insert(gens.end(), more.begin(), more.end());
  return span(a.space(), gens);
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out(a.space());
  for (const auto& x : a.elements())
    if (b.contains(x)) out.insert(x);
  return out;
}

bool is_subgroup(const ElementSet& c) {
  auto xs = c.elements();
  if (!c.contains(c.space().zero())) return false;
  for (const auto& x : xs)
    for (const auto& y : xs)
      if (!c.contains(c.space().add(x, c.space().neg(y)))) return false;
  return true;
}

}  // namespace normgraph::oracle
