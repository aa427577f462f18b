#include "swnet/cut_function.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "swnet/errors.hpp"

namespace swnet {

CutFunction::CutFunction(int interior_count) : interior_(interior_count) {
  if (interior_count < 0 || interior_count > 31)
    throw std::invalid_argument("cut functions need 0 <= interior <= 31");
}

CutFunction CutFunction::basis(int interior_count, uint32_t v_mask, Dyadic coeff) {
  CutFunction f(interior_count);
  f.add_term(v_mask, coeff);
  return f;
}

Dyadic CutFunction::coeff(uint32_t v_mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v_mask,
                             [](const Term& t, uint32_t m) { return t.first < m; });
  if (it != terms_.end() && it->first == v_mask) return it->second;
  return Dyadic(0);
}

void CutFunction::add_term(uint32_t v_mask, const Dyadic& delta) {
  if ((v_mask >> interior_) != 0)  // ctor guarantees interior_ <= 31
    throw std::invalid_argument("basis mask has bits outside the interior");
  if (delta.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v_mask,
                             [](const Term& t, uint32_t m) { return t.first < m; });
  if (it != terms_.end() && it->first == v_mask) {
    it->second += delta;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {v_mask, delta});
  }
}

CutFunction CutFunction::operator+(const CutFunction& o) const {
  if (interior_ != o.interior_) throw std::invalid_argument("cut function spaces differ");
  CutFunction out(interior_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      Dyadic sum = a->second + b->second;
      if (!sum.is_zero()) out.terms_.push_back({a->first, sum});
      ++a;
      ++b;
    }
  }
  return out;
}

CutFunction CutFunction::operator-(const CutFunction& o) const { return *this + o.negated(); }

CutFunction CutFunction::negated() const {
  CutFunction out(interior_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.first, -t.second});
  return out;
}

CutFunction CutFunction::scaled(const Dyadic& c) const {
  CutFunction out(interior_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.first, t.second * c});
  return out;
}

Dyadic CutFunction::evaluate(const Cut& c) const {
  if (c.interior_count != interior_) throw std::invalid_argument("cut from a different space");
  Dyadic sum(0);
  for (const Term& t : terms_) {
    int parity = std::popcount(t.first & c.left_mask) & 1;
    sum += parity ? -t.second : t.second;
  }
  return sum;
}

bool CutFunction::operator<(const CutFunction& o) const {
  if (interior_ != o.interior_) return interior_ < o.interior_;
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    auto c = a->second <=> b->second;
    if (c != 0) return c < 0;
  }
  return b != o.terms_.end();
}

std::string CutFunction::to_string() const {
  if (terms_.empty()) return "-";
  std::string out;
  char buf[16];
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ";";
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, terms_[i].first, 16);
    out.append(buf, ptr);
    out += ":";
    out += terms_[i].second.to_string();
  }
  return out;
}

CutFunction CutFunction::parse(int interior_count, std::string_view text) {
  CutFunction f(interior_count);
  if (text == "-") return f;
  std::istringstream ss{std::string(text)};
  std::string item;
  uint32_t prev_mask = 0;
  bool first = true;
  while (std::getline(ss, item, ';')) {
    auto pos = item.find(':');
    if (pos == std::string::npos)
      throw parse_error("term must look like '<mask>:<dyadic>', got '" + item + "'", 0);
    uint32_t mask = 0;
    auto r = std::from_chars(item.data(), item.data() + pos, mask, 16);
    if (r.ec != std::errc{} || r.ptr != item.data() + pos)
      throw parse_error("bad basis mask in '" + item + "'", 0);
    if (!first && mask <= prev_mask) throw parse_error("terms out of order", 0);
    Dyadic c = Dyadic::parse(std::string_view(item).substr(pos + 1));
    if (c.is_zero()) throw parse_error("zero coefficient in '" + item + "'", 0);
    f.add_term(mask, c);
    prev_mask = mask;
    first = false;
  }
  return f;
}

Dyadic dot(const CutFunction& f, const CutFunction& g) {
  if (f.interior_count() != g.interior_count())
    throw std::invalid_argument("cut function spaces differ");
  Dyadic sum(0);
  auto a = f.terms().begin();
  auto b = g.terms().begin();
  while (a != f.terms().end() && b != g.terms().end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

Dyadic dot_bruteforce(const CutFunction& f, const CutFunction& g) {
  if (f.interior_count() != g.interior_count())
    throw std::invalid_argument("cut function spaces differ");
  const int ni = f.interior_count();
  if (ni > 24) throw limit_error("brute-force dot needs interior <= 24");
  Dyadic sum(0);
  for (uint32_t m = 0; m < (1u << ni); ++m) {
    Cut c{m, ni};
    sum += f.evaluate(c) * g.evaluate(c);
  }
  return sum * Dyadic::pow2(-ni);
}

}  // namespace swnet
