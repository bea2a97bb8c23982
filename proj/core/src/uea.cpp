#include "tphs/uea.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tphs/errors.hpp"

namespace tphs {

Word word_of(std::initializer_list<int> indices) {
  Word w;
  w.reserve(indices.size());
  for (int i : indices) w.push_back(static_cast<char>(static_cast<unsigned char>(i)));
  return w;
}

UEAElement UEAElement::one() { return term(Word(), GaussRational(1L)); }

UEAElement UEAElement::term(const Word& w, const GaussRational& c) {
  UEAElement e;
  if (!c.is_zero()) e.terms_.emplace(w, c);
  return e;
}

void UEAElement::add_term(const Word& w, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

UEAElement UEAElement::operator-() const {
  UEAElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

UEAElement operator*(const GaussRational& c, const UEAElement& a) {
  UEAElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : a.terms_) {
    GaussRational p = c * v;
    if (!p.is_zero()) r.terms_.emplace(w, std::move(p));
  }
  return r;
}

int UEAElement::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

std::string UEAElement::str(const LieAlgebra& g) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += '\n';
    out += c.str();
    out += " * ";
    if (w.empty()) {
      out += '1';
    } else {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        out += g.element(static_cast<unsigned char>(w[i])).label;
      }
    }
  }
  return out;
}

UEA::UEA(const LieAlgebra& g) : g_(g), cap_(default_degree_cap()) {
  if (g.dim() > 255) throw InvariantError("algebra dimension exceeds word packing");
}

int UEA::default_degree_cap() {
  if (const char* env = std::getenv("ENGINE_DEGREE_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10;
}

UEAElement UEA::gen(int index) const {
  if (index < 0 || index >= g_.dim()) throw InvariantError("generator index out of range");
  return UEAElement::term(Word(1, static_cast<char>(index)), GaussRational(1L));
}

// (sorted word) * letter, the primitive everything folds through:
//   u y * x = u x * y + u * [y, x]   when y > x,
// recursing into strictly shorter left parts; memoized on the packed key.
UEAElement UEA::rmul_word(const Word& sorted, unsigned char x) {
  if (sorted.empty() || static_cast<unsigned char>(sorted.back()) <= x) {
    Word w = sorted;
    w.push_back(static_cast<char>(x));
    return UEAElement::term(w, GaussRational(1L));
  }
  Word key = sorted;
  key.push_back(static_cast<char>(x));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const unsigned char y = static_cast<unsigned char>(sorted.back());
  const Word u = sorted.substr(0, sorted.size() - 1);
  UEAElement result = rmul(rmul_word(u, x), y);
  for (const auto& [k, c] : g_.bracket_units(y, x)) {
    UEAElement t = rmul_word(u, static_cast<unsigned char>(k));
    result += c * t;
  }
  memo_.emplace(std::move(key), result);
  return result;
}

UEAElement UEA::rmul(const UEAElement& a, unsigned char x) {
  UEAElement r;
  for (const auto& [w, c] : a.terms()) r += c * rmul_word(w, x);
  return r;
}

UEAElement UEA::normal_form(const Word& w, const GaussRational& c) {
  if (static_cast<int>(w.size()) > cap_)
    throw DegreeCapError(w.size(), static_cast<std::size_t>(cap_));
  UEAElement e = UEAElement::term(Word(), c);
  for (char ch : w) e = rmul(e, static_cast<unsigned char>(ch));
  return e;
}

UEAElement UEA::multiply(const UEAElement& a, const UEAElement& b) {
  int da = a.degree(), db = b.degree();
  if (da >= 0 && db >= 0 && da + db > cap_)
    throw DegreeCapError(static_cast<std::size_t>(da + db),
                         static_cast<std::size_t>(cap_));
  UEAElement r;
  for (const auto& [wb, cb] : b.terms()) {
    // fold the right word letter by letter into every left term at once
    UEAElement acc;
    for (const auto& [wa, ca] : a.terms()) acc.add_term(wa, ca * cb);
    for (char ch : wb) acc = rmul(acc, static_cast<unsigned char>(ch));
    r += acc;
  }
  return r;
}

UEAElement UEA::commutator(const UEAElement& a, const UEAElement& b) {
  return multiply(a, b) - multiply(b, a);
}

UEAElement UEA::anticommutator(const UEAElement& a, const UEAElement& b) {
  return multiply(a, b) + multiply(b, a);
}

UEAElement UEA::symmetrize(const Word& monomial) {
  for (char ch : monomial)
    if (g_.in_k0(static_cast<unsigned char>(ch)))
      throw InvariantError("symmetrize factor lies in k0: " +
                           g_.element(static_cast<unsigned char>(ch)).label);
  Word perm = monomial;
  std::sort(perm.begin(), perm.end());
  UEAElement sum;
  long count = 0;
  do {
    sum += normal_form(perm);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return GaussRational(Rational(1, count)) * sum;
}

UEAElement UEA::normal_form_stepwise(const Word& w, bool leftmost) {
  if (static_cast<int>(w.size()) > cap_)
    throw DegreeCapError(w.size(), static_cast<std::size_t>(cap_));
  UEAElement done;
  std::vector<std::pair<Word, GaussRational>> work{{w, GaussRational(1L)}};
  while (!work.empty()) {
    auto [cur, coef] = std::move(work.back());
    work.pop_back();
    int inv = -1;
    if (leftmost) {
      for (std::size_t p = 0; p + 1 < cur.size(); ++p)
        if (static_cast<unsigned char>(cur[p]) > static_cast<unsigned char>(cur[p + 1])) {
          inv = static_cast<int>(p);
          break;
        }
    } else {
      for (std::size_t p = cur.size(); p >= 2; --p)
        if (static_cast<unsigned char>(cur[p - 2]) > static_cast<unsigned char>(cur[p - 1])) {
          inv = static_cast<int>(p - 2);
          break;
        }
    }
    if (inv < 0) {
      done.add_term(cur, coef);
      continue;
    }
    const unsigned char hi = static_cast<unsigned char>(cur[inv]);
    const unsigned char lo = static_cast<unsigned char>(cur[inv + 1]);
    Word swapped = cur;
    std::swap(swapped[inv], swapped[inv + 1]);
    work.emplace_back(std::move(swapped), coef);
    Word stem = cur.substr(0, inv) + cur.substr(inv + 2);
    for (const auto& [k, c] : g_.bracket_units(hi, lo)) {
      Word ins = stem;
      ins.insert(ins.begin() + inv, static_cast<char>(k));
      work.emplace_back(std::move(ins), coef * c);
    }
  }
  return done;
}

}  // namespace tphs
