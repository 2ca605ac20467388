#include "matreal/extensor.hpp"

#include <algorithm>

namespace matreal {

Poly bracket(const std::vector<PolyVector>& vs) {
  for (const auto& v : vs) {
    if (v.size() != vs.size()) {
      throw Error(ErrorKind::DimensionMismatch, "bracket needs n vectors of length n");
    }
  }
  return determinant(vs);
}

PolyVector to_vector(const Extensor& e) {
  if (e.step() != 1) throw Error(ErrorKind::StepNotOne, "extensor has step " + std::to_string(e.step()));
  PolyVector out(e.ambient());
  for (const auto& t : e.terms()) {
    for (int i = 0; i < e.ambient(); ++i) out[i] += t.coef * t.factors[0][i];
  }
  return out;
}

std::map<std::uint64_t, Poly> plucker(const Extensor& e) {
  std::map<std::uint64_t, Poly> coords;
  for_each_k_subset(ElementSet::range(e.ambient()), e.step(), [&](ElementSet rows) {
    Poly sum;
    for (const auto& t : e.terms()) {
      std::vector<PolyVector> sub;
      for (const PolyVector& f : t.factors) {
        PolyVector r;
        for (Element row : rows) r.push_back(f[row - 1]);
        sub.push_back(std::move(r));
      }
      sum += t.coef * determinant(sub);
    }
    if (!sum.is_zero()) coords.emplace(rows.mask(), std::move(sum));
  });
  return coords;
}

bool is_zero(const Extensor& e) { return plucker(e).empty(); }

BracketPoly::BracketPoly(int c) {
  if (c != 0) terms_[{}] = c;
}

BracketPoly BracketPoly::bracket(std::vector<int> labels) {
  int swaps = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) return {};
      if (labels[i] > labels[j]) ++swaps;
    }
  }
  std::sort(labels.begin(), labels.end());
  BracketPoly p;
  p.terms_[{labels}] = swaps % 2 == 0 ? 1 : -1;
  return p;
}

BracketPoly BracketPoly::operator-() const {
  BracketPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BracketPoly operator+(const BracketPoly& a, const BracketPoly& b) {
  BracketPoly out = a;
  for (const auto& [m, c] : b.terms_) {
    Rational& slot = out.terms_[m];
    slot += c;
    if (slot == 0) out.terms_.erase(m);
  }
  return out;
}

BracketPoly operator*(const BracketPoly& a, const BracketPoly& b) {
  BracketPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      BracketPoly::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      Rational& slot = out.terms_[m];
      slot += ca * cb;
      if (slot == 0) out.terms_.erase(m);
    }
  }
  return out;
}

std::string BracketPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c0] : terms_) {
    Rational c = c0;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1 || m.empty()) out += format_rational(c);
    for (const Bracket& b : m) {
      out += "[";
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0) out += " ";
        out += std::to_string(b[i]);
      }
      out += "]";
    }
    first = false;
  }
  return out;
}

}  // namespace matreal
