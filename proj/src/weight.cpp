#include "cominus/weight.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cominus {

Weight Weight::parse(std::string_view text, std::size_t rank) {
  Weight w(rank);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("weight \"" + std::string(text) + "\", column " + std::to_string(i + 1) + ": " + what);
  };
  auto read_int = [&](int& out) {
    const std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    out = static_cast<int>(v);
    return i > start;
  };
  if (text == "0") return w;
  if (text.empty()) fail("empty weight");
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (i > 0) {
      fail("expected '+' or '-'");
    }
    int coef = 1;
    if (!read_int(coef)) coef = 1;
    if (i >= text.size() || (text[i] != 'L' && text[i] != 'l')) fail("expected 'L'");
    ++i;
    int node = 0;
    if (!read_int(node)) fail("expected a node index");
    if (node < 1 || static_cast<std::size_t>(node) > rank) fail("node index out of range 1.." + std::to_string(rank));
    w[node - 1] += sign * coef;
  }
  return w;
}

Weight Weight::fundamental(std::size_t rank, std::size_t node) {
  if (node < 1 || node > rank) throw std::invalid_argument("fundamental weight index out of range");
  Weight w(rank);
  w.c_[node - 1] = 1;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(int s) {
  for (int& v : c_) v *= s;
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (int& v : r.c_) v = -v;
  return r;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ')';
  return os.str();
}

std::string Weight::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const int v = c_[i];
    if (v == 0) continue;
    if (v < 0) os << '-';
    else if (!first) os << '+';
    if (std::abs(v) != 1) os << std::abs(v);
    os << 'L' << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : w.coords()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(v)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace cominus
