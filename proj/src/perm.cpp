#include "gf/perm.hpp"

#include <algorithm>
#include <cctype>

#include "gf/util.hpp"

namespace gf {

Perm::Perm(int degree) : img_(degree) {
  for (int i = 0; i < degree; ++i) img_[i] = i;
}

Perm Perm::from_images(std::vector<int> images0) {
  int n = static_cast<int>(images0.size());
  std::vector<char> seen(n, 0);
  for (int v : images0) {
    if (v < 0 || v >= n || seen[v]) fail("ParseError", "not a permutation image list");
    seen[v] = 1;
  }
  Perm p;
  p.img_ = std::move(images0);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles1) {
  Perm p(degree);
  for (const auto& cyc : cycles1) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > degree || b < 1 || b > degree)
        fail("ParseError", "cycle point out of range 1..degree");
      if (p.img_[a - 1] != a - 1) fail("ParseError", "point repeated across cycles");
      p.img_[a - 1] = b - 1;
    }
  }
  // validity: repeated points inside one cycle slip past the check above
  std::vector<char> seen(degree, 0);
  for (int v : p.img_) {
    if (seen[v]) fail("ParseError", "not a permutation");
    seen[v] = 1;
  }
  return p;
}

Perm Perm::parse(int degree, const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_int = [&]() -> int {
    skip_ws();
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("ParseError", "expected integer in permutation: " + text);
    return std::stoi(text.substr(start, i - start));
  };
  skip_ws();
  if (i < text.size() && text[i] == '[') {
    ++i;
    std::vector<int> images;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        images.push_back(read_int() - 1);
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        if (i < text.size() && text[i] == ']') { ++i; break; }
        fail("ParseError", "malformed image list: " + text);
      }
    }
    if (degree >= 0 && static_cast<int>(images.size()) != degree)
      fail("ParseError", "image list length does not match degree");
    return from_images(std::move(images));
  }
  // cycle notation; whitespace-separated points inside parens
  std::vector<std::vector<int>> cycles;
  int max_point = 0;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') fail("ParseError", "expected '(' in permutation: " + text);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') { ++i; break; }
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      int v = read_int();
      max_point = std::max(max_point, v);
      cyc.push_back(v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  int deg = degree >= 0 ? degree : max_point;
  if (max_point > deg) fail("ParseError", "cycle point exceeds degree");
  return from_cycles(deg, cycles);
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) fail("ParseError", "degree mismatch in composition");
  Perm out;
  out.img_.resize(img_.size());
  for (size_t p = 0; p < img_.size(); ++p) out.img_[p] = img_[rhs.img_[p]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (size_t p = 0; p < img_.size(); ++p) out.img_[img_[p]] = static_cast<int>(p);
  return out;
}

bool Perm::is_identity() const {
  for (size_t p = 0; p < img_.size(); ++p)
    if (img_[p] != static_cast<int>(p)) return false;
  return true;
}

bool Perm::even() const {
  // parity via cycle count
  std::vector<char> seen(img_.size(), 0);
  int transpositions = 0;
  for (size_t p = 0; p < img_.size(); ++p) {
    if (seen[p]) continue;
    int len = 0;
    for (int q = static_cast<int>(p); !seen[q]; q = img_[q]) {
      seen[q] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

uint64_t Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  uint64_t ord = 1;
  for (size_t p = 0; p < img_.size(); ++p) {
    if (seen[p]) continue;
    uint64_t len = 0;
    for (int q = static_cast<int>(p); !seen[q]; q = img_[q]) {
      seen[q] = 1;
      ++len;
    }
    ord = lcm_checked(ord, len);
  }
  return ord;
}

uint64_t Perm::hash() const {
  return fnv1a64(img_.data(), img_.size() * sizeof(int));
}

std::string Perm::print_cycles() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (size_t p = 0; p < img_.size(); ++p) {
    if (seen[p] || img_[p] == static_cast<int>(p)) continue;
    out += '(';
    bool first = true;
    for (int q = static_cast<int>(p); !seen[q]; q = img_[q]) {
      seen[q] = 1;
      if (!first) out += ' ';
      out += std::to_string(q + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::string Perm::print_images() const {
  std::string out = "[";
  for (size_t p = 0; p < img_.size(); ++p) {
    if (p) out += ',';
    out += std::to_string(img_[p] + 1);
  }
  out += ']';
  return out;
}

}  // namespace gf
