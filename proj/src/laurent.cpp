#include "mosaickit/laurent.hpp"

#include "mosaickit/error.hpp"

#include <algorithm>
#include <charconv>

namespace mosaickit {

LaurentPoly::LaurentPoly(int mindeg, std::vector<std::int64_t> coeffs)
    : mindeg_(mindeg), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int degree) {
  return LaurentPoly(degree, {c});
}

void LaurentPoly::trim() {
  const auto first = std::ranges::find_if(coeffs_, [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    mindeg_ = 0;
    return;
  }
  mindeg_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t LaurentPoly::coeff(int degree) const {
  const int k = degree - mindeg_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

namespace {

LaurentPoly add_scaled(const LaurentPoly& a, const LaurentPoly& b, std::int64_t sign) {
  if (a.is_zero()) return sign * b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.mindeg(), b.mindeg());
  const int hi = std::max(a.maxdeg(), b.maxdeg());
  std::vector<std::int64_t> out(hi - lo + 1, 0);
  for (int d = lo; d <= hi; ++d) out[d - lo] = a.coeff(d) + sign * b.coeff(d);
  return LaurentPoly(lo, std::move(out));
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = add_scaled(*this, o, 1); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = add_scaled(*this, o, -1); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.mindeg_ + b.mindeg_, std::move(out));
}

LaurentPoly operator*(std::int64_t s, LaurentPoly p) {
  for (auto& c : p.coeffs_) c *= s;
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.mindeg_ += k;
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-maxdeg(), std::move(rev));
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative exponent");
  LaurentPoly out = constant(1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  if (auto c = a.mindeg_ <=> b.mindeg_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(),
                                                b.coeffs_.begin(), b.coeffs_.end());
}

std::string LaurentPoly::to_string() const {
  std::string s = std::to_string(mindeg_) + ":";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(coeffs_[k]);
  }
  return s;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("polynomial must look like 'mindeg:c0,c1,...'");
  auto read = [](std::string_view tok) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw ParseError("invalid polynomial coefficient '" + std::string(tok) + "'");
    }
    return v;
  };
  const int mindeg = static_cast<int>(read(text.substr(0, colon)));
  std::vector<std::int64_t> coeffs;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    coeffs.push_back(read(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return LaurentPoly(mindeg, std::move(coeffs));
}

}  // namespace mosaickit
