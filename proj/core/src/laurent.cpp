#include "rankdual/laurent.hpp"

#include "rankdual/ground.hpp"

namespace rankdual {

LaurentPoly2::LaurentPoly2(Coefficient c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

LaurentPoly2 LaurentPoly2::monomial(Exponents e, Coefficient c) {
  LaurentPoly2 p;
  p.add_term(e, c);
  return p;
}

LaurentPoly2::Coefficient LaurentPoly2::coefficient(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

bool LaurentPoly2::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    if (e.t < 0 || e.z < 0) return false;
  }
  return true;
}

void LaurentPoly2::add_term(Exponents e, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked_sub(0, c));
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({checked_add(ea.t, eb.t), checked_add(ea.z, eb.z)}, checked_mul(ca, cb));
    }
  }
  return out;
}

LaurentPoly2 LaurentPoly2::scaled(Exponents e, Coefficient c) const {
  LaurentPoly2 out;
  if (c == 0) return out;
  for (const auto& [et, ct] : terms_) {
    out.terms_.emplace(Exponents{checked_add(et.t, e.t), checked_add(et.z, e.z)}, checked_mul(ct, c));
  }
  return out;
}

LaurentPoly2 LaurentPoly2::swap_vars() const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.z, e.t}, c);
  return out;
}

namespace {

void append_power(std::string& out, char var, std::int64_t exp) {
  out += var;
  if (exp != 1) {
    out += '^';
    out += std::to_string(exp);
  }
}

}  // namespace

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const bool constant = e.t == 0 && e.z == 0;
    std::string body;
    if (mag != 1 || constant) body = std::to_string(mag);
    if (e.t != 0) {
      if (!body.empty()) body += '*';
      append_power(body, 't', e.t);
    }
    if (e.z != 0) {
      if (!body.empty()) body += '*';
      append_power(body, 'z', e.z);
    }
    out += body;
  }
  return out;
}

}  // namespace rankdual
