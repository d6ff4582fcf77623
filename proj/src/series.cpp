#include "redop/series.hpp"

#include <algorithm>
#include <map>

namespace redop {

Precision min_precision(Precision a, Precision b) {
  if (!a)
    return b;
  if (!b)
    return a;
  return std::min(*a, *b);
}

bool within_precision(int degree, Precision p) {
  return !p || degree <= *p;
}

Scalar Delta::upper_bound() const {
  switch (kind) {
  case Kind::zero:
    return Scalar(0);
  case Kind::value:
    return Scalar::pow2(-exponent);
  case Kind::below_resolution:
    return Scalar::pow2(-(exponent + 1));
  }
  throw Error("corrupt delta");
}

bool Delta::at_most(const Scalar& eps) const {
  if (kind == Kind::zero)
    return true;
  return upper_bound() <= eps;
}

std::string Delta::str() const {
  switch (kind) {
  case Kind::zero:
    return "0";
  case Kind::value:
    if (exponent == 0)
      return "1";
    return "2^-" + std::to_string(exponent);
  case Kind::below_resolution:
    return "<=2^-" + std::to_string(exponent + 1);
  }
  throw Error("corrupt delta");
}

Series Series::zero(ContextPtr ctx, Precision precision) {
  return Series(std::move(ctx), {}, precision);
}

Series Series::monomial(ContextPtr ctx, const Monomial& m, Scalar coeff,
                        Precision precision) {
  return from_terms(std::move(ctx), {{m, std::move(coeff)}}, precision);
}

Series Series::constant(ContextPtr ctx, Scalar coeff, Precision precision) {
  Monomial unit = ctx->unit();
  return from_terms(std::move(ctx), {{unit, std::move(coeff)}}, precision);
}

Series Series::from_terms(ContextPtr ctx, std::vector<Term> terms,
                          Precision precision) {
  if (!ctx)
    throw Error("series without context");
  std::map<Monomial, Scalar> merged;
  for (auto& [m, c] : terms) {
    if (c.is_zero())
      continue;
    if (!within_precision(ctx->degree(m), precision))
      continue;
    auto [it, inserted] = merged.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        merged.erase(it);
    }
  }
  std::vector<Term> out(merged.begin(), merged.end());
  const auto* raw = ctx.get();
  std::sort(out.begin(), out.end(), [raw](const Term& a, const Term& b) {
    return raw->cmp_ord(a.first, b.first) > 0;
  });
  return Series(std::move(ctx), std::move(out), precision);
}

void Series::require_compatible(const Series& other) const {
  if (!ctx_ || !other.ctx_ || !ctx_->compatible(*other.ctx_))
    throw Error("context mismatch");
}

Scalar Series::coefficient(const Monomial& g) const {
  if (!within_precision(ctx_->degree(g), precision_))
    throw Error("unknown coefficient: degree " + std::to_string(ctx_->degree(g)) +
                " exceeds precision " + std::to_string(*precision_));
  const auto* raw = ctx_.get();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [raw](const Term& t, const Monomial& m) {
                               return raw->cmp_ord(t.first, m) > 0;
                             });
  if (it != terms_.end() && it->first == g)
    return it->second;
  return Scalar(0);
}

const Series::Term& Series::leading_term() const {
  if (terms_.empty())
    throw Error("the zero series has no leading term");
  return terms_.front();
}

int Series::degree() const {
  int out = -1;
  for (const auto& [m, c] : terms_)
    out = std::max(out, ctx_->degree(m));
  return out;
}

Series Series::truncated(Precision precision) const {
  Precision p = min_precision(precision_, precision);
  if (p == precision_)
    return *this;
  std::vector<Term> kept;
  kept.reserve(terms_.size());
  for (const auto& t : terms_)
    if (within_precision(ctx_->degree(t.first), p))
      kept.push_back(t);
  return Series(ctx_, std::move(kept), p);
}

Series Series::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& [m, c] : out)
    c = -c;
  return Series(ctx_, std::move(out), precision_);
}

Series Series::scaled(const Scalar& c) const {
  if (c.is_zero())
    return Series(ctx_, {}, precision_);
  std::vector<Term> out = terms_;
  for (auto& [m, coeff] : out)
    coeff *= c;
  return Series(ctx_, std::move(out), precision_);
}

Series Series::times_monomial(const Monomial& m, const Scalar& coeff) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [g, c] : terms_)
    out.emplace_back(ctx_->mul(g, m), c * coeff);
  return from_terms(ctx_, std::move(out), precision_);
}

Series Series::monomial_times(const Monomial& m, const Scalar& coeff) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [g, c] : terms_)
    out.emplace_back(ctx_->mul(m, g), c * coeff);
  return from_terms(ctx_, std::move(out), precision_);
}

Series operator+(const Series& a, const Series& b) {
  a.require_compatible(b);
  std::vector<Series::Term> out = a.terms_;
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return Series::from_terms(a.ctx_, std::move(out),
                            min_precision(a.precision_, b.precision_));
}

Series operator-(const Series& a, const Series& b) {
  return a + (-b);
}

Series operator*(const Series& a, const Series& b) {
  a.require_compatible(b);
  std::vector<Series::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.emplace_back(a.ctx_->mul(ma, mb), ca * cb);
  return Series::from_terms(a.ctx_, std::move(out),
                            min_precision(a.precision_, b.precision_));
}

Series Series::pow(unsigned e) const {
  Series out = Series::constant(ctx_, 1, precision_);
  for (unsigned i = 0; i < e; ++i)
    out = out * *this;
  return out;
}

bool Series::same_series(const Series& other) const {
  require_compatible(other);
  return precision_ == other.precision_ && terms_ == other.terms_;
}

bool Series::same_known_terms(const Series& other) const {
  require_compatible(other);
  Precision p = min_precision(precision_, other.precision_);
  return truncated(p).terms_ == other.truncated(p).terms_;
}

std::string Series::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = c;
    if (first) {
      if (a.is_negative()) {
        out += "-";
        a = -a;
      }
      first = false;
    } else {
      if (a.is_negative()) {
        out += " - ";
        a = -a;
      } else {
        out += " + ";
      }
    }
    const bool unit = ctx_->is_unit(m);
    if (a.is_one() && !unit) {
      out += ctx_->str(m);
    } else {
      out += a.str();
      if (!unit) {
        out += '*';
        out += ctx_->str(m);
      }
    }
  }
  return out;
}

Delta metric_delta(const Series& u, const Series& v) {
  const Series diff = u - v; // checks compatibility, clamps precision
  if (!diff.is_zero()) {
    int best = 0;
    bool seen = false;
    for (const auto& [m, c] : diff.terms()) {
      const int e = diff.context()->d_exponent(m);
      if (!seen || e < best) {
        best = e;
        seen = true;
      }
    }
    return Delta::value(best);
  }
  if (!diff.precision())
    return Delta::zero();
  return Delta::below_resolution(*diff.precision());
}

std::vector<Monomial> support_above(const Series& v, const Scalar& eps) {
  if (!(eps > Scalar(0)))
    throw Error("support threshold must be positive");
  std::vector<Monomial> out;
  for (const auto& [m, c] : v.terms()) {
    const Scalar d = Scalar::pow2(-v.context()->d_exponent(m));
    if (d >= eps)
      out.push_back(m);
  }
  const auto* raw = v.context().get();
  std::sort(out.begin(), out.end(), [raw](const Monomial& a, const Monomial& b) {
    return raw->cmp_deglex(a, b) < 0;
  });
  return out;
}

} // namespace redop
