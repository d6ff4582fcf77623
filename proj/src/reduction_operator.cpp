#include "redop/reduction_operator.hpp"

#include <algorithm>
#include <map>

#include "redop/dense.hpp"

namespace redop {

namespace {

// Strictly descending rewriting order, for pivot tables.
struct OrdDesc {
  const MonomialContext* ctx;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ctx->cmp_ord(a, b) > 0;
  }
};

using PivotTable = std::map<Monomial, Series, OrdDesc>;

// Fully reduces v against the table. Table tails never contain heads, so
// each substitution only introduces fixed monomials below the eliminated one.
Series reduce_by_table(Series v, const PivotTable& table, int truncation) {
  v = v.truncated(truncation);
  while (true) {
    const Series::Term* hit = nullptr;
    for (const auto& t : v.terms()) {
      if (table.count(t.first)) {
        hit = &t;
        break;
      }
    }
    if (!hit)
      return v;
    const Series& tail = table.at(hit->first);
    const Scalar c = hit->second;
    v = v + (tail - Series::monomial(v.context(), hit->first, 1, truncation)).scaled(c);
  }
}

} // namespace

ReductionOperator ReductionOperator::identity(ContextPtr ctx, int truncation) {
  if (truncation < 0)
    throw Error("negative truncation");
  return ReductionOperator(std::move(ctx), truncation, {});
}

ReductionOperator ReductionOperator::from_kernel(const std::vector<Series>& generators,
                                                 const ContextPtr& ctx,
                                                 int truncation) {
  if (truncation < 0)
    throw Error("negative truncation");
  PivotTable table(OrdDesc{ctx.get()});
  for (const auto& gen : generators) {
    if (!gen.context() || !gen.context()->compatible(*ctx))
      throw Error("context mismatch");
    if (gen.is_zero())
      throw Error("zero generator in kernel family");
    if (gen.precision() && *gen.precision() < truncation)
      throw Error("generator precision " + std::to_string(*gen.precision()) +
                  " is below the truncation " + std::to_string(truncation));
    Series v = reduce_by_table(gen.truncated(truncation), table, truncation);
    if (v.is_zero())
      continue; // dependent on earlier generators, or supported beyond the bound
    v = v.scaled(v.leading_coefficient().reciprocal());
    const Monomial head = v.leading_monomial();
    Series tail = Series::monomial(ctx, head, 1, truncation) - v;
    // Back-substitution keeps every stored tail free of the new head.
    for (auto& [h, t] : table) {
      const Scalar c = t.coefficient(head);
      if (c.is_zero())
        continue;
      t = t + (tail - Series::monomial(ctx, head, 1, truncation)).scaled(c);
    }
    table.emplace(head, std::move(tail));
  }
  std::vector<Rule> rules;
  rules.reserve(table.size());
  for (auto& [head, tail] : table)
    rules.push_back(Rule{head, tail});
  return ReductionOperator(ctx, truncation, std::move(rules));
}

ReductionOperator ReductionOperator::from_rules(ContextPtr ctx, int truncation,
                                                std::vector<Rule> rules) {
  if (truncation < 0)
    throw Error("negative truncation");
  std::sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) {
    return ctx->cmp_ord(a.head, b.head) > 0;
  });
  for (std::size_t i = 0; i < rules.size(); ++i) {
    auto& rule = rules[i];
    if (ctx->degree(rule.head) > truncation)
      throw Error("rule head exceeds the truncation");
    if (i + 1 < rules.size() && rules[i + 1].head == rule.head)
      throw Error("duplicate rule head");
    rule.tail = rule.tail.truncated(truncation);
    for (const auto& [m, c] : rule.tail.terms())
      if (ctx->cmp_ord(m, rule.head) >= 0)
        throw Error("rule tail is not below its head");
  }
  ReductionOperator op(std::move(ctx), truncation, std::move(rules));
  for (const auto& rule : op.rules_)
    for (const auto& [m, c] : rule.tail.terms())
      if (op.is_head(m))
        throw Error("rule table is not inter-reduced");
  return op;
}

bool ReductionOperator::is_head(const Monomial& m) const {
  return tail(m) != nullptr;
}

const Series* ReductionOperator::tail(const Monomial& m) const {
  const auto* raw = ctx_.get();
  auto it = std::lower_bound(rules_.begin(), rules_.end(), m,
                             [raw](const Rule& r, const Monomial& mono) {
                               return raw->cmp_ord(r.head, mono) > 0;
                             });
  if (it != rules_.end() && it->head == m)
    return &it->tail;
  return nullptr;
}

Series ReductionOperator::apply(const Series& v) const {
  if (!v.context() || !v.context()->compatible(*ctx_))
    throw Error("context mismatch");
  const Precision out_precision = min_precision(v.precision(), truncation_);
  std::vector<Series::Term> out;
  for (const auto& [m, c] : v.truncated(truncation_).terms()) {
    if (const Series* t = tail(m)) {
      for (const auto& [tm, tc] : t->terms())
        out.emplace_back(tm, tc * c);
    } else {
      out.emplace_back(m, c);
    }
  }
  return Series::from_terms(ctx_, std::move(out), out_precision);
}

bool ReductionOperator::kernel_member(const Series& v) const {
  if (v.precision() && *v.precision() < truncation_)
    throw Error("precision mismatch: series known to degree " +
                std::to_string(*v.precision()) + ", operator truncated at " +
                std::to_string(truncation_));
  return apply(v).is_zero();
}

std::vector<Series> ReductionOperator::kernel_elements() const {
  std::vector<Series> out;
  out.reserve(rules_.size());
  for (const auto& rule : rules_)
    out.push_back(Series::monomial(ctx_, rule.head, 1, truncation_) - rule.tail);
  return out;
}

std::vector<Monomial> ReductionOperator::normal_monomials() const {
  std::vector<Monomial> out;
  for (const auto& m : ctx_->monomials_up_to(truncation_))
    if (!is_head(m))
      out.push_back(m);
  return out;
}

bool operator==(const ReductionOperator& a, const ReductionOperator& b) {
  if (!a.ctx_->compatible(*b.ctx_) || a.truncation_ != b.truncation_ ||
      a.rules_.size() != b.rules_.size())
    return false;
  for (std::size_t i = 0; i < a.rules_.size(); ++i) {
    if (a.rules_[i].head != b.rules_[i].head ||
        a.rules_[i].tail.terms() != b.rules_[i].tail.terms())
      return false;
  }
  return true;
}

ReductionOperator meet(std::span<const ReductionOperator> ops) {
  if (ops.empty())
    throw Error("meet of an empty family");
  const auto& front = ops.front();
  std::vector<Series> kernel;
  for (const auto& op : ops) {
    if (!op.context()->compatible(*front.context()) ||
        op.truncation() != front.truncation())
      throw Error("meet requires a shared context and truncation");
    for (auto& e : op.kernel_elements())
      kernel.push_back(std::move(e));
  }
  return ReductionOperator::from_kernel(kernel, front.context(), front.truncation());
}

ReductionOperator meet(const ReductionOperator& a, const ReductionOperator& b) {
  const ReductionOperator ops[] = {a, b};
  return meet(std::span<const ReductionOperator>(ops));
}

ReductionOperator join(const ReductionOperator& a, const ReductionOperator& b) {
  if (!a.context()->compatible(*b.context()) || a.truncation() != b.truncation())
    throw Error("join requires a shared context and truncation");
  const std::vector<Series> ka = a.kernel_elements();
  const std::vector<Series> kb = b.kernel_elements();
  if (ka.empty() || kb.empty())
    return ReductionOperator::identity(a.context(), a.truncation());

  // Coordinates over the union of the supports; a vector lies in both kernels
  // iff it is a combination of ka that equals a combination of kb.
  std::map<Monomial, std::size_t> index;
  for (const auto* basis : {&ka, &kb})
    for (const auto& v : *basis)
      for (const auto& [m, c] : v.terms())
        index.emplace(m, 0);
  std::size_t next = 0;
  for (auto& [m, i] : index)
    i = next++;

  DenseMatrix mat(index.size(), ka.size() + kb.size());
  for (std::size_t j = 0; j < ka.size(); ++j)
    for (const auto& [m, c] : ka[j].terms())
      mat.at(index.at(m), j) = c;
  for (std::size_t j = 0; j < kb.size(); ++j)
    for (const auto& [m, c] : kb[j].terms())
      mat.at(index.at(m), ka.size() + j) = -c;

  std::vector<Series> intersection;
  for (const auto& combo : mat.null_space()) {
    Series v = Series::zero(a.context(), a.truncation());
    for (std::size_t j = 0; j < ka.size(); ++j)
      if (!combo[j].is_zero())
        v = v + ka[j].scaled(combo[j]);
    if (!v.is_zero())
      intersection.push_back(std::move(v));
  }
  if (intersection.empty())
    return ReductionOperator::identity(a.context(), a.truncation());
  return ReductionOperator::from_kernel(intersection, a.context(), a.truncation());
}

OrderRel compare(const ReductionOperator& a, const ReductionOperator& b) {
  if (!a.context()->compatible(*b.context()) || a.truncation() != b.truncation())
    throw Error("compare requires a shared context and truncation");
  bool b_kernel_in_a = true;
  for (const auto& e : b.kernel_elements())
    if (!a.kernel_member(e)) {
      b_kernel_in_a = false;
      break;
    }
  bool a_kernel_in_b = true;
  for (const auto& e : a.kernel_elements())
    if (!b.kernel_member(e)) {
      a_kernel_in_b = false;
      break;
    }
  if (b_kernel_in_a && a_kernel_in_b)
    return OrderRel::equal;
  if (b_kernel_in_a)
    return OrderRel::less;
  if (a_kernel_in_b)
    return OrderRel::greater;
  return OrderRel::incomparable;
}

} // namespace redop
