#include "redop/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace redop {

namespace {

// Enumerating every word up to a length is exponential; keep a hard cap so a
// misconfigured truncation fails loudly instead of exhausting memory.
constexpr std::size_t kEnumerationCap = 2'000'000;

bool valid_identifier(std::string_view name) {
  if (name.empty())
    return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

} // namespace

MonomialContext::MonomialContext(Setting setting, Mode mode,
                                 std::vector<std::string> variables)
    : setting_(setting), mode_(mode), variables_(std::move(variables)) {}

ContextPtr MonomialContext::make(Setting setting, Mode mode,
                                 std::vector<std::string> variables) {
  if (variables.empty())
    throw Error("context requires at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_identifier(v))
      throw Error("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw Error("duplicate variable '" + v + "'");
  }
  return ContextPtr(new MonomialContext(setting, mode, std::move(variables)));
}

bool MonomialContext::compatible(const MonomialContext& other) const {
  return mode_ == other.mode_ && same_alphabet(other);
}

bool MonomialContext::same_alphabet(const MonomialContext& other) const {
  return setting_ == other.setting_ && variables_ == other.variables_;
}

ContextPtr MonomialContext::with_mode(Mode mode) const {
  if (mode == mode_)
    return ContextPtr(new MonomialContext(*this));
  return make(setting_, mode, variables_);
}

Monomial MonomialContext::unit() const {
  Monomial m;
  if (setting_ == Setting::commutative)
    m.data.assign(variables_.size(), 0);
  return m;
}

bool MonomialContext::is_unit(const Monomial& m) const {
  return degree(m) == 0;
}

Monomial MonomialContext::variable_monomial(std::size_t index) const {
  if (index >= variables_.size())
    throw Error("variable index out of range");
  Monomial m = unit();
  if (setting_ == Setting::commutative)
    m.data[index] = 1;
  else
    m.data.push_back(static_cast<std::uint32_t>(index));
  return m;
}

std::optional<std::size_t> MonomialContext::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name)
      return i;
  return std::nullopt;
}

void MonomialContext::check(const Monomial& m) const {
  if (setting_ == Setting::commutative) {
    if (m.data.size() != variables_.size())
      throw Error("monomial does not belong to this context");
  } else {
    for (auto letter : m.data)
      if (letter >= variables_.size())
        throw Error("monomial does not belong to this context");
  }
}

int MonomialContext::degree(const Monomial& m) const {
  check(m);
  if (setting_ == Setting::noncommutative)
    return static_cast<int>(m.data.size());
  return std::accumulate(m.data.begin(), m.data.end(), 0);
}

int MonomialContext::cmp_deglex(const Monomial& a, const Monomial& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db)
    return da < db ? -1 : 1;
  if (setting_ == Setting::commutative) {
    // Variable 0 has the highest precedence; more of a higher variable wins.
    for (std::size_t i = 0; i < a.data.size(); ++i) {
      if (a.data[i] != b.data[i])
        return a.data[i] < b.data[i] ? -1 : 1;
    }
    return 0;
  }
  // Equal length words: letter with the smaller index is the larger variable.
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    if (a.data[i] != b.data[i])
      return a.data[i] < b.data[i] ? 1 : -1;
  }
  return 0;
}

int MonomialContext::cmp_ord(const Monomial& a, const Monomial& b) const {
  const int c = cmp_deglex(a, b);
  return mode_ == Mode::discrete ? c : -c;
}

Monomial MonomialContext::mul(const Monomial& a, const Monomial& b) const {
  check(a);
  check(b);
  Monomial out;
  if (setting_ == Setting::commutative) {
    out.data.resize(a.data.size());
    for (std::size_t i = 0; i < a.data.size(); ++i)
      out.data[i] = a.data[i] + b.data[i];
  } else {
    out.data = a.data;
    out.data.insert(out.data.end(), b.data.begin(), b.data.end());
  }
  return out;
}

Monomial MonomialContext::pow(const Monomial& m, unsigned e) const {
  Monomial out = unit();
  for (unsigned i = 0; i < e; ++i)
    out = mul(out, m);
  return out;
}

bool MonomialContext::divides(const Monomial& d, const Monomial& m) const {
  check(d);
  check(m);
  if (setting_ == Setting::commutative) {
    for (std::size_t i = 0; i < d.data.size(); ++i)
      if (d.data[i] > m.data[i])
        return false;
    return true;
  }
  if (d.data.empty())
    return true;
  if (d.data.size() > m.data.size())
    return false;
  return std::search(m.data.begin(), m.data.end(), d.data.begin(), d.data.end()) !=
         m.data.end();
}

Monomial MonomialContext::quotient(const Monomial& m, const Monomial& d) const {
  if (setting_ != Setting::commutative)
    throw Error("monomial quotient is only defined in the commutative setting");
  if (!divides(d, m))
    throw Error("monomial quotient: '" + str(d) + "' does not divide '" + str(m) + "'");
  Monomial out;
  out.data.resize(m.data.size());
  for (std::size_t i = 0; i < m.data.size(); ++i)
    out.data[i] = m.data[i] - d.data[i];
  return out;
}

Monomial MonomialContext::lcm(const Monomial& a, const Monomial& b) const {
  if (setting_ != Setting::commutative)
    throw Error("monomial lcm is only defined in the commutative setting");
  check(a);
  check(b);
  Monomial out;
  out.data.resize(a.data.size());
  for (std::size_t i = 0; i < a.data.size(); ++i)
    out.data[i] = std::max(a.data[i], b.data[i]);
  return out;
}

int MonomialContext::d_exponent(const Monomial& m) const {
  return mode_ == Mode::discrete ? 0 : degree(m);
}

std::vector<Monomial> MonomialContext::monomials_up_to(int max_degree) const {
  if (max_degree < 0)
    throw Error("negative degree bound");
  std::vector<Monomial> out;
  if (setting_ == Setting::commutative) {
    Monomial current = unit();
    // Depth-first over exponent vectors with bounded total degree.
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
      if (var == variables_.size()) {
        out.push_back(current);
        return;
      }
      for (int e = 0; e <= remaining; ++e) {
        current.data[var] = static_cast<std::uint32_t>(e);
        self(self, var + 1, remaining - e);
      }
      current.data[var] = 0;
    };
    rec(rec, 0, max_degree);
  } else {
    std::vector<Monomial> level{unit()};
    out.push_back(level.front());
    for (int len = 1; len <= max_degree; ++len) {
      std::vector<Monomial> next;
      for (const auto& w : level) {
        for (std::uint32_t letter = 0; letter < variables_.size(); ++letter) {
          Monomial m = w;
          m.data.push_back(letter);
          next.push_back(std::move(m));
        }
      }
      if (out.size() + next.size() > kEnumerationCap)
        throw Error("word enumeration exceeds the supported size; lower the truncation");
      out.insert(out.end(), next.begin(), next.end());
      level = std::move(next);
    }
  }
  std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) {
    return cmp_deglex(a, b) < 0;
  });
  return out;
}

std::vector<Monomial> MonomialContext::multiples_up_to(const Monomial& m,
                                                       int max_degree) const {
  if (setting_ != Setting::commutative)
    throw Error("multiples_up_to is only defined in the commutative setting");
  check(m);
  std::vector<Monomial> out;
  const int base = degree(m);
  if (base > max_degree)
    return out;
  for (const auto& cofactor : monomials_up_to(max_degree - base))
    out.push_back(mul(m, cofactor));
  std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) {
    return cmp_deglex(a, b) < 0;
  });
  return out;
}

std::string MonomialContext::str(const Monomial& m) const {
  check(m);
  if (degree(m) == 0)
    return "1";
  std::string out;
  if (setting_ == Setting::commutative) {
    for (std::size_t i = 0; i < m.data.size(); ++i) {
      if (m.data[i] == 0)
        continue;
      if (!out.empty())
        out += '*';
      out += variables_[i];
      if (m.data[i] > 1) {
        out += '^';
        out += std::to_string(m.data[i]);
      }
    }
  } else {
    for (auto letter : m.data)
      out += variables_[letter];
  }
  return out;
}

} // namespace redop
