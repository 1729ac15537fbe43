#include "gradedring/finring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "gradedring/error.hpp"

namespace gradedring {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::string format_poly(const std::vector<std::int64_t>& coeffs, std::string_view var) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::int64_t checked_power(std::int64_t base, std::size_t exp) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > static_cast<std::int64_t>(kMaxCarrier)) return r;
  }
  return r;
}

FinRing build_cyclic(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::MalformedSpec, "Cyclic(n) requires n >= 2, got " + std::to_string(n));
  if (n > static_cast<std::int64_t>(kMaxCarrier))
    throw Error(ErrorKind::MalformedSpec, "carrier size " + std::to_string(n) + " exceeds 4096");
  FinRing::Ops ops;
  ops.add = [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); };
  ops.mul = [n](Elem a, Elem b) { return static_cast<Elem>((std::int64_t{a} * b) % n); };
  ops.neg = [n](Elem a) { return static_cast<Elem>((n - a) % n); };
  ops.format = [](Elem a) { return std::to_string(a); };
  ops.parse = [n](std::string_view text) -> std::optional<Elem> {
    const auto c = parse_univariate(text, "");
    return static_cast<Elem>(mod(c.empty() ? 0 : c[0], n));
  };
  return FinRing::from_ops(static_cast<std::size_t>(n), 0, 1, std::move(ops), to_string(RingSpec{Cyclic{n}}));
}

FinRing build_gauss(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::MalformedSpec, "GaussMod(n) requires n >= 2, got " + std::to_string(n));
  if (n * n > static_cast<std::int64_t>(kMaxCarrier))
    throw Error(ErrorKind::MalformedSpec, "carrier size " + std::to_string(n * n) + " exceeds 4096");
  auto split = [n](Elem x) { return std::pair<std::int64_t, std::int64_t>{x % n, x / n}; };
  auto join = [n](std::int64_t a, std::int64_t b) { return static_cast<Elem>(mod(a, n) + n * mod(b, n)); };
  FinRing::Ops ops;
  ops.add = [=](Elem x, Elem y) {
    auto [a, b] = split(x);
    auto [c, d] = split(y);
    return join(a + c, b + d);
  };
  ops.mul = [=](Elem x, Elem y) {
    auto [a, b] = split(x);
    auto [c, d] = split(y);
    return join(a * c - b * d, a * d + b * c);
  };
  ops.neg = [=](Elem x) {
    auto [a, b] = split(x);
    return join(-a, -b);
  };
  ops.format = [=](Elem x) {
    auto [a, b] = split(x);
    std::string out;
    if (a != 0) out = std::to_string(a);
    if (b != 0) {
      if (!out.empty()) out += '+';
      out += b == 1 ? "i" : std::to_string(b) + "*i";
    }
    return out.empty() ? std::string("0") : out;
  };
  ops.parse = [=](std::string_view text) -> std::optional<Elem> {
    const auto c = parse_univariate(text, "i");
    // i^k cycles through 1, i, -1, -i.
    std::int64_t a = 0, b = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto v = mod(c[k], n);
      switch (k % 4) {
        case 0: a += v; break;
        case 1: b += v; break;
        case 2: a -= v; break;
        case 3: b -= v; break;
      }
    }
    return join(a, b);
  };
  return FinRing::from_ops(static_cast<std::size_t>(n * n), 0, 1, std::move(ops), to_string(RingSpec{GaussMod{n}}));
}

FinRing build_poly_quotient(const PolyQuotient& spec) {
  const auto p = spec.p;
  if (!is_prime_number(p))
    throw Error(ErrorKind::MalformedSpec, "PolyQuotient base must be Cyclic(p) with p prime, got " + std::to_string(p));
  std::vector<std::int64_t> modulus;
  for (auto c : spec.modulus) modulus.push_back(mod(c, p));
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw Error(ErrorKind::MalformedSpec, "PolyQuotient modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(ErrorKind::MalformedSpec, "PolyQuotient modulus must be monic");
  const std::size_t d = modulus.size() - 1;
  const auto size = checked_power(p, d);
  if (size > static_cast<std::int64_t>(kMaxCarrier))
    throw Error(ErrorKind::MalformedSpec, "carrier size p^d exceeds 4096");

  auto decode = [p, d](Elem x) {
    std::vector<std::int64_t> c(d);
    for (std::size_t k = 0; k < d; ++k) {
      c[k] = x % p;
      x /= static_cast<Elem>(p);
    }
    return c;
  };
  auto encode = [p](const std::vector<std::int64_t>& c) {
    Elem x = 0;
    for (auto k = c.size(); k-- > 0;) x = static_cast<Elem>(x * p + mod(c[k], p));
    return x;
  };
  // Reduces a coefficient vector of arbitrary length modulo the monic modulus.
  auto reduce = [p, d, modulus](std::vector<std::int64_t> c) {
    for (auto k = c.size(); k-- > d;) {
      const auto lead = mod(c[k], p);
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= d; ++j) c[k - d + j] = mod(c[k - d + j] - lead * modulus[j], p);
    }
    c.resize(d);
    for (auto& v : c) v = mod(v, p);
    return c;
  };

  FinRing::Ops ops;
  ops.add = [=](Elem x, Elem y) {
    auto a = decode(x);
    const auto b = decode(y);
    for (std::size_t k = 0; k < d; ++k) a[k] += b[k];
    return encode(a);
  };
  ops.mul = [=](Elem x, Elem y) {
    const auto a = decode(x);
    const auto b = decode(y);
    std::vector<std::int64_t> prod(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], p);
    return encode(reduce(std::move(prod)));
  };
  ops.neg = [=](Elem x) {
    auto a = decode(x);
    for (auto& v : a) v = -v;
    return encode(a);
  };
  ops.format = [=](Elem x) { return format_poly(decode(x), "u"); };
  ops.parse = [=](std::string_view text) -> std::optional<Elem> {
    auto c = parse_univariate(text, "u");
    if (c.size() < d) c.resize(d, 0);
    return encode(reduce(std::move(c)));
  };
  return FinRing::from_ops(static_cast<std::size_t>(size), 0, 1, std::move(ops),
                           to_string(RingSpec{PolyQuotient{p, modulus}}));
}

}  // namespace

std::string to_string(const RingSpec& spec) {
  struct Visitor {
    std::string operator()(const Cyclic& c) const { return "Cyclic(" + std::to_string(c.n) + ")"; }
    std::string operator()(const GaussMod& g) const { return "GaussMod(" + std::to_string(g.n) + ")"; }
    std::string operator()(const PolyQuotient& q) const {
      std::vector<std::int64_t> normalized;
      for (auto c : q.modulus) normalized.push_back(q.p > 0 ? mod(c, q.p) : c);
      return "PolyQuotient(Cyclic(" + std::to_string(q.p) + "), " + format_poly(normalized, "u") + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> parse_univariate(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](const std::string& why) -> std::vector<std::int64_t> {
    throw Error(ErrorKind::ParseError, "cannot parse element '" + std::string(text) + "': " + why);
  };
  if (s.empty()) return fail("empty expression");

  std::map<std::size_t, std::int64_t> terms;
  std::size_t pos = 0;
  auto read_int = [&](std::int64_t& out) {
    const auto start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    if (pos - start > 15) fail("integer literal too long");
    out = std::stoll(s.substr(start, pos - start));
    return true;
  };
  bool first = true;
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    std::int64_t coef = 1;
    const bool has_coef = read_int(coef);
    std::size_t exp = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coef) fail("dangling '*' at offset " + std::to_string(pos));
      ++pos;
      if (var.empty() || s.compare(pos, var.size(), var) != 0) fail("expected variable after '*'");
    }
    if (!var.empty() && s.compare(pos, var.size(), var) == 0) {
      pos += var.size();
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::int64_t e = 0;
        if (!read_int(e)) fail("expected exponent at offset " + std::to_string(pos));
        exp = static_cast<std::size_t>(e);
      }
    } else if (!has_coef) {
      fail("unexpected character at offset " + std::to_string(pos));
    }
    if (exp > 64) fail("exponent too large");
    terms[exp] += sign * coef;
  }
  std::vector<std::int64_t> out(terms.empty() ? 1 : terms.rbegin()->first + 1, 0);
  for (auto [e, c] : terms) out[e] += c;
  return out;
}

FinRing FinRing::from_ops(std::size_t size, Elem zero, Elem one, Ops ops, std::string provenance) {
  if (size < 2) throw Error(ErrorKind::MalformedSpec, "carrier must have at least two elements (nonzero unity)");
  if (size > kMaxCarrier) throw Error(ErrorKind::MalformedSpec, "carrier size " + std::to_string(size) + " exceeds 4096");
  if (zero == one) throw Error(ErrorKind::MalformedSpec, "zero ring rejected: 1 == 0");
  if (zero >= size || one >= size) throw Error(ErrorKind::MalformedSpec, "distinguished element out of range");

  auto impl = std::make_shared<Impl>();
  impl->size = size;
  impl->zero = zero;
  impl->one = one;
  impl->ops = std::move(ops);
  impl->provenance = std::move(provenance);
  impl->neg_table.resize(size);
  for (Elem a = 0; a < size; ++a) impl->neg_table[a] = impl->ops.neg(a);
  if (size <= kTableLimit) {
    impl->add_table.resize(size * size);
    impl->mul_table.resize(size * size);
    for (Elem a = 0; a < size; ++a)
      for (Elem b = 0; b < size; ++b) {
        impl->add_table[a * size + b] = impl->ops.add(a, b);
        impl->mul_table[a * size + b] = impl->ops.mul(a, b);
      }
  }

  FinRing ring{impl};
  if (size <= kAxiomScanLimit) {
    if (auto violation = check_ring_axioms(ring))
      throw Error(ErrorKind::MalformedSpec, ring.provenance() + " violates ring axioms: " + *violation);
  }

  impl->inverse.assign(size, kNone);
  impl->nilpotent.assign(size, 0);
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b)
      if (ring.mul(a, b) == one) {
        impl->inverse[a] = b;
        break;
      }
    Elem power = a;
    for (std::size_t k = 1; k <= size; ++k) {
      if (power == zero) {
        impl->nilpotent[a] = 1;
        break;
      }
      power = ring.mul(power, a);
    }
  }
  return ring;
}

Elem FinRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one();
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> FinRing::inverse(Elem a) const {
  if (impl_->inverse[a] == kNone) return std::nullopt;
  return impl_->inverse[a];
}

Elem FinRing::parse(std::string_view text) const {
  auto result = impl_->ops.parse(text);
  if (!result || *result >= size())
    throw Error(ErrorKind::ParseError, "'" + std::string(text) + "' is not an element of " + provenance());
  return *result;
}

FinRing build_ring(const RingSpec& spec) {
  struct Visitor {
    FinRing operator()(const Cyclic& c) const { return build_cyclic(c.n); }
    FinRing operator()(const GaussMod& g) const { return build_gauss(g.n); }
    FinRing operator()(const PolyQuotient& q) const { return build_poly_quotient(q); }
  };
  return std::visit(Visitor{}, spec);
}

FinRing table_ring(std::string name, std::vector<std::string> elements, const std::vector<std::vector<Elem>>& add,
                   const std::vector<std::vector<Elem>>& mul) {
  const auto n = elements.size();
  if (n < 2) throw Error(ErrorKind::MalformedSpec, "a table ring needs at least two elements");
  if (n > kAxiomScanLimit)
    throw Error(ErrorKind::MalformedSpec, "table rings are limited to " + std::to_string(kAxiomScanLimit) + " elements");
  for (const auto* table : {&add, &mul}) {
    if (table->size() != n) throw Error(ErrorKind::MalformedSpec, "operation table must have one row per element");
    for (const auto& row : *table) {
      if (row.size() != n) throw Error(ErrorKind::MalformedSpec, "operation table must be square");
      for (auto v : row)
        if (v >= n) throw Error(ErrorKind::MalformedSpec, "table entry " + std::to_string(v) + " out of range");
    }
  }
  auto identity_of = [n](const std::vector<std::vector<Elem>>& t) -> std::optional<Elem> {
    for (Elem e = 0; e < n; ++e) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) ok = t[e][x] == x;
      if (ok) return e;
    }
    return std::nullopt;
  };
  const auto zero = identity_of(add);
  const auto one = identity_of(mul);
  if (!zero || !one) throw Error(ErrorKind::MalformedSpec, "operation table has no identity element");
  constexpr auto kMissing = static_cast<Elem>(-1);
  std::vector<Elem> neg(n, kMissing);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (add[x][y] == *zero) neg[x] = y;
  if (std::find(neg.begin(), neg.end(), kMissing) != neg.end())
    throw Error(ErrorKind::MalformedSpec, "addition table has an element without a negative");

  std::map<std::string, Elem> index;
  for (Elem x = 0; x < n; ++x)
    if (!index.emplace(elements[x], x).second)
      throw Error(ErrorKind::MalformedSpec, "duplicate element name '" + elements[x] + "'");

  FinRing::Ops ops;
  ops.add = [add](Elem x, Elem y) { return add[x][y]; };
  ops.mul = [mul](Elem x, Elem y) { return mul[x][y]; };
  ops.neg = [neg](Elem x) { return neg[x]; };
  ops.format = [elements](Elem x) { return elements[x]; };
  ops.parse = [index](std::string_view text) -> std::optional<Elem> {
    const auto it = index.find(std::string(text));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  return FinRing::from_ops(n, *zero, *one, std::move(ops), "Table(" + name + ")");
}

std::vector<Elem> unit_set(const FinRing& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a)
    if (ring.is_unit(a)) out.push_back(a);
  return out;
}

std::vector<Elem> nilradical(const FinRing& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a)
    if (ring.is_nilpotent(a)) out.push_back(a);
  return out;
}

bool is_zero_divisor(const FinRing& ring, Elem a) {
  if (a == ring.zero()) return false;
  for (Elem b = 0; b < ring.size(); ++b)
    if (b != ring.zero() && ring.mul(a, b) == ring.zero()) return true;
  return false;
}

std::optional<std::string> check_ring_axioms(const FinRing& ring) {
  const auto n = static_cast<Elem>(ring.size());
  const auto z = ring.zero();
  const auto one = ring.one();
  auto show = [&](std::initializer_list<Elem> xs) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto x : xs) {
      os << (first ? "" : ", ") << ring.format(x);
      first = false;
    }
    os << ")";
    return os.str();
  };
  for (Elem a = 0; a < n; ++a) {
    if (ring.add(a, z) != a) return "zero is not additive identity at " + show({a});
    if (ring.add(a, ring.neg(a)) != z) return "negation fails at " + show({a});
    if (ring.mul(a, one) != a) return "one is not multiplicative identity at " + show({a});
    for (Elem b = 0; b < n; ++b) {
      if (ring.add(a, b) >= n || ring.mul(a, b) >= n) return "operation leaves the carrier at " + show({a, b});
      if (ring.add(a, b) != ring.add(b, a)) return "addition not commutative at " + show({a, b});
      if (ring.mul(a, b) != ring.mul(b, a)) return "multiplication not commutative at " + show({a, b});
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto ab_add = ring.add(a, b);
      const auto ab_mul = ring.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (ring.add(ab_add, c) != ring.add(a, ring.add(b, c))) return "addition not associative at " + show({a, b, c});
        if (ring.mul(ab_mul, c) != ring.mul(a, ring.mul(b, c)))
          return "multiplication not associative at " + show({a, b, c});
        if (ring.mul(a, ring.add(b, c)) != ring.add(ab_mul, ring.mul(a, c)))
          return "distributivity fails at " + show({a, b, c});
      }
    }
  return std::nullopt;
}

}  // namespace gradedring
