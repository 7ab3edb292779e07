#include "ssddh/ffpoly.hpp"

#include <algorithm>

namespace ssddh {

namespace {

// Splits g, a product of distinct linear factors, into its roots.
void split_linear(const FqPoly& g, Rng& rng, std::vector<FieldElement>& out) {
  const int n = g.degree();
  if (n <= 0) return;
  const FieldElement& zero = g.zero_element();
  if (n == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const FieldPtr& field = zero.field();
  const Int& Q = field->order();
  const bool char2 = field->characteristic() == 2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    const FieldElement delta = FieldElement::from_index(field, rng.below(Q));
    FqPoly h(zero);
    if (char2) {
      // Trace polynomial sum_{i<n} (delta x)^(2^i) splits roots by absolute trace.
      const unsigned bits = field->degree();
      FqPoly term = FqPoly(zero, {zero, delta}) % g;
      FqPoly acc = term;
      for (unsigned i = 1; i < bits; ++i) {
        term = (term * term) % g;
        acc += term;
      }
      h = gcd(g, acc);
    } else {
      FqPoly lin(zero, {delta, zero.one_like()});
      FqPoly pw = lin.powmod((Q - 1) / 2, g);
      h = gcd(g, pw - FqPoly::constant(zero.one_like()));
    }
    if (h.degree() > 0 && h.degree() < n) {
      split_linear(h, rng, out);
      split_linear(g / h, rng, out);
      return;
    }
  }
  throw InternalError("root splitting did not converge");
}

}  // namespace

std::vector<FieldElement> poly_roots(const FqPoly& f) {
  if (f.is_zero()) throw ArgumentError("poly_roots: zero polynomial");
  std::vector<FieldElement> roots;
  if (f.degree() == 0) return roots;
  const FieldElement& zero = f.zero_element();
  const FieldPtr& field = zero.field();
  const Int& Q = field->order();
  if (Q <= kExhaustiveRootScanLimit) {
    for (Int i = 0; i < Q; ++i) {
      FieldElement x = FieldElement::from_index(field, i);
      if (f(x).is_zero()) roots.push_back(std::move(x));
    }
  } else {
    const FqPoly monic = f.monic();
    const FqPoly x = FqPoly::x(zero);
    const FqPoly xq = x.powmod(Q, monic);
    const FqPoly g = gcd(monic, xq - x);
    Rng rng(0x7007ULL);
    split_linear(g, rng, roots);
  }
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

bool is_irreducible(const FqPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FieldElement& zero = f.zero_element();
  const Int& Q = zero.field()->order();
  const FqPoly monic = f.monic();
  const FqPoly x = FqPoly::x(zero);
  FqPoly h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = h.powmod(Q, monic);
    if (gcd(monic, h - x).degree() > 0) return false;
  }
  return true;
}

std::vector<std::pair<unsigned, FqPoly>> distinct_degree_factorization(const FqPoly& f) {
  std::vector<std::pair<unsigned, FqPoly>> out;
  if (f.degree() < 1) return out;
  const FieldElement& zero = f.zero_element();
  const Int& Q = zero.field()->order();
  FqPoly rest = f.monic();
  const FqPoly x = FqPoly::x(zero);
  FqPoly h = x;
  for (unsigned d = 1; rest.degree() >= static_cast<int>(2 * d); ++d) {
    h = h.powmod(Q, rest);
    FqPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      rest = rest / g;
      h = h % rest;
      out.emplace_back(d, g);
    }
  }
  if (rest.degree() > 0) out.emplace_back(static_cast<unsigned>(rest.degree()), rest);
  return out;
}

namespace {

void check_embeddable(const FieldPtr& from, const FieldPtr& to) {
  if (from->characteristic() != to->characteristic() || to->degree() % from->degree() != 0) {
    throw ArgumentError("no embedding " + from->to_string() + " -> " + to->to_string());
  }
}

}  // namespace

std::vector<FieldElement> generator_images(const FieldPtr& from, const FieldPtr& to) {
  check_embeddable(from, to);
  if (from->degree() == 1) return {FieldElement::zero(to)};  // F_p = F_p[t]/(t)
  std::vector<FieldElement> mod;
  for (const auto& c : from->modulus()) mod.push_back(FieldElement::from_int(to, c));
  return poly_roots(FqPoly(FieldElement::zero(to), std::move(mod)));
}

Embedding::Embedding(const FieldPtr& from, const FieldPtr& to) : from_(from), to_(to) {
  check_embeddable(from, to);
  FieldElement image;
  if (same_field(from, to)) {
    image = FieldElement::generator(to);
  } else {
    auto roots = generator_images(from, to);
    if (roots.empty()) throw InternalError("source modulus has no root in target field");
    image = roots.front();
  }
  *this = Embedding(from, to, image);
}

Embedding::Embedding(const FieldPtr& from, const FieldPtr& to, const FieldElement& image) : from_(from), to_(to) {
  FieldElement acc = FieldElement::one(to);
  for (unsigned i = 0; i < from->degree(); ++i) {
    powers_.push_back(acc);
    acc *= image;
  }
}

Embedding Embedding::with_image(const FieldPtr& from, const FieldPtr& to, const FieldElement& image) {
  check_embeddable(from, to);
  if (!same_field(image.field(), to)) throw ArgumentError("embedding image outside target field");
  FieldElement acc = FieldElement::zero(to);
  const auto& mod = from->modulus();
  for (size_t i = mod.size(); i-- > 0;) acc = acc * image + FieldElement::from_int(to, mod[i]);
  if (!acc.is_zero()) throw ArgumentError("embedding image is not a root of the source modulus");
  return Embedding(from, to, image);
}

Embedding compatible_embedding(const Embedding& base_to_mid, const Embedding& base_to_top) {
  if (!same_field(base_to_mid.source(), base_to_top.source())) {
    throw ArgumentError("compatible_embedding: different base fields");
  }
  const FieldPtr& mid = base_to_mid.target();
  const FieldPtr& top = base_to_top.target();
  const FieldElement g = FieldElement::generator(base_to_mid.source());
  const FieldElement in_mid = base_to_mid.lift(g);
  const FieldElement in_top = base_to_top.lift(g);
  for (const auto& image : generator_images(mid, top)) {
    const Embedding e = Embedding::with_image(mid, top, image);
    if (e.lift(in_mid) == in_top) return e;
  }
  throw InternalError("no compatible embedding found");
}

FieldElement Embedding::lift(const FieldElement& x) const {
  if (!same_field(x.field(), from_)) throw ArgumentError("Embedding::lift: element not in source field");
  FieldElement acc = FieldElement::zero(to_);
  for (size_t i = 0; i < powers_.size(); ++i) {
    if (x.coeffs()[i] != 0) acc += powers_[i] * FieldElement::from_int(to_, x.coeffs()[i]);
  }
  return acc;
}

FqPoly Embedding::lift(const FqPoly& f) const {
  std::vector<FieldElement> c;
  for (const auto& a : f.coeffs()) c.push_back(lift(a));
  return FqPoly(FieldElement::zero(to_), std::move(c));
}

std::optional<FieldElement> Embedding::restrict(const FieldElement& z) const {
  if (!same_field(z.field(), to_)) throw ArgumentError("Embedding::restrict: element not in target field");
  const Int& p = to_->characteristic();
  const size_t a = powers_.size();
  const size_t c = to_->degree();
  // Rows = target coordinates, columns = source coordinates plus rhs.
  std::vector<std::vector<Int>> m(c, std::vector<Int>(a + 1));
  for (size_t r = 0; r < c; ++r) {
    for (size_t j = 0; j < a; ++j) m[r][j] = powers_[j].coeffs()[r];
    m[r][a] = z.coeffs()[r];
  }
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < a && row < c; ++col) {
    size_t piv = row;
    while (piv < c && m[piv][col] == 0) ++piv;
    if (piv == c) continue;
    std::swap(m[piv], m[row]);
    const Int inv = inverse_mod(m[row][col], p);
    for (auto& v : m[row]) v = mod(v * inv, p);
    for (size_t r = 0; r < c; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Int f = m[r][col];
      for (size_t k = 0; k <= a; ++k) m[r][k] = mod(m[r][k] - f * m[row][k], p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < c; ++r)
    if (m[r][a] != 0) return std::nullopt;
  std::vector<Int> x(a, Int(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][a];
  return FieldElement::from_coeffs(from_, std::move(x));
}

FieldPtr extension_of(const FieldPtr& base, unsigned k) {
  if (k == 1) return base;
  return FieldDesc::extension(base->characteristic(), base->degree() * k);
}

}  // namespace ssddh
