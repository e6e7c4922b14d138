#include "nalen/examples.hpp"

namespace nalen {

namespace {

StructureConstant sc(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) { return {i, j, k, c}; }

std::vector<std::string> numbered(const std::string& prefix, std::size_t from, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(from + i));
  return out;
}

}  // namespace

Algebra make_group_algebra_z2n(std::size_t n, std::size_t cap) {
  if (n < 1) fail(ErrorCode::domain_error, "need n >= 1");
  if (n > cap) fail(ErrorCode::resource_limit, "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  const FieldSpec f = FieldSpec::prime(2);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<StructureConstant> entries;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < dim; ++x) {
    std::string bits;
    for (std::size_t b = n; b-- > 0;) bits += ((x >> b) & 1) ? '1' : '0';
    labels.push_back("e" + bits);
    for (std::size_t y = 0; y < dim; ++y) entries.push_back(sc(x, y, x ^ y, Scalar::one(f)));
  }
  return Algebra(f, dim, entries, Element::basis(f, dim, 0), labels);
}

Algebra make_a_flex(const FieldSpec& f) {
  const Scalar one = Scalar::one(f);
  return Algebra(f, 5, {sc(0, 0, 4, one), sc(0, 1, 2, one), sc(0, 2, 3, one), sc(1, 4, 3, -one)}, std::nullopt,
                 numbered("e", 1, 5));
}

Algebra make_a_alt(const FieldSpec& f) {
  const Scalar one = Scalar::one(f);
  return Algebra(f, 5, {sc(0, 0, 4, one), sc(0, 2, 3, one), sc(1, 0, 2, one), sc(1, 4, 3, -one)}, std::nullopt,
                 numbered("f", 1, 5));
}

Algebra make_spin_factor(std::size_t n, const FieldSpec& f) {
  if (n < 1) fail(ErrorCode::domain_error, "need n >= 1");
  const Scalar one = Scalar::one(f);
  std::vector<StructureConstant> entries;
  for (std::size_t i = 0; i <= n; ++i) {
    entries.push_back(sc(0, i, i, one));
    if (i > 0) {
      entries.push_back(sc(i, 0, i, one));
      entries.push_back(sc(i, i, 0, one));
    }
  }
  std::vector<std::string> labels{"u"};
  for (auto& l : numbered("v", 1, n)) labels.push_back(l);
  return Algebra(f, n + 1, entries, Element::basis(f, n + 1, 0), labels);
}

Algebra make_matrix_algebra(std::size_t n, const FieldSpec& f) {
  if (n < 1) fail(ErrorCode::domain_error, "need n >= 1");
  if (n > 6) fail(ErrorCode::resource_limit, "matrix algebras are capped at n = 6");
  const std::size_t dim = n * n;
  const Scalar one = Scalar::one(f);
  std::vector<StructureConstant> entries;
  std::vector<std::string> labels;
  Element unity(f, dim);
  for (std::size_t i = 0; i < n; ++i) {
    unity[i * n + i] = one;
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) entries.push_back(sc(i * n + j, j * n + l, i * n + l, one));
    }
  }
  return Algebra(f, dim, entries, unity, labels);
}

Algebra make_chain3(const FieldSpec& f) {
  const Scalar one = Scalar::one(f);
  return Algebra(f, 3, {sc(0, 0, 1, one), sc(1, 0, 2, one)}, std::nullopt, {"a", "b", "c"});
}

Algebra make_nil3(const FieldSpec& f) {
  return Algebra(f, 3, {sc(0, 0, 1, Scalar::one(f))}, std::nullopt, {"a", "b", "c"});
}

Algebra make_unital_hull(const Algebra& a) {
  if (a.unital()) fail(ErrorCode::already_unital, "algebra already has a unity");
  const FieldSpec& f = a.field();
  const std::size_t n = a.dim(), e = a.dim();
  const Scalar one = Scalar::one(f);
  std::vector<StructureConstant> entries = a.structure_constants();
  entries.push_back(sc(e, e, e, one));
  for (std::size_t i = 0; i < n; ++i) {
    entries.push_back(sc(e, i, i, one));
    entries.push_back(sc(i, e, i, one));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(a.label(i));
  labels.push_back("e");
  return Algebra(f, n + 1, entries, Element::basis(f, n + 1, e), labels);
}

namespace {

using Vec = std::vector<Scalar>;

struct Doubling {
  FieldSpec f;
  std::vector<Scalar> gammas;

  Vec conj(std::size_t level, const Vec& x) const {
    if (level == 0) return x;
    const std::size_t h = x.size() / 2;
    Vec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    Vec out = conj(level - 1, a);
    for (auto& c : b) out.push_back(-c);
    return out;
  }

  Vec add(Vec x, const Vec& y) const {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
  }

  Vec scale(const Scalar& g, Vec x) const {
    for (auto& c : x) c = g * c;
    return x;
  }

  Vec mul(std::size_t level, const Vec& x, const Vec& y) const {
    if (level == 0) return {x[0] * y[0]};
    const std::size_t h = x.size() / 2;
    Vec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    Vec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    const std::size_t l = level - 1;
    Vec lo = add(mul(l, a, c), scale(gammas[l], mul(l, conj(l, d), b)));
    Vec hi = add(mul(l, d, a), mul(l, b, conj(l, c)));
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
  }
};

}  // namespace

Algebra make_cayley_dickson(const FieldSpec& f, std::size_t level, const std::vector<Scalar>& gammas) {
  if (level > 4) fail(ErrorCode::domain_error, "doubling level is capped at 4");
  if (gammas.size() != level) fail(ErrorCode::domain_error, "need one gamma per doubling level");
  for (const auto& g : gammas) {
    if (!(g.field() == f)) fail(ErrorCode::field_mismatch, "gamma over " + g.field().name());
    if (g.is_zero()) fail(ErrorCode::domain_error, "gammas must be nonzero");
  }
  const std::size_t dim = std::size_t{1} << level;
  Doubling db{f, gammas};
  std::vector<StructureConstant> entries;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vec p = db.mul(level, Element::basis(f, dim, i).coords(), Element::basis(f, dim, j).coords());
      for (std::size_t k = 0; k < dim; ++k)
        if (!p[k].is_zero()) entries.push_back(sc(i, j, k, p[k]));
    }
  return Algebra(f, dim, entries, Element::basis(f, dim, 0));
}

const char* to_string(TwistSide s) {
  switch (s) {
    case TwistSide::left: return "left";
    case TwistSide::right: return "right";
    case TwistSide::both: return "both";
  }
  return "?";
}

Algebra twist_conjugation(const Algebra& a, TwistSide side) {
  const FieldSpec& f = a.field();
  if (!a.unital() || !(*a.unity() == Element::basis(f, a.dim(), 0)))
    fail(ErrorCode::domain_error, "conjugation twist needs b_1 to be the unity");
  auto sign = [&](std::size_t i, bool conj) { return conj && i != 0 ? -Scalar::one(f) : Scalar::one(f); };
  const bool cl = side != TwistSide::right, cr = side != TwistSide::left;
  std::vector<StructureConstant> entries;
  for (const auto& e : a.structure_constants())
    entries.push_back(sc(e.i, e.j, e.k, sign(e.i, cl) * sign(e.j, cr) * e.c));
  return Algebra(f, a.dim(), entries, std::nullopt, a.labels());
}

std::vector<std::string> example_names() {
  return {"z2n", "aflex", "aalt", "spin", "matrix", "chain3", "nil3", "cd"};
}

}  // namespace nalen
