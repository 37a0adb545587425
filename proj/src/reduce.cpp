#include "dioph/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

namespace {

// Divide a row by its content and make the leading nonzero entry positive.
// Returns the signed factor f with row_in = f * row_out.
Int normalize_row(std::array<Int, 3>& row) {
  Int g = gcd(gcd(row[0], row[1]), row[2]);
  if (g == 0) return 1;
  Int lead = 0;
  for (const Int& v : row)
    if (v != 0) {
      lead = v;
      break;
    }
  if (lead < 0) g = -g;
  for (Int& v : row) v /= g;
  return g;
}

struct Quad {
  // Coefficient vector (x^2, xy, y^2, x, y, 1) of a quadratic polynomial.
  std::array<Int, 6> c;
};

Quad expand_square(const std::array<Int, 3>& row) {
  const Int &p = row[0], &q = row[1], &r = row[2];
  return {{p * p, 2 * p * q, q * q, 2 * p * r, 2 * q * r, r * r}};
}

bool identity_holds(const Int& m, const GeneralQuadratic& gq, const Int& a,
                    const std::array<Int, 3>& u, const Int& b, const std::array<Int, 3>& v,
                    const Int& c) {
  Quad lhs{{m * gq.A, m * gq.B, m * gq.C, m * gq.D, m * gq.E, m * gq.F}};
  Quad uu = expand_square(u);
  Quad vv = expand_square(v);
  for (int i = 0; i < 6; ++i) {
    Int rhs = a * uu.c[i] + b * vv.c[i] + (i == 5 ? c : Int(0));
    if (lhs.c[i] != rhs) return false;
  }
  return true;
}

void invert_transform(AffineTransform& t) {
  const Int &s1 = t.u_row[0], &s2 = t.u_row[1], &s3 = t.u_row[2];
  const Int &t1 = t.v_row[0], &t2 = t.v_row[1], &t3 = t.v_row[2];
  Int det = s1 * t2 - s2 * t1;
  if (det == 0) throw std::logic_error("reduction produced a singular substitution");
  // (x, y) = inv([[s1,s2],[t1,t2]]) * (u - s3, v - t3)
  t.x_num = {t2, -s2, -t2 * s3 + s2 * t3};
  t.x_den = det;
  t.y_num = {-t1, s1, t1 * s3 - s1 * t3};
  t.y_den = det;
  auto fix = [](std::array<Int, 3>& num, Int& den) {
    Int g = gcd(gcd(gcd(num[0], num[1]), num[2]), den);
    if (den < 0) g = -g;
    for (Int& v : num) v /= g;
    den /= g;
  };
  fix(t.x_num, t.x_den);
  fix(t.y_num, t.y_den);
}

ReducedForm reduce_oriented(const GeneralQuadratic& gq) {
  // 4A f = (2Ax + By + D)^2 + (4AC - B^2) y^2 + (4AE - 2BD) y + (4AF - D^2),
  // then complete the square in y and clear common factors.
  const Int &A = gq.A, &B = gq.B, &C = gq.C, &D = gq.D, &E = gq.E, &F = gq.F;
  Int A2 = 4 * A * C - B * B;
  Int B2 = 4 * A * E - 2 * B * D;
  Int C2 = 4 * A * F - D * D;

  AffineTransform t;
  t.u_row = {2 * A, B, D};
  Int g1 = normalize_row(t.u_row);
  t.v_row = {0, 2 * A2, B2};
  Int g2 = normalize_row(t.v_row);

  // 16 A A2 f = 4 A2 g1^2 u^2 + g2^2 v^2 + (4 A2 C2 - B2^2)
  Int ca = 4 * A2 * g1 * g1;
  Int cb = g2 * g2;
  Int cc = 4 * A2 * C2 - B2 * B2;
  Int m = 16 * A * A2;

  Int g = gcd(gcd(gcd(ca, cb), cc), m);
  if (m < 0) g = -g;
  ca /= g;
  cb /= g;
  cc /= g;
  m /= g;

  ReducedForm rf{ca, cb, cc, t};
  rf.transform.multiplier = m;
  // Indefinite targets follow the printed shape: positive coefficient first.
  if (rf.a < 0 && rf.b > 0) {
    std::swap(rf.a, rf.b);
    std::swap(rf.transform.u_row, rf.transform.v_row);
  }
  invert_transform(rf.transform);

  if (!identity_holds(rf.transform.multiplier, gq, rf.a, rf.transform.u_row, rf.b,
                      rf.transform.v_row, rf.c))
    throw std::logic_error("reduction identity check failed");
  return rf;
}

}  // namespace

PellEquation ReducedForm::as_pell() const {
  if (!indefinite()) throw std::logic_error("as_pell requires an indefinite target");
  return PellEquation(a, -b, c);
}

std::string ReducedForm::target_str() const {
  std::string out;
  auto term = [&out](const Int& coeff, const char* sym, bool leading) {
    if (coeff == 0) return;
    Int ac = abs(coeff);
    if (leading)
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    if (ac != 1 || sym[0] == '\0') {
      out += ac.get_str();
      if (sym[0] != '\0') out += " ";
    }
    out += sym;
  };
  term(a, "u^2", true);
  term(b, "v^2", false);
  term(c, "", false);
  out += " = 0";
  return out;
}

ReducedForm reduce(const GeneralQuadratic& gq) {
  if (gq.B * gq.B - 4 * gq.A * gq.C == 0)
    throw DegenerateConicError("degenerate conic: B^2 - 4AC = 0");
  if (gq.A != 0) return reduce_oriented(gq);
  if (gq.C != 0) {
    // Swap the variables, reduce, then swap the roles back.
    GeneralQuadratic sw(gq.C, gq.B, gq.A, gq.E, gq.D, gq.F);
    ReducedForm rf = reduce_oriented(sw);
    auto swap_cols = [](std::array<Int, 3>& row) { std::swap(row[0], row[1]); };
    swap_cols(rf.transform.u_row);
    swap_cols(rf.transform.v_row);
    std::swap(rf.transform.x_num, rf.transform.y_num);
    std::swap(rf.transform.x_den, rf.transform.y_den);
    return rf;
  }
  throw DegenerateConicError("unsupported conic: A = C = 0 (xy-hyperbola form)");
}

std::optional<Solution> back_substitute(const AffineTransform& t, const Solution& uv) {
  Int xn = t.x_num[0] * uv.x + t.x_num[1] * uv.y + t.x_num[2];
  Int yn = t.y_num[0] * uv.x + t.y_num[1] * uv.y + t.y_num[2];
  if (xn % t.x_den != 0 || yn % t.y_den != 0) return std::nullopt;
  return Solution{xn / t.x_den, yn / t.y_den};
}

bool coset_preservation_check(const ReducedForm& rf, const Automorphism& aut) {
  const AffineTransform& t = rf.transform;
  Int L = lcm(t.x_den, t.y_den);
  Mat2 m = aut.matrix();
  auto integral_residue = [&](const Int& u, const Int& v) {
    Int xn = t.x_num[0] * u + t.x_num[1] * v + t.x_num[2];
    Int yn = t.y_num[0] * u + t.y_num[1] * v + t.y_num[2];
    return xn % t.x_den == 0 && yn % t.y_den == 0;
  };
  auto solution_compatible = [&](const Int& u, const Int& v) {
    return (rf.a * u * u + rf.b * v * v + rf.c) % L == 0;
  };
  for (Int u = 0; u < L; ++u)
    for (Int v = 0; v < L; ++v) {
      if (!integral_residue(u, v) || !solution_compatible(u, v)) continue;
      Int u2 = (m.m00 * u + m.m01 * v) % L;
      Int v2 = (m.m10 * u + m.m11 * v) % L;
      if (u2 < 0) u2 += L;
      if (v2 < 0) v2 += L;
      if (!integral_residue(u2, v2)) return false;
    }
  return true;
}

AffineAutomorphism affine_automorphism(const ReducedForm& rf, const Automorphism& aut) {
  const AffineTransform& t = rf.transform;
  if (!coset_preservation_check(rf, aut))
    throw std::invalid_argument("reduced automorphism does not preserve the integrality coset");
  Mat3Q fwd;
  fwd.m = {{{Rat(t.u_row[0]), Rat(t.u_row[1]), Rat(t.u_row[2])},
            {Rat(t.v_row[0]), Rat(t.v_row[1]), Rat(t.v_row[2])},
            {Rat(0), Rat(0), Rat(1)}}};
  Mat3Q inv;
  inv.m = {{{make_rat(t.x_num[0], t.x_den), make_rat(t.x_num[1], t.x_den),
             make_rat(t.x_num[2], t.x_den)},
            {make_rat(t.y_num[0], t.y_den), make_rat(t.y_num[1], t.y_den),
             make_rat(t.y_num[2], t.y_den)},
            {Rat(0), Rat(0), Rat(1)}}};
  Mat2 a = aut.matrix();
  Mat3Q lift;
  lift.m = {{{Rat(a.m00), Rat(a.m01), Rat(0)},
             {Rat(a.m10), Rat(a.m11), Rat(0)},
             {Rat(0), Rat(0), Rat(1)}}};
  return AffineAutomorphism{inv * lift * fwd};
}

std::optional<Solution> AffineAutomorphism::apply(const Solution& s) const {
  auto r = matrix.apply({Rat(s.x), Rat(s.y), Rat(1)});
  if (!is_integer(r[0]) || !is_integer(r[1])) return std::nullopt;
  return Solution{Int(r[0].get_num()), Int(r[1].get_num())};
}

}  // namespace dioph
