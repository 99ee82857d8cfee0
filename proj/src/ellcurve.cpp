#include "ellrmt/ellcurve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <stdexcept>

namespace ellrmt::ellcurve {

namespace {

using i128 = __int128;

i64 checked_i64(i128 v, const char* what) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw std::overflow_error(std::string("overflow in ") + what);
  return static_cast<i64>(v);
}

i64 mod_pos(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(i128(a) * b % m);
}

i64 powmod(i64 base, i64 exp, i64 m) {
  i64 r = 1 % m;
  base = mod_pos(base, m);
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Legendre symbol for odd prime p.
int legendre(i64 a, i64 p) {
  a = mod_pos(a, p);
  if (a == 0) return 0;
  i64 e = powmod(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int valuation(i64 n, i64 p) {
  if (n == 0) return 1 << 30;  // "infinite"
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r = checked_i64(i128(r) * b, "ipow");
  return r;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 0) n = -n;
  std::vector<std::pair<i64, int>> out;
  if (n <= 1) return out;
  for (i64 p : {i64(2), i64(3)}) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    if (v) out.push_back({p, v});
  }
  for (i64 p = 5; p * p <= n; p += (p % 6 == 5) ? 2 : 4) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    if (v) out.push_back({p, v});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

}  // namespace

i64 discriminant(const Curve& c) {
  i128 core = 4 * i128(c.a) * c.a * c.a + 27 * i128(c.b) * c.b;
  i64 d = checked_i64(-16 * core, "discriminant");
  if (d == 0) throw std::invalid_argument("discriminant: singular curve (a, b)");
  return d;
}

i64 Model::b2() const { return a1 * a1 + 4 * a2; }
i64 Model::b4() const { return 2 * a4 + a1 * a3; }
i64 Model::b6() const { return a3 * a3 + 4 * a6; }
i64 Model::b8() const {
  i128 v = i128(a1) * a1 * a6 + 4 * i128(a2) * a6 - i128(a1) * a3 * a4 +
           i128(a2) * a3 * a3 - i128(a4) * a4;
  return checked_i64(v, "b8");
}
i64 Model::c4() const { return checked_i64(i128(b2()) * b2() - 24 * i128(b4()), "c4"); }
i64 Model::c6() const {
  i128 v = -i128(b2()) * b2() * b2() + 36 * i128(b2()) * b4() - 216 * i128(b6());
  return checked_i64(v, "c6");
}
i64 Model::disc() const {
  i128 v = -i128(b2()) * b2() * b8() - 8 * i128(b4()) * b4() * b4() -
           27 * i128(b6()) * b6() + 9 * i128(b2()) * b4() * b6();
  return checked_i64(v, "disc");
}

namespace {

// Kraus: (c4, c6) with c4^3 - c6^2 = 1728 Delta, Delta != 0, arises from an
// integral model iff v3(c6) != 2 and (c6 = -1 mod 4, or 16 | c4 and
// c6 = 0 or 8 mod 32).
bool kraus_ok(i64 c4, i64 c6) {
  if (c6 != 0 && valuation(c6, 3) == 2) return false;
  if (mod_pos(c6, 4) == 3) return true;
  if ((c4 == 0 || valuation(c4, 2) >= 4)) {
    i64 r = mod_pos(c6, 32);
    if (r == 0 || r == 8) return true;
  }
  return false;
}

Model model_from_c4c6(i64 c4, i64 c6) {
  // Connell's restore: b2 = -c6 mod 12 in [-5, 6]
  i64 b2 = mod_pos(-c6, 12);
  if (b2 > 6) b2 -= 12;
  if ((b2 * b2 - c4) % 24 != 0)
    throw std::logic_error("model_from_c4c6: b2 inconsistent with c4");
  i64 b4 = (b2 * b2 - c4) / 24;
  i128 b6n = -i128(b2) * b2 * b2 + 36 * i128(b2) * b4 - c6;
  if (b6n % 216 != 0) throw std::logic_error("model_from_c4c6: b6 not integral");
  i64 b6 = checked_i64(b6n / 216, "b6");
  Model m;
  m.a1 = mod_pos(b2, 2);
  m.a2 = (b2 - m.a1) / 4;
  m.a3 = mod_pos(b6, 2);
  m.a4 = (b4 - m.a1 * m.a3) / 2;
  m.a6 = (b6 - m.a3) / 4;
  if (m.c4() != c4 || m.c6() != c6)
    throw std::logic_error("model_from_c4c6: reconstruction failed");
  return m;
}

}  // namespace

Model minimal_model(const Curve& c) {
  discriminant(c);  // validates nonsingularity
  i64 c4 = -48 * c.a;
  i64 c6 = -864 * c.b;
  // Laska-Kraus-Connell: largest u = prod p^dp with (c4/u^4, c6/u^6) integral
  // and Kraus-admissible.
  i128 disc128 = (i128(c4) * c4 * c4 - i128(c6) * c6) / 1728;
  i64 delta = checked_i64(disc128, "delta");
  for (auto [p, vd] : factorize(delta)) {
    int dp = std::min({valuation(c4, p) / 4, valuation(c6, p) / 6, vd / 12});
    if (p == 2 || p == 3) {
      while (dp > 0 && !kraus_ok(c4 / ipow(p, 4 * dp), c6 / ipow(p, 6 * dp)))
        --dp;
    }
    if (dp > 0) {
      c4 /= ipow(p, 4 * dp);
      c6 /= ipow(p, 6 * dp);
    }
  }
  return model_from_c4c6(c4, c6);
}

namespace {

Model translate(const Model& m, i64 r, i64 s, i64 t) {
  Model n;
  n.a1 = m.a1 + 2 * s;
  n.a2 = m.a2 - s * m.a1 + 3 * r - s * s;
  n.a3 = checked_i64(i128(m.a3) + r * i128(m.a1) + 2 * t, "translate a3");
  n.a4 = checked_i64(i128(m.a4) - s * i128(m.a3) + 2 * r * i128(m.a2) -
                         (i128(t) + i128(r) * s) * m.a1 + 3 * i128(r) * r -
                         2 * i128(s) * t,
                     "translate a4");
  n.a6 = checked_i64(i128(m.a6) + r * i128(m.a4) + i128(r) * r * m.a2 +
                         i128(r) * r * r - t * i128(m.a3) - i128(t) * t -
                         i128(r) * t * m.a1,
                     "translate a6");
  return n;
}

// Tate's algorithm at p in {2, 3} on a p-minimal model.
LocalData tate_small_prime(Model m, i64 p) {
  LocalData out;
  int n = valuation(m.disc(), p);
  if (n == 0) {
    out.type = Reduction::Good;
    out.kodaira = "I0";
    return out;
  }
  // move the singular point of the reduction to the origin
  {
    bool found = false;
    for (i64 r = 0; r < p && !found; ++r)
      for (i64 t = 0; t < p && !found; ++t) {
        Model cand = translate(m, r, 0, t);
        if (mod_pos(cand.a3, p) == 0 && mod_pos(cand.a4, p) == 0 &&
            mod_pos(cand.a6, p) == 0) {
          m = cand;
          found = true;
        }
      }
    if (!found) throw std::logic_error("tate: singular point not found");
  }
  if (mod_pos(m.b2(), p) != 0) {
    // multiplicative: I_n
    out.kodaira_n = n;
    out.kodaira = "I" + std::to_string(n);
    out.f = 1;
    bool split = false;
    for (i64 u = 0; u < p; ++u)
      if (mod_pos(u * u + m.a1 * u - m.a2, p) == 0) split = true;
    out.type = split ? Reduction::MultSplit : Reduction::MultNonsplit;
    return out;
  }
  out.type = Reduction::Additive;
  if (valuation(m.a6, p) < 2) {
    out.kodaira = "II";
    out.f = n;
    return out;
  }
  if (valuation(m.b8(), p) < 3) {
    out.kodaira = "III";
    out.f = n - 1;
    return out;
  }
  if (valuation(m.b6(), p) < 3) {
    out.kodaira = "IV";
    out.f = n - 2;
    return out;
  }
  // normalize: p | a1, a2;  p^2 | a3, a4;  p^3 | a6
  {
    bool found = false;
    i64 p3 = p * p * p;
    for (i64 s = 0; s < p && !found; ++s)
      for (i64 t = 0; t < p3 && !found; ++t) {
        Model cand = translate(m, 0, s, t);
        if (mod_pos(cand.a1, p) == 0 && mod_pos(cand.a2, p) == 0 &&
            mod_pos(cand.a3, p * p) == 0 && mod_pos(cand.a4, p * p) == 0 &&
            mod_pos(cand.a6, p3) == 0) {
          m = cand;
          found = true;
        }
      }
    if (!found) throw std::logic_error("tate: step-6 normalization failed");
  }
  // cubic T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) over F_p
  i64 ca = mod_pos(m.a2 / p, p);
  i64 cb = mod_pos(m.a4 / (p * p), p);
  i64 cc = mod_pos(m.a6 / (p * p * p), p);
  auto cubic = [&](i64 x) { return mod_pos(((x + ca) * x + cb) * x + cc, p); };
  // A repeated root of a cubic over F_p always lies in F_p (its conjugate
  // would otherwise force degree >= 4), so an F_p scan is exhaustive.
  i64 multi_root = -1;
  for (i64 x = 0; x < p; ++x)
    if (cubic(x) == 0 && mod_pos(3 * x * x + 2 * ca * x + cb, p) == 0)
      multi_root = x;
  if (multi_root < 0) {
    out.kodaira = "I0*";
    out.f = n - 4;
    return out;
  }
  // shift P(T + root): triple root iff the T^2 and T coefficients vanish
  i64 q2 = mod_pos(ca + 3 * multi_root, p);
  i64 q1 = mod_pos(cb + 2 * ca * multi_root + 3 * multi_root * multi_root, p);
  bool triple = (q1 == 0 && q2 == 0);
  if (!triple) {
    // double root: translate it to T = 0, i.e. x -> x + p * root
    {
      bool ok = false;
      for (i64 x0 = 0; x0 < p && !ok; ++x0) {
        Model cand = translate(m, p * x0, 0, 0);
        if (valuation(cand.a2, p) == 1 && valuation(cand.a4, p) >= 3 &&
            valuation(cand.a6, p) >= 4) {
          m = cand;
          ok = true;
        }
      }
      if (!ok) throw std::logic_error("tate: double-root translation failed");
    }
    // I_m* subprocedure
    int q = 1;
    for (;;) {
      if (q > n + 2) throw std::logic_error("tate: Im* loop runaway");
      i64 pq1 = ipow(p, q + 1);
      // odd check, m = 2q-1: Y^2 + (a3/p^{q+1}) Y - a6/p^{2q+2}
      i64 ya = mod_pos(m.a3 / pq1, p);
      i64 yb = mod_pos(-(m.a6 / (pq1 * pq1)), p);
      i64 disc_y = mod_pos(ya * ya + 4 * yb, p);  // roots of Y^2 + ya Y - yb
      if (disc_y != 0) {
        int mm = 2 * q - 1;
        out.kodaira_n = mm;
        out.kodaira = "I" + std::to_string(mm) + "*";
        out.f = n - 4 - mm;
        return out;
      }
      {
        bool ok = false;
        for (i64 y0 = 0; y0 < p && !ok; ++y0) {
          Model cand = translate(m, 0, 0, pq1 * y0);
          if (valuation(cand.a3, p) >= q + 2 &&
              valuation(cand.a6, p) >= 2 * q + 3) {
            m = cand;
            ok = true;
          }
        }
        if (!ok) throw std::logic_error("tate: Im* y-translation failed");
      }
      // even check, m = 2q: (a2/p) X^2 + (a4/p^{q+2}) X + a6/p^{2q+3}
      i64 xa = mod_pos(m.a2 / p, p);
      i64 xb = mod_pos(m.a4 / (pq1 * p), p);
      i64 xc = mod_pos(m.a6 / (pq1 * pq1 * p), p);
      i64 disc_x = mod_pos(xb * xb - 4 * xa * xc, p);
      if (disc_x != 0) {
        int mm = 2 * q;
        out.kodaira_n = mm;
        out.kodaira = "I" + std::to_string(mm) + "*";
        out.f = n - 4 - mm;
        return out;
      }
      {
        bool ok = false;
        for (i64 x0 = 0; x0 < p && !ok; ++x0) {
          Model cand = translate(m, pq1 * x0, 0, 0);
          if (valuation(cand.a4, p) >= q + 3 &&
              valuation(cand.a6, p) >= 2 * q + 4) {
            m = cand;
            ok = true;
          }
        }
        if (!ok) throw std::logic_error("tate: Im* x-translation failed");
      }
      ++q;
    }
  }
  // triple root: translate to origin
  {
    bool ok = false;
    for (i64 x0 = 0; x0 < p && !ok; ++x0) {
      Model cand = translate(m, p * x0, 0, 0);
      if (valuation(cand.a2, p) >= 2 && valuation(cand.a4, p) >= 3 &&
          valuation(cand.a6, p) >= 4) {
        m = cand;
        ok = true;
      }
    }
    if (!ok) throw std::logic_error("tate: triple-root translation failed");
  }
  // step 8: Y^2 + (a3/p^2) Y - a6/p^4 over F_p
  i64 p2 = p * p;
  i64 ya = mod_pos(m.a3 / p2, p);
  i64 yb = mod_pos(-(m.a6 / (p2 * p2)), p);
  if (mod_pos(ya * ya + 4 * yb, p) != 0) {
    out.kodaira = "IV*";
    out.f = n - 6;
    return out;
  }
  {
    bool ok = false;
    for (i64 y0 = 0; y0 < p && !ok; ++y0) {
      Model cand = translate(m, 0, 0, p2 * y0);
      if (valuation(cand.a3, p) >= 3 && valuation(cand.a6, p) >= 5) {
        m = cand;
        ok = true;
      }
    }
    if (!ok) throw std::logic_error("tate: step-8 translation failed");
  }
  if (valuation(m.a4, p) < 4) {
    out.kodaira = "III*";
    out.f = n - 7;
    return out;
  }
  if (valuation(m.a6, p) < 6) {
    out.kodaira = "II*";
    out.f = n - 8;
    return out;
  }
  throw std::logic_error("tate: model was not minimal at p");
}

// (ord Delta, ord c4) shortcut for p >= 5 on a p-minimal model.
LocalData tate_large_prime(const Model& m, i64 p) {
  LocalData out;
  i64 delta = m.disc();
  int vd = valuation(delta, p);
  if (vd == 0) {
    out.type = Reduction::Good;
    out.kodaira = "I0";
    return out;
  }
  i64 c4 = m.c4();
  if (mod_pos(c4, p) != 0) {
    out.kodaira_n = vd;
    out.kodaira = "I" + std::to_string(vd);
    out.f = 1;
    // node x0 = (18 b6 - b2 b4)/c4; slopes rational iff 12 x0 + b2 is a QR
    i64 inv_c4 = powmod(mod_pos(c4, p), p - 2, p);
    i64 t1 = mulmod(18 % p, mod_pos(m.b6(), p), p);
    i64 t2 = mulmod(mod_pos(m.b2(), p), mod_pos(m.b4(), p), p);
    i64 x0 = mulmod(mod_pos(t1 - t2, p), inv_c4, p);
    i64 slope2 = mod_pos(12 * x0 + m.b2(), p);
    out.type = (legendre(slope2, p) == 1) ? Reduction::MultSplit
                                          : Reduction::MultNonsplit;
    return out;
  }
  out.type = Reduction::Additive;
  out.f = 2;
  switch (vd) {
    case 2: out.kodaira = "II"; break;
    case 3: out.kodaira = "III"; break;
    case 4: out.kodaira = "IV"; break;
    case 6: out.kodaira = "I0*"; break;
    case 8: out.kodaira = "IV*"; break;
    case 9: out.kodaira = "III*"; break;
    case 10: out.kodaira = "II*"; break;
    default:
      out.kodaira_n = vd - 6;
      out.kodaira = "I" + std::to_string(vd - 6) + "*";
      break;
  }
  return out;
}

}  // namespace

LocalData tate_local(const Model& m, i64 p) {
  if (p == 2 || p == 3) return tate_small_prime(m, p);
  return tate_large_prime(m, p);
}

Reduction reduction_type(const Curve& c, i64 p) {
  Model m = minimal_model(c);
  return tate_local(m, p).type;
}

i64 conductor(const Curve& c) {
  Model m = minimal_model(c);
  i64 n = 1;
  for (auto [p, v] : factorize(m.disc())) {
    LocalData ld = tate_local(m, p);
    n = checked_i64(i128(n) * ipow(p, ld.f), "conductor");
  }
  return n;
}

namespace {

// affine point count of a general model over F_p (tiny p)
i64 count_points_small(const Model& m, i64 p) {
  i64 count = 0;
  for (i64 x = 0; x < p; ++x)
    for (i64 y = 0; y < p; ++y) {
      i64 lhs = mod_pos(y * y + m.a1 * x * y + m.a3 * y, p);
      i64 rhs = mod_pos(((x + m.a2) * x + m.a4) * x + m.a6, p);
      if (lhs == rhs) ++count;
    }
  return count + 1;  // point at infinity
}

// a_p at a good prime, given the minimal model.
int ap_good_model(const Model& m, i64 p) {
  if (p <= 3) return static_cast<int>(p + 1 - count_points_small(m, p));
  // short form y^2 = x^3 - 27 c4 x - 54 c6, isomorphic away from 2 and 3
  i64 a = mod_pos(-27 * (m.c4() % p), p);
  i64 b = mod_pos(-54 * (m.c6() % p), p);
  // QR table, then a_p = -sum chi(x^3 + a x + b)
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (i64 x = 1; x <= (p - 1) / 2; ++x) chi[mulmod(x, x, p)] = 1;
  i64 s = 0;
  for (i64 x = 0; x < p; ++x) {
    i64 v = mod_pos(((x * x % p) * x + a * x + b) % p, p);
    s += chi[v];
  }
  return static_cast<int>(-s);
}

}  // namespace

int ap_good(const Curve& c, i64 p) {
  Model m = minimal_model(c);
  LocalData ld = tate_local(m, p);
  if (ld.type != Reduction::Good)
    throw std::invalid_argument("ap_good: p is a bad-reduction prime");
  return ap_good_model(m, p);
}

int ap_naive(const Curve& c, i64 p) {
  // direct (x, y) loop on the raw short model; valid when p is good for it
  i64 count = 0;
  for (i64 x = 0; x < p; ++x) {
    i64 rhs = mod_pos((mulmod(mulmod(x, x, p), x, p) + mulmod(mod_pos(c.a, p), x, p) +
                       mod_pos(c.b, p)),
                      p);
    for (i64 y = 0; y < p; ++y)
      if (mulmod(y, y, p) == rhs) ++count;
  }
  return static_cast<int>(p + 1 - (count + 1));
}

int root_number(const Curve& c) {
  Model m = minimal_model(c);
  int w = -1;  // archimedean factor
  for (auto [p, v] : factorize(m.disc())) {
    LocalData ld = tate_local(m, p);
    switch (ld.type) {
      case Reduction::Good: break;
      case Reduction::MultSplit: w = -w; break;        // w_p = -a_p = -1
      case Reduction::MultNonsplit: break;             // w_p = +1
      case Reduction::Additive:
        throw unsupported_reduction(
            "root_number: additive reduction present; use the numeric fallback");
    }
  }
  return w;
}

std::vector<i64> dirichlet_coefficients(const Curve& c, i64 cutoff) {
  if (cutoff < 1) throw std::invalid_argument("dirichlet_coefficients: cutoff >= 1");
  Model m = minimal_model(c);
  std::map<i64, LocalData> bad;
  for (auto [p, v] : factorize(m.disc())) bad[p] = tate_local(m, p);

  std::vector<i64> a(cutoff + 1, 0);
  a[1] = 1;
  // smallest-prime-factor sieve
  std::vector<i64> spf(cutoff + 1, 0);
  for (i64 i = 2; i <= cutoff; ++i) {
    if (spf[i] == 0)
      for (i64 j = i; j <= cutoff; j += i)
        if (spf[j] == 0) spf[j] = i;
  }
  for (i64 n = 2; n <= cutoff; ++n) {
    i64 p = spf[n];
    if (n == p) {
      auto it = bad.find(p);
      if (it == bad.end()) {
        a[n] = ap_good_model(m, p);
      } else {
        switch (it->second.type) {
          case Reduction::Good: a[n] = ap_good_model(m, p); break;
          case Reduction::MultSplit: a[n] = 1; break;
          case Reduction::MultNonsplit: a[n] = -1; break;
          case Reduction::Additive: a[n] = 0; break;
        }
      }
      continue;
    }
    i64 pk = p, rest = n / p;
    while (rest % p == 0) { pk *= p; rest /= p; }
    if (rest > 1) {
      a[n] = a[pk] * a[rest];  // multiplicativity across coprime parts
      continue;
    }
    // n = p^k:  good p: a_{p^k} = a_p a_{p^{k-1}} - p a_{p^{k-2}};  bad: a_p^k
    bool is_bad = bad.count(p) && bad[p].type != Reduction::Good;
    if (is_bad)
      a[n] = a[p] * a[n / p];
    else
      a[n] = a[p] * a[n / p] - p * a[n / (p * p)];
  }
  return a;
}

GammaFactor gamma_factor(i64 conductor) {
  if (conductor < 1) throw std::invalid_argument("gamma_factor: conductor >= 1");
  GammaFactor g;
  g.q = std::sqrt(static_cast<double>(conductor)) / std::numbers::pi;
  g.mu = {std::complex<double>(0.25, 0.0), std::complex<double>(0.75, 0.0)};
  g.degree = 2;
  return g;
}

double refined_conductor_of_q(double q_analytic) {
  // X(s) = (2 Q)^{1-2s} Gamma((1-s)/2 + mu) ... / Gamma(s/2 + mu) ...
  // with mu = 1/4, 3/4 and 2Q = sqrt(N)/pi.  Central differences with one
  // Richardson refinement on h give |X'(1/2)| to well under 1e-8 relative.
  if (!(q_analytic > 0.0))
    throw std::invalid_argument("refined_conductor: Q > 0 required");
  double q2 = 2.0 * q_analytic;
  auto logx = [&](double s) {
    double v = (1.0 - 2.0 * s) * std::log(q2);
    for (double mu : {0.25, 0.75})
      v += std::lgamma((1.0 - s) / 2.0 + mu) - std::lgamma(s / 2.0 + mu);
    return v;
  };
  auto deriv = [&](double h) {
    // X(1/2) = 1, so X'(1/2) = d/ds log X at 1/2
    return (logx(0.5 + h) - logx(0.5 - h)) / (2.0 * h);
  };
  double d1 = deriv(1e-3), d2 = deriv(5e-4);
  double richardson = (4.0 * d2 - d1) / 3.0;
  return std::fabs(richardson);
}

double refined_conductor(i64 conductor) {
  return refined_conductor_of_q(gamma_factor(conductor).q * 0.5);
}

LData build_ldata(const Curve& c, i64 coefficient_cutoff) {
  LData d;
  d.curve = c;
  Model m = minimal_model(c);
  d.conductor = 1;
  bool semistable = true;
  for (auto [p, v] : factorize(m.disc())) {
    LocalData ld = tate_local(m, p);
    d.conductor = checked_i64(i128(d.conductor) * ipow(p, ld.f), "conductor");
    if (ld.type == Reduction::Additive) semistable = false;
  }
  d.semistable = semistable;
  d.root_number = semistable ? root_number(c) : 0;
  d.an = dirichlet_coefficients(c, coefficient_cutoff);
  d.gamma = gamma_factor(d.conductor);
  d.refined_conductor = refined_conductor(d.conductor);
  return d;
}

namespace {
bool singular(i64 a, i64 b) {
  return 4 * i128(a) * a * a + 27 * i128(b) * b == 0;
}
}  // namespace

std::vector<Curve> family_f1(double x) {
  if (x < 1.0) throw std::invalid_argument("family_f1: X >= 1");
  i64 amax = static_cast<i64>(std::floor(std::cbrt(x)));
  i64 bmax = static_cast<i64>(std::floor(std::sqrt(x)));
  std::vector<Curve> out;
  for (i64 a = -amax; a <= amax; ++a)
    for (i64 b = -bmax; b <= bmax; ++b)
      if (!singular(a, b)) out.push_back({a, b});
  return out;
}

std::vector<Curve> family_f2(double x) {
  if (x < 1.0) throw std::invalid_argument("family_f2: X >= 1");
  i64 amax = static_cast<i64>(std::floor(std::cbrt(x)));
  i64 bmax = static_cast<i64>(std::floor(std::pow(x, 0.25)));
  std::vector<Curve> out;
  for (i64 a = -amax; a <= amax; ++a)
    for (i64 b = 1; b <= bmax; ++b)
      if (!singular(a, b * b)) out.push_back({a, b * b});
  return out;
}

std::vector<Curve> family_f4(const std::vector<i64>& a_poly,
                             const std::vector<i64>& b_poly, double x) {
  if (x < 1.0) throw std::invalid_argument("family_f4: X >= 1");
  auto eval_poly = [](const std::vector<i64>& p, i64 t) {
    i128 v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
    return checked_i64(v, "family_f4 polynomial");
  };
  // degenerate parametrization: 4 a(T)^3 + 27 b(T)^2 identically zero
  {
    int deg = static_cast<int>(std::max(a_poly.size(), b_poly.size()));
    bool all_zero = true;
    for (i64 t = 0; t <= 3 * deg + 2; ++t)
      if (!singular(eval_poly(a_poly, t), eval_poly(b_poly, t))) all_zero = false;
    if (all_zero)
      throw std::invalid_argument("family_f4: discriminant identically zero");
  }
  i64 amax = static_cast<i64>(std::floor(std::cbrt(x)));
  i64 bmax = static_cast<i64>(std::floor(std::sqrt(x)));
  std::vector<Curve> out;
  int misses = 0;
  for (i64 t = 0; misses < 10000 && t < 100000000; ++t) {
    i64 a = eval_poly(a_poly, t);
    i64 b = eval_poly(b_poly, t);
    if (std::llabs(a) > amax || std::llabs(b) > bmax) {
      ++misses;
      continue;
    }
    misses = 0;
    if (!singular(a, b)) out.push_back({a, b});
  }
  return out;
}

SignPartition partition_by_sign(const std::vector<Curve>& family) {
  SignPartition part;
  for (const Curve& c : family) {
    try {
      int w = root_number(c);
      (w > 0 ? part.plus : part.minus).push_back(c);
    } catch (const unsupported_reduction&) {
      part.undetermined.push_back(c);
    }
  }
  return part;
}

void write_csv(const std::vector<LData>& rows, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "a,b,delta,conductor,root_number,c_L\n");
  for (const LData& d : rows) {
    std::fprintf(f, "%lld,%lld,%lld,%lld,%d,%.17g\n",
                 static_cast<long long>(d.curve.a),
                 static_cast<long long>(d.curve.b),
                 static_cast<long long>(discriminant(d.curve)),
                 static_cast<long long>(d.conductor), d.root_number,
                 d.refined_conductor);
  }
  std::fclose(f);
}

}  // namespace ellrmt::ellcurve
