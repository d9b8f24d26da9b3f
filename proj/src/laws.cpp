#include <algorithm>
#include <array>
#include <cmath>

#include "seqeff/auditor.hpp"
#include "seqeff/errors.hpp"
#include "seqeff/random.hpp"
#include "seqeff/spectral.hpp"

namespace seqeff {

namespace {

struct LawInfo {
  LawId id;
  const char* name;
  const char* statement;
};

constexpr std::array<LawInfo, 23> kLaws{{
    {LawId::SEA1, "SEA1", "a o (b + c) = a o b + a o c for b + c <= 1"},
    {LawId::SEA2, "SEA2", "1 o a = a"},
    {LawId::SEA3, "SEA3", "a o b = 0 implies b o a = 0"},
    {LawId::SEA4, "SEA4", "a | b implies a | 1 - b and a o (b o c) = (a o b) o c"},
    {LawId::SEA5, "SEA5", "c | a and c | b imply c | a o b and c | a + b"},
    {LawId::SCALAR_LINEARITY, "SCALAR_LINEARITY", "(s a) o b = a o (s b) = s (a o b)"},
    {LawId::PRODUCT_LE_LEFT, "PRODUCT_LE_LEFT", "0 <= a o b <= a"},
    {LawId::MONOTONE_RIGHT, "MONOTONE_RIGHT", "a <= b implies c o a <= c o b"},
    {LawId::SHARP_PROPS, "SHARP_PROPS", "p sharp: p <= a iff p o a = a o p = p; a <= p iff p o a = a"},
    {LawId::FLOOR_LIMIT, "FLOOR_LIMIT", "a^(2^k) decreases to floor(a); ceil(a) = 1 - floor(1 - a)"},
    {LawId::DYADIC_BOUND, "DYADIC_BOUND", "q_(2^m) <= q_(2^(m+1)) <= a and |a - q_(2^m)| <= 2^(1-m)"},
    {LawId::SPECTRAL_RECON, "SPECTRAL_RECON", "a = sum l_i p_i, p_i p_j = delta_ij p_i, sum p_i = 1"},
    {LawId::FUNDAMENTAL_EQ, "FUNDAMENTAL_EQ", "Q_{Q_a b} = Q_a Q_b Q_a"},
    {LawId::COMMUTE_EQUIV, "COMMUTE_EQUIV", "a o b = b o a iff [Q_a, Q_b] = 0 iff [T_a, T_b] = 0 iff ab = ba"},
    {LawId::SELF_DUALITY, "SELF_DUALITY", "a >= 0 iff <a, b> >= 0 for all b >= 0"},
    {LawId::HOMOGENEITY, "HOMOGENEITY", "Phi = L_b L_{a^-1} is an order automorphism with Phi(a) = b"},
    {LawId::PSEUDO_INVERSE, "PSEUDO_INVERSE", "b o b^-1 = b^-1 o b = ceil(b)"},
    {LawId::DIVIDE, "DIVIDE", "a <= q implies q o (q^-1 o a) = a with q^-1 o a <= ceil(q)"},
    {LawId::INVARIANCE, "INVARIANCE", "Phi(a o b) = Phi(a) o Phi(b) for unital order automorphisms Phi"},
    {LawId::SYMMETRY, "SYMMETRY", "<a o b, c> = <b, a o c>"},
    {LawId::INVERTIBILITY_PRES, "INVERTIBILITY_PRES", "(a o b)^-1 = a^-1 o b^-1"},
    {LawId::QUADRATIC_LAW, "QUADRATIC_LAW", "L_{(a o b)^2} = L_a L_{b^2} L_a"},
    {LawId::THETA_STRUCTURE, "THETA_STRUCTURE", "Theta_{a o b} = Theta_a Theta_b = Theta_b Theta_a, Theta_{a^-1} = Theta_a^-1"},
}};

const LawInfo& info(LawId law) { return kLaws[static_cast<std::size_t>(law)]; }

double neg_part(double x) { return std::max(0.0, -x); }

// Spectral pieces of one random element, with fresh eigenvalues.
Element on_frame(const std::vector<Element>& frame, const std::vector<double>& values) {
  Element out = Element::zero(frame.front().algebra());
  for (std::size_t i = 0; i < frame.size(); ++i) out += values[i] * frame[i];
  return out;
}

std::vector<double> uniform_values(std::size_t n, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

IsoKind automatic_iso(const AlgebraDescriptor& alg, int trial) {
  switch (alg.kind()) {
    case AlgebraKind::complex_hermitian:
      return trial % 2 == 0 ? IsoKind::transpose : IsoKind::unitary_conjugation;
    case AlgebraKind::spin_factor:
      return IsoKind::spin_rotation;
    case AlgebraKind::direct_sum:
      for (const auto& s : alg.summands()) {
        if (s.is_matrix_kind()) return IsoKind::unitary_conjugation;
      }
      return IsoKind::spin_rotation;
    default:
      return IsoKind::unitary_conjugation;
  }
}

double op_diff(const LinearMap& a, const LinearMap& b) { return (a - b).operator_norm(); }

}  // namespace

const std::vector<LawId>& all_laws() {
  static const std::vector<LawId> laws = [] {
    std::vector<LawId> v;
    for (const auto& l : kLaws) v.push_back(l.id);
    return v;
  }();
  return laws;
}

std::string to_string(LawId law) { return info(law).name; }

std::string law_statement(LawId law) { return info(law).statement; }

LawId law_from_string(const std::string& s) {
  for (const auto& l : kLaws) {
    if (s == l.name) return l.id;
  }
  throw ConfigError("unknown law '" + s + "'");
}

const Element& TrialInputs::at(const std::string& name) const {
  for (const auto& [n, e] : elements) {
    if (n == name) return e;
  }
  throw ConfigError("trial inputs have no element named '" + name + "'");
}

TrialInputs generate_inputs(const AuditRow& row, int trial, std::uint64_t trial_seed) {
  const auto& alg = row.algebra;
  const auto& P = row.product;
  Rng rng(trial_seed);
  auto effect = [&](EffectProfile p = EffectProfile::generic) { return random_effect(alg, rng, p); };
  const Element one = Element::identity(alg);
  TrialInputs in;

  switch (row.law) {
    case LawId::SEA1:
      in.add("a", effect());
      in.add("b", 0.5 * effect());
      in.add("c", 0.5 * effect());
      break;
    case LawId::SEA2:
    case LawId::SPECTRAL_RECON:
    case LawId::DYADIC_BOUND:
      in.add("a", effect());
      break;
    case LawId::SEA3: {
      const Element p = random_projection(alg, rng);
      in.add("a", quadratic_rep(p, effect()));
      in.add("b", quadratic_rep(one - p, effect()));
      break;
    }
    case LawId::SEA4: {
      const auto frame = random_frame(alg, rng);
      in.add("a", on_frame(frame, uniform_values(frame.size(), 0.0, 1.0, rng)));
      in.add("b", on_frame(frame, uniform_values(frame.size(), 0.0, 1.0, rng)));
      in.add("c", effect());
      break;
    }
    case LawId::SEA5: {
      const Element p = random_projection(alg, rng);
      const Element q = one - p;
      const auto g = uniform_values(2, 0.0, 1.0, rng);
      in.add("c", g[0] * p + g[1] * q);
      in.add("a", 0.5 * (quadratic_rep(p, effect()) + quadratic_rep(q, effect())));
      in.add("b", 0.5 * (quadratic_rep(p, effect()) + quadratic_rep(q, effect())));
      break;
    }
    case LawId::SCALAR_LINEARITY:
    case LawId::PRODUCT_LE_LEFT:
    case LawId::FUNDAMENTAL_EQ:
    case LawId::QUADRATIC_LAW:
      in.add("a", effect());
      in.add("b", effect());
      break;
    case LawId::MONOTONE_RIGHT: {
      const Element b = effect();
      in.add("a", quadratic_rep(sqrt_pos(b), effect()));
      in.add("b", b);
      in.add("c", effect());
      break;
    }
    case LawId::SHARP_PROPS: {
      const Element p = random_projection(alg, rng);
      in.add("p", p);
      in.add("above", p + quadratic_rep(one - p, effect()));
      in.add("below", quadratic_rep(p, effect()));
      in.add("generic", effect());
      break;
    }
    case LawId::FLOOR_LIMIT: {
      const auto frame = random_frame(alg, rng);
      auto values = uniform_values(frame.size(), 0.0, 0.7, rng);
      const int ones = std::uniform_int_distribution<int>(1, std::max<int>(1, static_cast<int>(frame.size()) - 1))(rng);
      for (int i = 0; i < ones && i < static_cast<int>(values.size()); ++i) values[i] = 1.0;
      in.add("a", on_frame(frame, values));
      break;
    }
    case LawId::COMMUTE_EQUIV:
      if (trial % 2 == 0) {
        const auto frame = random_frame(alg, rng);
        in.add("a", on_frame(frame, uniform_values(frame.size(), 0.0, 1.0, rng)));
        in.add("b", on_frame(frame, uniform_values(frame.size(), 0.0, 1.0, rng)));
      } else {
        // full-spread spectra: a nearly scalar pair would put the o-measure near the threshold
        in.add("a", effect(EffectProfile::invertible));
        in.add("b", effect(EffectProfile::invertible));
      }
      break;
    case LawId::SELF_DUALITY: {
      Element x = random_element(alg, rng);
      const double lo = min_eigenvalue(x);
      if (lo >= 0.0) x -= (lo + 0.5) * one;
      in.add("a", x);
      in.add("u", effect());
      in.add("v", effect());
      break;
    }
    case LawId::HOMOGENEITY:
      in.add("a", effect(EffectProfile::invertible));
      in.add("b", effect(EffectProfile::invertible));
      for (int k = 0; k < 5; ++k) in.add("x" + std::to_string(k), effect());
      break;
    case LawId::PSEUDO_INVERSE:
      in.add("b", effect(EffectProfile::singular));
      break;
    case LawId::DIVIDE: {
      const Element q = effect(trial % 2 == 0 ? EffectProfile::generic : EffectProfile::singular);
      in.add("q", q);
      in.add("a", seq_product(P, q, effect()));
      break;
    }
    case LawId::INVARIANCE: {
      const IsoKind kind = row.iso ? *row.iso : automatic_iso(alg, trial);
      in.iso = IsoSpec{kind, derive_seed(trial_seed, 0xC0FFEE)};
      in.add("a", effect());
      in.add("b", effect());
      break;
    }
    case LawId::SYMMETRY:
      in.add("a", effect());
      in.add("b", effect());
      in.add("c", effect());
      break;
    case LawId::INVERTIBILITY_PRES:
      in.add("a", effect(EffectProfile::invertible));
      in.add("b", effect(EffectProfile::invertible));
      break;
    case LawId::THETA_STRUCTURE: {
      const auto frame = random_frame(alg, rng);
      in.add("a", on_frame(frame, uniform_values(frame.size(), 0.05, 0.95, rng)));
      in.add("b", on_frame(frame, uniform_values(frame.size(), 0.05, 0.95, rng)));
      break;
    }
  }
  return in;
}

double evaluate_law(const AuditRow& row, const TrialInputs& in) {
  const auto& alg = row.algebra;
  const auto& P = row.product;
  const Element one = Element::identity(alg);
  auto prod = [&](const Element& x, const Element& y) { return seq_product(P, x, y); };
  auto norm = [](const Element& x) { return order_unit_norm(x); };

  switch (row.law) {
    case LawId::SEA1: {
      const Element &a = in.at("a"), &b = in.at("b"), &c = in.at("c");
      return rel_residual(prod(a, b + c), prod(a, b) + prod(a, c));
    }
    case LawId::SEA2:
      return rel_residual(prod(one, in.at("a")), in.at("a"));
    case LawId::SEA3: {
      const Element &a = in.at("a"), &b = in.at("b");
      return std::max(norm(prod(a, b)), norm(prod(b, a)));
    }
    case LawId::SEA4: {
      const Element &a = in.at("a"), &b = in.at("b"), &c = in.at("c");
      const Element b_perp = one - b;
      return std::max({norm(prod(a, b) - prod(b, a)), norm(prod(a, b_perp) - prod(b_perp, a)),
                       rel_residual(prod(a, prod(b, c)), prod(prod(a, b), c))});
    }
    case LawId::SEA5: {
      const Element &a = in.at("a"), &b = in.at("b"), &c = in.at("c");
      const Element ab = prod(a, b);
      const Element sum = a + b;
      return std::max({norm(prod(c, a) - prod(a, c)), norm(prod(c, b) - prod(b, c)),
                       norm(prod(c, ab) - prod(ab, c)), norm(prod(c, sum) - prod(sum, c))});
    }
    case LawId::SCALAR_LINEARITY: {
      const Element &a = in.at("a"), &b = in.at("b");
      const Element ab = prod(a, b);
      double r = 0.0;
      for (double s : {0.0, 0.25, 0.5, 1.0}) {
        r = std::max({r, rel_residual(prod(s * a, b), s * ab), rel_residual(prod(a, s * b), s * ab)});
      }
      return r;
    }
    case LawId::PRODUCT_LE_LEFT: {
      const Element &a = in.at("a"), &b = in.at("b");
      const Element ab = prod(a, b);
      return std::max(neg_part(min_eigenvalue(a - ab)), neg_part(min_eigenvalue(ab)));
    }
    case LawId::MONOTONE_RIGHT: {
      const Element &a = in.at("a"), &b = in.at("b"), &c = in.at("c");
      return neg_part(min_eigenvalue(prod(c, b) - prod(c, a)));
    }
    case LawId::SHARP_PROPS: {
      const Element& p = in.at("p");
      double r = norm(jordan_product(p, p) - p);
      for (const char* name : {"above", "below", "generic"}) {
        const Element& a = in.at(name);
        const Element pa = prod(p, a);
        const Element ap = prod(a, p);
        const bool p_below = leq(p, a);
        const bool absorbs = norm(pa - p) <= 1e-8 && norm(ap - p) <= 1e-8;
        const bool a_below = leq(a, p);
        const bool fixes = norm(pa - a) <= 1e-8;
        if (p_below != absorbs || a_below != fixes) r = std::max(r, 1.0);
      }
      const Element &above = in.at("above"), &below = in.at("below");
      return std::max({r, norm(prod(p, above) - p), norm(prod(above, p) - p), norm(prod(p, below) - below)});
    }
    case LawId::FLOOR_LIMIT: {
      const Element& a = in.at("a");
      const Element fl = floor_effect(a);
      const Element ce = ceiling_effect(a);
      double r = norm(iterated_square(a, 6) - fl);
      Element x = a;
      for (int k = 0; k < 6; ++k) {
        const Element next = jordan_product(x, x);
        r = std::max(r, neg_part(min_eigenvalue(x - next)));
        x = next;
      }
      r = std::max({r, norm(ce - (one - floor_effect(one - a))), norm(jordan_product(fl, fl) - fl),
                    norm(jordan_product(ce, ce) - ce), neg_part(min_eigenvalue(a - fl)),
                    neg_part(min_eigenvalue(ce - a))});
      return r;
    }
    case LawId::DYADIC_BOUND: {
      const Element& a = in.at("a");
      const auto q = dyadic_approximation(a, 9);
      double r = 0.0;
      for (int m = 1; m <= 8; ++m) {
        const Element& cur = q[m - 1];
        const Element& next = q[m];
        const double bound = std::ldexp(1.0, 1 - m);
        r = std::max({r, neg_part(min_eigenvalue(next - cur)), neg_part(min_eigenvalue(a - next)),
                      neg_part(min_eigenvalue(a - cur)), std::max(0.0, norm(a - cur) - bound)});
      }
      return r;
    }
    case LawId::SPECTRAL_RECON: {
      const Element& a = in.at("a");
      const auto sd = spectral_decompose(a);
      double r = norm(sd.reconstruct() - a);
      Element total = Element::zero(alg);
      for (std::size_t i = 0; i < sd.size(); ++i) {
        const Element& p = sd.pairs()[i].idempotent;
        total += p;
        r = std::max(r, norm(jordan_product(p, p) - p));
        for (std::size_t j = i + 1; j < sd.size(); ++j) {
          r = std::max(r, norm(jordan_product(p, sd.pairs()[j].idempotent)));
        }
      }
      return std::max(r, norm(total - one));
    }
    case LawId::FUNDAMENTAL_EQ: {
      const Element &a = in.at("a"), &b = in.at("b");
      const LinearMap qa = quadratic_operator(a, Execution::serial);
      const LinearMap qb = quadratic_operator(b, Execution::serial);
      return op_diff(quadratic_operator(quadratic_rep(a, b), Execution::serial), qa.compose(qb).compose(qa));
    }
    case LawId::COMMUTE_EQUIV: {
      constexpr double kTol = 1e-8;
      const auto m = commutation_measures(P, in.at("a"), in.at("b"), Execution::serial);
      const bool v0 = m.product <= kTol;
      const bool agree = (m.quadratic <= kTol) == v0 && (m.jordan <= kTol) == v0 && (m.operator_ <= kTol) == v0;
      return agree ? 0.0 : 1.0;
    }
    case LawId::SELF_DUALITY: {
      const Element& a = in.at("a");
      const Element witness = spectral_decompose(a).projection_where([](double x) { return x < 0.0; });
      const double ip = trace_inner_product(a, witness);
      const double found = ip < -1e-10 && is_positive(witness, 1e-12) ? 0.0 : 1.0;
      return std::max(found, neg_part(trace_inner_product(in.at("u"), in.at("v"))));
    }
    case LawId::HOMOGENEITY: {
      const Element &a = in.at("a"), &b = in.at("b");
      const LinearMap phi = homogeneity_iso(a, b, P, Execution::serial);
      const LinearMap phi_inv = homogeneity_iso(b, a, P, Execution::serial);
      double r = std::max({rel_residual(phi.apply(a), b), rel_residual(phi_inv.apply(b), a),
                           op_diff(phi.compose(phi_inv), LinearMap::identity(alg))});
      for (int k = 0; k < 5; ++k) {
        const Element& x = in.at("x" + std::to_string(k));
        r = std::max({r, neg_part(min_eigenvalue(phi.apply(x))), neg_part(min_eigenvalue(phi_inv.apply(x)))});
      }
      return r;
    }
    case LawId::PSEUDO_INVERSE: {
      const Element& b = in.at("b");
      const Element bi = pseudo_inverse(b);
      const Element ce = ceiling_effect(b);
      return std::max({rel_residual(prod(b, bi), ce), rel_residual(prod(bi, b), ce),
                       neg_part(min_eigenvalue(bi)), norm(ceiling_effect(bi) - ce)});
    }
    case LawId::DIVIDE: {
      const Element &q = in.at("q"), &a = in.at("a");
      const Element c = divide(P, q, a);
      return std::max({rel_residual(prod(q, c), a), neg_part(min_eigenvalue(ceiling_effect(q) - c)),
                       neg_part(min_eigenvalue(c))});
    }
    case LawId::INVARIANCE: {
      if (!in.iso) throw ConfigError("INVARIANCE inputs carry no order isomorphism");
      const OrderIso phi(alg, *in.iso);
      const Element &a = in.at("a"), &b = in.at("b");
      return rel_residual(phi.apply(prod(a, b)), prod(phi.apply(a), phi.apply(b)));
    }
    case LawId::SYMMETRY: {
      const Element &a = in.at("a"), &b = in.at("b"), &c = in.at("c");
      return std::abs(trace_inner_product(prod(a, b), c) - trace_inner_product(b, prod(a, c)));
    }
    case LawId::INVERTIBILITY_PRES: {
      const Element &a = in.at("a"), &b = in.at("b");
      return rel_residual(inverse(prod(a, b)), prod(inverse(a), inverse(b)));
    }
    case LawId::QUADRATIC_LAW: {
      const Element &a = in.at("a"), &b = in.at("b");
      const Element ab = prod(a, b);
      const LinearMap la = multiplication_operator(P, a, Execution::serial);
      const LinearMap lhs = multiplication_operator(P, jordan_product(ab, ab), Execution::serial);
      const LinearMap lb2 = multiplication_operator(P, jordan_product(b, b), Execution::serial);
      return op_diff(lhs, la.compose(lb2).compose(la));
    }
    case LawId::THETA_STRUCTURE: {
      const auto standard = SequentialProduct::standard();
      const Element &a = in.at("a"), &b = in.at("b");
      auto theta = [&](const Element& q) { return theta_between(standard, P, q, Execution::serial); };
      const LinearMap ta = theta(a);
      const LinearMap tb = theta(b);
      double r = std::max({op_diff(theta(seq_product(standard, a, b)), ta.compose(tb)),
                           op_diff(ta.compose(tb), tb.compose(ta)), op_diff(theta(inverse(a)), ta.inverse()),
                           norm(ta.apply(one) - one)});
      if (P.is_twisted()) r = std::max(r, op_diff(ta, twist_conjugation(a, P.twist(), Execution::serial)));
      return r;
    }
  }
  return 0.0;
}

}  // namespace seqeff
