#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eiskron/padic_eis.hpp"

namespace eiskron::symh {

using arith::CycRat;
using arith::PadicCyc;
using arith::RingTraits;
using arith::u64;
using level::GL2ModN;
using level::LevelFunction;
using qexp::QExpansion;

/// sum_n c_n w^n u^{k-n} in Sym^k of the unit-root basis {w, u} (duals).
/// Slot n holds the coefficient of w^n u^{k-n}; slot 0 is the u^k slot.
template <class R>
struct SymSection {
  std::vector<QExpansion<R>> coeffs;

  int k() const { return static_cast<int>(coeffs.size()) - 1; }

  static SymSection zero(int k, typename RingTraits<R>::Context ctx, std::size_t q_prec) {
    if (k < 0) throw ParameterError("symmetric power must be >= 0");
    return {std::vector<QExpansion<R>>(static_cast<std::size_t>(k) + 1, QExpansion<R>(ctx, q_prec))};
  }
};

/// Same coordinates, tensored with the Kodaira-Spencer form xi.
template <class R>
struct SymOneForm {
  std::vector<QExpansion<R>> coeffs;
  /// Scalar 2/N^{k+1} relating the u^k coordinate to the absolute de Rham
  /// normalization 2/(N^{k+1} k!) E_{k+2,0,phi}; informational only.
  std::optional<mpq_class> dr_normalization;

  int k() const { return static_cast<int>(coeffs.size()) - 1; }

  static SymOneForm zero(int k, typename RingTraits<R>::Context ctx, std::size_t q_prec) {
    if (k < 0) throw ParameterError("symmetric power must be >= 0");
    return {std::vector<QExpansion<R>>(static_cast<std::size_t>(k) + 1, QExpansion<R>(ctx, q_prec)),
            std::nullopt};
  }
};

/// Gauss-Manin connection: slot n of the output is (k-n+1) c_{n-1} + theta(c_n).
template <class R>
SymOneForm<R> nabla(const SymSection<R>& s) {
  const int k = s.k();
  SymOneForm<R> out{{}, std::nullopt};
  out.coeffs.reserve(s.coeffs.size());
  for (int n = 0; n <= k; ++n) {
    auto slot = qexp::theta(s.coeffs[n]);
    if (n > 0)
      slot += s.coeffs[n - 1].map([&](const R& x) {
        return arith::scale_int(x, mpz_class(static_cast<long>(k - n + 1)));
      });
    out.coeffs.push_back(std::move(slot));
  }
  return out;
}

/// Frobenius on Sym^k H(1) (x) xi: slot n -> p^{-n} phi*(c_n).
///
/// Over Z[zeta_N]/p^M the division is exact or throws PrecisionError, and
/// slot n loses n digits of precision.
template <class R>
SymOneForm<R> frobenius_oneform(const SymOneForm<R>& w, u64 p) {
  SymOneForm<R> out{{}, w.dr_normalization};
  for (int n = 0; n <= w.k(); ++n) {
    auto slot = qexp::phi_star(w.coeffs[n], static_cast<long long>(p));
    if (n > 0) {
      if constexpr (std::is_same_v<R, PadicCyc>) {
        slot = slot.map([n](const PadicCyc& x) { return x.divide_by_p_power(n); });
      } else {
        const mpq_class inv = arith::rat(mpz_class(1), arith::ipow(static_cast<long long>(p), static_cast<unsigned>(n)));
        slot = slot.scaled(RingTraits<R>::from_rational(slot.context(), inv));
      }
    }
    out.coeffs.push_back(std::move(slot));
  }
  return out;
}

/// (1 - Phi) w, slotwise.
template <class R>
SymOneForm<R> one_minus_frobenius(const SymOneForm<R>& w, u64 p) {
  const auto fw = frobenius_oneform(w, p);
  SymOneForm<R> out{{}, w.dr_normalization};
  for (int n = 0; n <= w.k(); ++n) out.coeffs.push_back(w.coeffs[n] - fw.coeffs[n]);
  return out;
}

/// Eis_dR in the u^k coordinate: slot 0 = (1/k!) E_{k+2,0,phi}, exact over
/// Q(zeta_N); dr_normalization = 2/N^{k+1}.
SymOneForm<CycRat> eis_dr_oneform(int k, const LevelFunction<mpq_class>& phi, const GL2ModN& g,
                                  std::size_t q_prec);

/// alpha~ = sum_n ((-1)^n/(k-n)!) E^(p)_{k+1-n,-1-n,phi} w^n u^{k-n}.
/// Requires p > k+2.
SymSection<PadicCyc> alpha_eis(int k, const LevelFunction<mpq_class>& phi, const GL2ModN& g,
                               u64 p, std::size_t q_prec, int p_prec);

struct Residual {
  int slot;
  std::size_t q_power;
  /// valuation of the nonzero residual coefficient (< p_prec)
  int valuation;
};

struct VerificationReport {
  bool pass;
  int k;
  u64 p;
  int p_prec;
  std::size_t q_prec;
  std::vector<Residual> residuals;
};

/// Checks nabla(alpha) == (1 - Phi) xi coefficientwise at the working
/// precision. xi is exact; (1 - Phi) xi is formed over Q(zeta_N) and then
/// embedded. d(xi) = 0 holds trivially on a curve and is not checked.
VerificationReport verify_syntomic_pair(const SymSection<PadicCyc>& alpha,
                                        const SymOneForm<CycRat>& xi, u64 p);

/// Variant where both sides already live in Z[zeta_N]/p^M.
VerificationReport verify_syntomic_pair(const SymSection<PadicCyc>& alpha,
                                        const SymOneForm<PadicCyc>& xi, u64 p);

struct HorizontalReport {
  bool horizontal;
  /// slots n where theta(c_n) != -(k-n+1) c_{n-1} (n = 0: theta(c_0) != 0)
  std::vector<int> failing_slots;
  /// c_0 = ... = c_{k-1} = 0 and c_k constant
  bool shape_ok;
  bool pass() const { return horizontal && shape_ok; }
  std::string message;
};

/// Reads off the recursion theta(c_0) = 0, theta(c_n) = -(k-n+1) c_{n-1}
/// and reports whether a horizontal section has the forced shape. Meaningful
/// over characteristic 0; modulo p^M theta has a larger kernel.
template <class R>
HorizontalReport horizontal_kernel_probe(const SymSection<R>& s) {
  const int k = s.k();
  HorizontalReport rep{true, {}, true, {}};
  const auto ns = nabla(s);
  for (int n = 0; n <= k; ++n)
    if (!ns.coeffs[n].is_zero()) rep.failing_slots.push_back(n);
  rep.horizontal = rep.failing_slots.empty();
  for (int n = 0; n < k; ++n)
    if (!s.coeffs[n].is_zero()) rep.shape_ok = false;
  const auto& top = s.coeffs[k];
  for (std::size_t i = 1; i <= top.q_prec(); ++i)
    if (!RingTraits<R>::is_zero(top[i])) rep.shape_ok = false;
  if (!rep.horizontal)
    rep.message = "not in kernel";
  else if (!rep.shape_ok)
    rep.message = "horizontal but shape differs from c_0 = ... = c_{k-1} = 0, c_k constant";
  else
    rep.message = "horizontal: c_0 = ... = c_{k-1} = 0, c_k constant";
  return rep;
}

}  // namespace eiskron::symh
