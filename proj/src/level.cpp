#include "eiskron/level.hpp"

namespace eiskron::level {

GL2ModN GL2ModN::make(int N, long long a, long long b, long long c, long long d) {
  if (N < 1) throw ParameterError("level must be positive");
  GL2ModN g{N, arith::floor_mod(a, N), arith::floor_mod(b, N), arith::floor_mod(c, N),
            arith::floor_mod(d, N)};
  if (N > 1) arith::inverse_mod(g.det(), static_cast<arith::u64>(N));
  return g;
}

GL2ModN GL2ModN::inverse() const {
  // adjugate times det^{-1}
  const auto n = static_cast<arith::u64>(N);
  const long long di = static_cast<long long>(arith::inverse_mod(det(), n));
  return GL2ModN{N, arith::floor_mod(d * di, N), arith::floor_mod(-b * di, N),
                 arith::floor_mod(-c * di, N), arith::floor_mod(a * di, N)};
}

GL2ModN operator*(const GL2ModN& g, const GL2ModN& h) {
  if (g.N != h.N) throw ParameterError("GL2 level mismatch");
  const int N = g.N;
  return GL2ModN{N, arith::floor_mod(g.a * h.a + g.b * h.c, N),
                 arith::floor_mod(g.a * h.b + g.b * h.d, N),
                 arith::floor_mod(g.c * h.a + g.d * h.c, N),
                 arith::floor_mod(g.c * h.b + g.d * h.d, N)};
}

bool operator==(const GL2ModN& g, const GL2ModN& h) {
  return g.N == h.N && g.a == h.a && g.b == h.b && g.c == h.c && g.d == h.d;
}

std::string to_string(const GL2ModN& g) {
  return std::to_string(g.a) + "," + std::to_string(g.b) + ";" + std::to_string(g.c) + "," +
         std::to_string(g.d);
}

LevelFunction<CycRat> lift(const LevelFunction<mpq_class>& phi) {
  auto field = arith::CyclotomicField::get(phi.level());
  LevelFunction<CycRat> out(phi.level(), field);
  for (long long a = 0; a < phi.level(); ++a)
    for (long long b = 0; b < phi.level(); ++b)
      out(a, b) = CycRat::from_rational(field, phi(a, b));
  return out;
}

LevelFunction<arith::PadicCyc> embed(const LevelFunction<CycRat>& f, arith::u64 p,
                                     int precision) {
  using Ctx = RingTraits<arith::PadicCyc>::Context;
  LevelFunction<arith::PadicCyc> out(f.level(), Ctx{f.context(), p, precision});
  for (long long a = 0; a < f.level(); ++a)
    for (long long b = 0; b < f.level(); ++b)
      out(a, b) = arith::PadicCyc::embed(f(a, b), p, precision);
  return out;
}

LevelFunction<arith::PadicCyc> embed(const LevelFunction<mpq_class>& f, arith::u64 p,
                                     int precision) {
  return embed(lift(f), p, precision);
}

LevelFunction<CycRat> katz_datum(const LevelFunction<mpq_class>& phi, const GL2ModN& g) {
  return p1(symplectic_hat(lift(act_gl2(g, phi))));
}

}  // namespace eiskron::level
