#include "emsurf/sl2.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "emsurf/errors.hpp"

namespace emsurf {

int64_t checked_add(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in 2x2 matrix arithmetic");
  return r;
}

int64_t checked_mul(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in 2x2 matrix arithmetic");
  return r;
}

int64_t MatZ::det() const {
  return checked_add(checked_mul(a, d), -checked_mul(b, c));
}

MatZ multiply(const MatZ& x, const MatZ& y) {
  return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
          checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
          checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
          checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

std::string to_string(const MatZ& m) {
  std::ostringstream os;
  os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
  return os.str();
}

namespace {
int64_t mod_reduce(int64_t x, int64_t N) {
  int64_t r = x % N;
  return r < 0 ? r + N : r;
}
}  // namespace

int64_t MatModN::det_mod() const {
  return mod_reduce(a * d - b * c, modulus);
}

bool MatModN::is_identity() const {
  return *this == reduce_mod(mat_identity(), modulus);
}

MatModN MatModN::negate() const {
  return make_mod(-a, -b, -c, -d, modulus);
}

MatModN MatModN::inverse() const {
  return make_mod(d, -b, -c, a, modulus);
}

MatModN make_mod(int64_t a, int64_t b, int64_t c, int64_t d, int64_t N) {
  if (N < 1) throw std::domain_error("modulus must be >= 1");
  return {mod_reduce(a, N), mod_reduce(b, N), mod_reduce(c, N), mod_reduce(d, N), N};
}

MatModN reduce_mod(const MatZ& x, int64_t N) {
  return make_mod(x.a, x.b, x.c, x.d, N);
}

MatModN mod_multiply(const MatModN& x, const MatModN& y) {
  if (x.modulus != y.modulus)
    throw std::domain_error("modulus mismatch in mod-N product");
  const int64_t N = x.modulus;
  // entries < N <= 2^31 in practice; products fit comfortably in int64
  return make_mod(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                  x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d, N);
}

std::string to_string(const MatModN& m) {
  std::ostringstream os;
  os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]] mod "
     << m.modulus;
  return os.str();
}

MatZ gen_matrix(Gen g) {
  switch (g) {
    case Gen::S: return gen_s();
    case Gen::SInv: return gen_s().inverse();
    case Gen::T: return gen_t();
    case Gen::TInv: return gen_t().inverse();
  }
  throw std::logic_error("unreachable generator tag");
}

Gen gen_inverse(Gen g) {
  switch (g) {
    case Gen::S: return Gen::SInv;
    case Gen::SInv: return Gen::S;
    case Gen::T: return Gen::TInv;
    case Gen::TInv: return Gen::T;
  }
  throw std::logic_error("unreachable generator tag");
}

MatZ word_to_matrix(const GeneratorWord& w) {
  MatZ m = mat_identity();
  for (Gen g : w) m = m * gen_matrix(g);
  return m;
}

GeneratorWord parse_word(std::string_view text) {
  GeneratorWord w;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "S") w.push_back(Gen::S);
    else if (tok == "T") w.push_back(Gen::T);
    else if (tok == "S-1" || tok == "S^-1") w.push_back(Gen::SInv);
    else if (tok == "T-1" || tok == "T^-1") w.push_back(Gen::TInv);
    else throw parse_error("unknown generator token '" + tok + "'");
  }
  return w;
}

std::string word_to_string(const GeneratorWord& w) {
  std::string s;
  for (Gen g : w) {
    if (!s.empty()) s += ' ';
    switch (g) {
      case Gen::S: s += "S"; break;
      case Gen::SInv: s += "S-1"; break;
      case Gen::T: s += "T"; break;
      case Gen::TInv: s += "T-1"; break;
    }
  }
  return s;
}

int64_t sl2_group_order(int64_t N) {
  if (N < 1) throw std::domain_error("modulus must be >= 1");
  int64_t order = checked_mul(checked_mul(N, N), N);
  int64_t m = N;
  for (int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    order = order / (p * p) * (p * p - 1);
  }
  if (m > 1) order = order / (m * m) * (m * m - 1);
  return order;
}

}  // namespace emsurf
