#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace emsurf {

// Exact arithmetic for elements of SL2(Z) and their reductions mod N.
// Entries are checked 64-bit integers: any overflow throws, never wraps.

int64_t checked_add(int64_t x, int64_t y);
int64_t checked_mul(int64_t x, int64_t y);

// Row-major 2x2 integer matrix [[a,b],[c,d]].
struct MatZ {
  int64_t a = 1, b = 0, c = 0, d = 1;

  int64_t det() const;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  // Adjugate; equals the group inverse when det = 1.
  MatZ inverse() const { return {d, -b, -c, a}; }
  MatZ negate() const { return {-a, -b, -c, -d}; }

  bool operator==(const MatZ&) const = default;
};

MatZ multiply(const MatZ& x, const MatZ& y);
inline MatZ operator*(const MatZ& x, const MatZ& y) { return multiply(x, y); }

inline MatZ mat_identity() { return {1, 0, 0, 1}; }
inline MatZ gen_s() { return {0, -1, 1, 0}; }
inline MatZ gen_t() { return {1, 1, 0, 1}; }
// T^k = [[1,k],[0,1]]
inline MatZ gen_t_pow(int64_t k) { return {1, k, 0, 1}; }

std::string to_string(const MatZ& m);

// Reduction mod N, entries stored in [0, N).
struct MatModN {
  int64_t a = 0, b = 0, c = 0, d = 0;
  int64_t modulus = 1;

  bool operator==(const MatModN&) const = default;
  // Lexicographic (a,b,c,d) order; moduli must agree.
  auto entries() const { return std::array<int64_t, 4>{a, b, c, d}; }
  bool operator<(const MatModN& o) const { return entries() < o.entries(); }

  int64_t det_mod() const;
  bool is_identity() const;
  MatModN negate() const;
  // Adjugate reduced mod N; the inverse when det = 1 mod N.
  MatModN inverse() const;
};

// N >= 1 required.
MatModN reduce_mod(const MatZ& x, int64_t N);
MatModN make_mod(int64_t a, int64_t b, int64_t c, int64_t d, int64_t N);
MatModN mod_multiply(const MatModN& x, const MatModN& y);

std::string to_string(const MatModN& m);

// Words in the standard generators.
enum class Gen : uint8_t { S, SInv, T, TInv };
using GeneratorWord = std::vector<Gen>;

MatZ gen_matrix(Gen g);
Gen gen_inverse(Gen g);

// Left-to-right product; the empty word is the identity.
MatZ word_to_matrix(const GeneratorWord& w);

// Tokens "S", "T", "S-1", "T-1" (also "S^-1"/"T^-1"), whitespace-separated.
GeneratorWord parse_word(std::string_view text);
std::string word_to_string(const GeneratorWord& w);

// |SL2(Z/N)| = N^3 * prod_{p|N} (1 - 1/p^2), by trial-division factoring.
int64_t sl2_group_order(int64_t N);

}  // namespace emsurf
