#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphstab {

inline constexpr std::size_t kMaxPauliQubits = 64;

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

/// Signed Pauli operator i^phase * prod_q X_q^{x_q} Z_q^{z_q}, with Y = iXZ.
/// Bit q of the x/z masks belongs to the qubit at position q.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n);
  PauliString(std::size_t n, std::uint64_t xbits, std::uint64_t zbits,
              int phase_exp);

  /// A single letter on qubit q, sign +1 (Y is stored as phase 1 with x=z=1).
  static PauliString single(std::size_t n, std::size_t q, PauliLetter letter);

  /// Hermitian Pauli from letters and a real sign, e.g. ("ZXIX", -1).
  static PauliString from_letters(std::string_view letters, int sign = +1);

  std::size_t size() const { return n_; }
  std::uint64_t xbits() const { return x_; }
  std::uint64_t zbits() const { return z_; }
  int phase_exp() const { return phase_; }

  bool x(std::size_t q) const { return (x_ >> q) & 1u; }
  bool z(std::size_t q) const { return (z_ >> q) & 1u; }
  PauliLetter letter(std::size_t q) const;

  std::size_t weight() const;
  bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }

  /// Exponent k such that the operator is i^k times the tensor product of its
  /// letters (Y counted as the hermitian Y).
  int letter_phase_exp() const;
  bool is_hermitian() const { return letter_phase_exp() % 2 == 0; }

  /// +1 or -1 for hermitian strings, nullopt otherwise.
  std::optional<int> sign() const;

  PauliString negated() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/// Exact product p*q including phase.
PauliString multiply(const PauliString& p, const PauliString& q);
PauliString operator*(const PauliString& p, const PauliString& q);

/// Symplectic inner product test.
bool commutes(const PauliString& p, const PauliString& q);

/// GF(2) linear independence of the (x | z) vectors; signs are ignored.
bool independent(std::span<const PauliString> set);

/// Text form: optional sign prefix (+, -, +i, -i, i; U+2212 accepted for
/// minus) followed by one of I X Y Z per qubit. Throws ParseError.
PauliString parse_pauli(std::string_view text);

/// Inverse of parse_pauli. Sign prefix is always written ("+", "-", "+i", "-i").
std::string to_string(const PauliString& p);

}  // namespace graphstab
