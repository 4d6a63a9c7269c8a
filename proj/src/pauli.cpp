#include "graphstab/pauli.hpp"

#include <bit>

#include "graphstab/error.hpp"
#include "graphstab/gf2.hpp"

namespace graphstab {
namespace {

int mod4(int k) { return ((k % 4) + 4) % 4; }

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_size(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size())
    throw Error("Pauli size mismatch: " + std::to_string(p.size()) + " vs " +
                std::to_string(q.size()));
}

}  // namespace

PauliString::PauliString(std::size_t n) : PauliString(n, 0, 0, 0) {}

PauliString::PauliString(std::size_t n, std::uint64_t xbits,
                         std::uint64_t zbits, int phase_exp)
    : n_(n), x_(xbits), z_(zbits), phase_(mod4(phase_exp)) {
  if (n > kMaxPauliQubits)
    throw Error("Pauli strings are limited to 64 qubits");
  if ((x_ | z_) & ~low_mask(n))
    throw Error("Pauli bits set beyond qubit count");
}

PauliString PauliString::single(std::size_t n, std::size_t q,
                                PauliLetter letter) {
  if (q >= n) throw Error("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << q;
  switch (letter) {
    case PauliLetter::I: return PauliString(n);
    case PauliLetter::X: return PauliString(n, bit, 0, 0);
    case PauliLetter::Z: return PauliString(n, 0, bit, 0);
    case PauliLetter::Y: return PauliString(n, bit, bit, 1);
  }
  return PauliString(n);
}

PauliString PauliString::from_letters(std::string_view letters, int sign) {
  if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
  return parse_pauli((sign < 0 ? "-" : "+") + std::string(letters));
}

PauliLetter PauliString::letter(std::size_t q) const {
  const bool xq = x(q), zq = z(q);
  if (xq && zq) return PauliLetter::Y;
  if (xq) return PauliLetter::X;
  if (zq) return PauliLetter::Z;
  return PauliLetter::I;
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

int PauliString::letter_phase_exp() const {
  // XZ = -iY, so each Y factor stored as XZ carries i^{-1} relative to Y.
  return mod4(phase_ - std::popcount(x_ & z_));
}

std::optional<int> PauliString::sign() const {
  switch (letter_phase_exp()) {
    case 0: return +1;
    case 2: return -1;
    default: return std::nullopt;
  }
}

PauliString PauliString::negated() const {
  return PauliString(n_, x_, z_, phase_ + 2);
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  require_same_size(p, q);
  // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}
  const int swaps = std::popcount(p.zbits() & q.xbits());
  return PauliString(p.size(), p.xbits() ^ q.xbits(), p.zbits() ^ q.zbits(),
                     p.phase_exp() + q.phase_exp() + 2 * swaps);
}

PauliString operator*(const PauliString& p, const PauliString& q) {
  return multiply(p, q);
}

bool commutes(const PauliString& p, const PauliString& q) {
  require_same_size(p, q);
  const int form = std::popcount(p.xbits() & q.zbits()) +
                   std::popcount(p.zbits() & q.xbits());
  return form % 2 == 0;
}

bool independent(std::span<const PauliString> set) {
  if (set.empty()) return true;
  const std::size_t n = set.front().size();
  std::vector<gf2::Row> rows;
  rows.reserve(set.size());
  for (const auto& p : set) {
    require_same_size(set.front(), p);
    gf2::Row row(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      row[q] = p.x(q);
      row[n + q] = p.z(q);
    }
    rows.push_back(std::move(row));
  }
  return gf2::rank(std::move(rows)) == set.size();
}

PauliString parse_pauli(std::string_view text) {
  const std::string original(text);
  int sign_exp = 0;
  auto consume = [&](std::string_view prefix) {
    if (text.substr(0, prefix.size()) == prefix) {
      text.remove_prefix(prefix.size());
      return true;
    }
    return false;
  };
  bool negative = false;
  if (consume("+")) {
  } else if (consume("-") || consume("−")) {
    negative = true;
  }
  if (consume("i")) sign_exp = 1;
  if (negative) sign_exp += 2;

  if (text.empty()) throw ParseError("Pauli string '" + original + "' has no letters");
  if (text.size() > kMaxPauliQubits)
    throw ParseError("Pauli string '" + original + "' exceeds 64 qubits");

  const std::size_t n = text.size();
  std::uint64_t x = 0, z = 0;
  int ys = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Z': z |= bit; break;
      case 'Y': x |= bit; z |= bit; ++ys; break;
      default:
        throw ParseError("Pauli string '" + original + "': bad letter '" +
                         std::string(1, text[q]) + "' at qubit " +
                         std::to_string(q));
    }
  }
  return PauliString(n, x, z, sign_exp + ys);
}

std::string to_string(const PauliString& p) {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  static constexpr char kLetter[] = {'I', 'X', 'Y', 'Z'};
  std::string out = kPrefix[p.letter_phase_exp()];
  for (std::size_t q = 0; q < p.size(); ++q)
    out.push_back(kLetter[static_cast<int>(p.letter(q))]);
  return out;
}

}  // namespace graphstab
