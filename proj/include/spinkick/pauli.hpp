#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinkick/linalg.hpp"

namespace spinkick {

// Qubit-count cap for the 4^n anticommutant enumeration.
inline constexpr int kEnumerationQubitCap = 12;

// Widest string the symplectic masks can hold.
inline constexpr int kPauliQubitCap = 32;

/**
 * An n-qubit tensor product of {I, X, Y, Z} with a fourth-root-of-unity
 * phase, stored in binary symplectic form. Site 1 is the leftmost tensor
 * factor and occupies the most significant bit of each n-bit mask, matching
 * the |b1 b2 ... bn> basis-index convention used everywhere else.
 *
 * The represented operator is i^phase_power * w_1 (x) w_2 (x) ... (x) w_n,
 * where site k carries w_k = I, X, Z, Y for (x,z) bits (0,0), (1,0), (0,1),
 * (1,1). Y absorbs its i*X*Z phase into the letter, so a phase-(+1) string is
 * always Hermitian and squares to the identity.
 */
class PauliString {
 public:
  PauliString(int num_qubits, std::uint32_t x_mask, std::uint32_t z_mask,
              int phase_power = 0)
      : num_qubits_(num_qubits),
        x_mask_(x_mask),
        z_mask_(z_mask),
        phase_power_(((phase_power % 4) + 4) % 4) {
    if (num_qubits < 1 || num_qubits > kPauliQubitCap) {
      throw ValidationError("PauliString: qubit count " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(kPauliQubitCap) + "]");
    }
    const std::uint32_t valid = num_qubits == 32 ? ~0u : (1u << num_qubits) - 1u;
    if ((x_mask & ~valid) != 0 || (z_mask & ~valid) != 0) {
      throw ValidationError("PauliString: mask bits beyond qubit count");
    }
  }

  static PauliString identity(int num_qubits) { return {num_qubits, 0, 0, 0}; }

  // Parses "YZY" / "IYI" style text, site 1 first. An optional "+", "-",
  // "i", "+i" or "-i" prefix selects the phase.
  static PauliString from_text(std::string_view text);

  int num_qubits() const { return num_qubits_; }
  std::uint32_t x_mask() const { return x_mask_; }
  std::uint32_t z_mask() const { return z_mask_; }

  // The scalar prefactor is i^phase_power with phase_power in {0,1,2,3}.
  int phase_power() const { return phase_power_; }
  Complex phase() const {
    static constexpr std::array<Complex, 4> roots{Complex{1, 0}, Complex{0, 1},
                                                  Complex{-1, 0}, Complex{0, -1}};
    return roots[static_cast<std::size_t>(phase_power_)];
  }

  bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }
  bool is_hermitian() const { return phase_power_ % 2 == 0; }

  char letter_at(int site) const {  // 1-based
    if (site < 1 || site > num_qubits_) {
      throw ValidationError("PauliString: site " + std::to_string(site) +
                            " out of range 1.." + std::to_string(num_qubits_));
    }
    const int bit = num_qubits_ - site;
    const bool x = (x_mask_ >> bit) & 1u;
    const bool z = (z_mask_ >> bit) & 1u;
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }

  std::string str() const {
    static constexpr std::array<const char*, 4> prefix{"", "i", "-", "-i"};
    std::string out = prefix[static_cast<std::size_t>(phase_power_)];
    for (int site = 1; site <= num_qubits_; ++site) out.push_back(letter_at(site));
    return out;
  }

  PauliString with_phase(int phase_power) const {
    return {num_qubits_, x_mask_, z_mask_, phase_power};
  }

  friend PauliString operator*(const PauliString& p, const PauliString& q) {
    if (p.num_qubits_ != q.num_qubits_) {
      throw ValidationError("Pauli product: dimension mismatch (" +
                            std::to_string(p.num_qubits_) + " vs " +
                            std::to_string(q.num_qubits_) + " qubits)");
    }
    const std::uint32_t x = p.x_mask_ ^ q.x_mask_;
    const std::uint32_t z = p.z_mask_ ^ q.z_mask_;
    // Per-site phase bookkeeping for w(x1,z1)*w(x2,z2) = i^g * w(x1^x2, z1^z2)
    // with w(x,z) = i^{xz} X^x Z^z, summed over sites via popcounts.
    const int g = std::popcount(p.x_mask_ & p.z_mask_) +
                  std::popcount(q.x_mask_ & q.z_mask_) - std::popcount(x & z) +
                  2 * std::popcount(p.z_mask_ & q.x_mask_);
    return {p.num_qubits_, x, z, p.phase_power_ + q.phase_power_ + g};
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  // Canonical order: by masks (x first), phase last. Member order matters.
  friend std::strong_ordering operator<=>(const PauliString&, const PauliString&) = default;

 private:
  int num_qubits_;
  std::uint32_t x_mask_;
  std::uint32_t z_mask_;
  int phase_power_;
};

inline PauliString PauliString::from_text(std::string_view text) {
  int phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    phase = text.front() == '-' ? 2 : 0;
    text.remove_prefix(1);
  }
  if (!text.empty() && (text.front() == 'i')) {
    phase += 1;
    text.remove_prefix(1);
  }
  if (text.empty() || text.size() > kPauliQubitCap) {
    throw ValidationError("Pauli text: expected 1.." + std::to_string(kPauliQubitCap) +
                          " letters from {I,X,Y,Z}");
  }
  std::uint32_t x = 0, z = 0;
  for (char c : text) {
    x <<= 1;
    z <<= 1;
    switch (c) {
      case 'I': break;
      case 'X': x |= 1; break;
      case 'Y': x |= 1; z |= 1; break;
      case 'Z': z |= 1; break;
      default:
        throw ValidationError(std::string("Pauli text: invalid letter '") + c +
                              "' (expected I, X, Y or Z)");
    }
  }
  return {static_cast<int>(text.size()), x, z, phase};
}

// True iff p and q anticommute: the symplectic form <p,q> = x_p.z_q + z_p.x_q
// is odd. Phases are irrelevant.
inline bool anticommutes(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw ValidationError("anticommutes: dimension mismatch (" +
                          std::to_string(p.num_qubits()) + " vs " +
                          std::to_string(q.num_qubits()) + " qubits)");
  }
  const int form = std::popcount(p.x_mask() & q.z_mask()) +
                   std::popcount(p.z_mask() & q.x_mask());
  return (form & 1) != 0;
}

/**
 * A real-weighted sum of phase-(+1) Pauli strings; the Hamiltonian
 * representation. Construction canonicalizes: +/-1 phases fold into the
 * coefficients, duplicate strings merge, exact-zero coefficients drop, and
 * terms sort in canonical mask order. Imaginary phases are rejected (they
 * would break Hermiticity).
 */
class PauliSum {
 public:
  struct Term {
    double coefficient;
    PauliString string;
  };

  PauliSum(int num_qubits, const std::vector<std::pair<double, PauliString>>& terms)
      : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kPauliQubitCap) {
      throw ValidationError("PauliSum: qubit count out of range");
    }
    std::vector<Term> folded;
    folded.reserve(terms.size());
    for (const auto& [coeff, str] : terms) {
      if (str.num_qubits() != num_qubits) {
        throw ValidationError("PauliSum: term '" + str.str() + "' has " +
                              std::to_string(str.num_qubits()) + " qubits, expected " +
                              std::to_string(num_qubits));
      }
      if (!str.is_hermitian()) {
        throw ValidationError("PauliSum: term '" + str.str() +
                              "' carries an imaginary phase; the sum would not be Hermitian");
      }
      const double signed_coeff = str.phase_power() == 2 ? -coeff : coeff;
      folded.push_back({signed_coeff, str.with_phase(0)});
    }
    std::sort(folded.begin(), folded.end(),
              [](const Term& a, const Term& b) { return a.string < b.string; });
    for (const auto& term : folded) {
      if (!terms_.empty() && terms_.back().string == term.string) {
        terms_.back().coefficient += term.coefficient;
      } else {
        terms_.push_back(term);
      }
    }
    std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0.0; });
  }

  int num_qubits() const { return num_qubits_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  int num_qubits_;
  std::vector<Term> terms_;
};

/**
 * Every phase-(+1) non-identity Pauli string that anticommutes with EVERY
 * term of h, in canonical mask order. For a Pauli-sum Hamiltonian with
 * distinct terms this termwise condition is equivalent to P H = -H P, since
 * conjugation by P sends each term to +/- itself.
 *
 * Exhaustive over all 4^n strings via symplectic popcounts; capped at
 * n <= 12.
 */
inline std::vector<PauliString> anticommutant(const PauliSum& h) {
  if (h.empty()) {
    throw ValidationError("anticommutant: Hamiltonian has no terms");
  }
  const int n = h.num_qubits();
  if (n > kEnumerationQubitCap) {
    throw ValidationError("anticommutant: qubit count " + std::to_string(n) +
                          " exceeds enumeration cap " + std::to_string(kEnumerationQubitCap));
  }
  struct MaskPair {
    std::uint32_t x, z;
  };
  std::vector<MaskPair> term_masks;
  term_masks.reserve(h.terms().size());
  for (const auto& term : h.terms()) {
    term_masks.push_back({term.string.x_mask(), term.string.z_mask()});
  }
  const std::uint32_t lim = 1u << n;
  std::vector<PauliString> out;
  for (std::uint32_t x = 0; x < lim; ++x) {
    for (std::uint32_t z = 0; z < lim; ++z) {
      if (x == 0 && z == 0) continue;
      bool all_odd = true;
      for (const auto& tm : term_masks) {
        const int form = std::popcount(x & tm.z) + std::popcount(z & tm.x);
        if ((form & 1) == 0) {
          all_odd = false;
          break;
        }
      }
      if (all_odd) out.emplace_back(n, x, z, 0);
    }
  }
  // x-major, z-minor iteration yields canonical (x_mask, z_mask) order already.
  return out;
}

// Dense 2^n x 2^n matrix; site 1 is the most significant Kronecker factor.
inline DenseOperator to_matrix(const PauliString& p) {
  require_dense_cap(p.num_qubits(), "to_matrix(PauliString)");
  static const Matrix kI = (Matrix(2, 2) << 1, 0, 0, 1).finished();
  static const Matrix kX = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  static const Matrix kY =
      (Matrix(2, 2) << 0, Complex{0, -1}, Complex{0, 1}, 0).finished();
  static const Matrix kZ = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  Matrix m = Matrix::Identity(1, 1);
  for (int site = 1; site <= p.num_qubits(); ++site) {
    switch (p.letter_at(site)) {
      case 'I': m = kron(m, kI); break;
      case 'X': m = kron(m, kX); break;
      case 'Y': m = kron(m, kY); break;
      case 'Z': m = kron(m, kZ); break;
    }
  }
  m *= p.phase();
  return {p.num_qubits(), std::move(m)};
}

inline DenseOperator to_matrix(const PauliSum& h) {
  require_dense_cap(h.num_qubits(), "to_matrix(PauliSum)");
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(h.num_qubits()));
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& term : h.terms()) {
    m += term.coefficient * to_matrix(term.string).mat;
  }
  return {h.num_qubits(), std::move(m)};
}

}  // namespace spinkick
