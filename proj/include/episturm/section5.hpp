#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "episturm/subst.hpp"

namespace episturm::weak {

/// Letter-to-word map between different alphabets.
using Coding = std::map<Letter, Word>;

Word encode(const Coding& c, std::string_view w);

struct ExampleSystem {
  Substitution sigma;  // 0→01, 1→100110
  Substitution tau;    // 0→011001, 1→10
  Coding psi;          // A→01, B→10
  Coding rho;          // C→0110, D→1001
  Substitution mu2;    // C→CCDD, D→DDCC
};

const ExampleSystem& example_system();

/// Prefix of u = σ^ω(0).
Word u_prefix(std::size_t len);

/// 1-based start positions of 00 and 11 in w.
std::vector<std::size_t> square_letter_positions(std::string_view w);

/// True iff every 00 and 11 in w starts at an even 1-based position.
bool even_indices(std::string_view w);

bool check_even_indices(std::size_t prefix_len);

/// Even L ≤ prefix_len with u[1..L] a square.
std::vector<std::size_t> square_prefix_lengths(std::size_t prefix_len);

bool is_two_power_of_four(std::size_t len);

/// ρ(μ2^ω(C)) agrees with u, and u splits into 01/10 blocks. Throws
/// DomainError unless prefix_len is a multiple of 4.
bool verify_recodings(std::size_t prefix_len);

struct CompositionReport {
  bool sigma_tau_01 = false;        // σ(01) = τ(01) = 01100110
  bool sigma_tau_10 = false;        // σ(10) = τ(10)
  bool right_to_left = false;       // σ(σ(x)) = τ(σ(x)), τ(τ(x)) = σ(τ(x))
  bool diagrammatic = false;        // σ∘σ = σ∘τ, τ∘σ = τ∘τ read first-apply-left
  bool literal_right_to_left = false;  // the same display read as f(g(x)); expected to fail

  bool holds() const { return sigma_tau_01 && sigma_tau_10 && right_to_left && diagrammatic; }
};

CompositionReport verify_composition_identities();

/// φ = σ∘φ' or τ∘φ' recursively down to the identity.
bool in_sigma_tau_monoid(const Substitution& phi);

/// Monoid elements generated by σ, τ with total image length ≤ bound.
std::vector<Substitution> monoid_elements(std::size_t bound);

struct StabilizerReport {
  std::vector<Substitution> found;
  bool membership = true;
  bool complete = true;
  /// Checked on non-identity elements; the identity has images of length 1.
  bool even_lengths = true;
  bool power_of_four = true;

  bool holds() const { return membership && complete && even_lengths && power_of_four; }
};

/// Requires check_depth ≥ 8·bound.
StabilizerReport verify_stabilizer_theorem(std::size_t bound, std::size_t check_depth);

bool every_long_factor_has_square_letter(std::size_t prefix_len);

/// The Tₙ recurrence agrees with μ2ⁿ(C) for n ≤ n_max.
bool t_recurrence_matches(unsigned n_max);

/// u splits into 01/10 blocks whose A/B coding consists of ABAB/BABA blocks.
bool psi_blocks(std::size_t prefix_len);

struct Claim {
  std::string name;
  bool pass = false;
  std::string detail;
  /// Reported but not part of the overall verdict.
  bool informational = false;
};

std::vector<Claim> run_all(std::size_t prefix_len, std::size_t bound, std::size_t check_depth);

bool all_pass(const std::vector<Claim>& claims);

std::string render(const std::vector<Claim>& claims);

}  // namespace episturm::weak
