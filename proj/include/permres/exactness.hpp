#pragma once

// Exactness of the complex over the fraction field, field specializations
// and the integers at q = ±1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "permres/complex.hpp"
#include "permres/linalg.hpp"

namespace permres {

/// The Mersenne prime used for modular lower bounds.
constexpr std::uint32_t kLargePrime = 2147483647u;

struct EngineOptions {
    /// Skip columns of d_n known to be dependent from the pivots of d_{n+1}.
    bool clearing = true;
    /// Largest dim C_n handled by exact rational elimination.
    std::int64_t rational_limit = 3000;
    /// Largest rows * cols handled by Bareiss over Z[q, q^-1].
    std::int64_t bareiss_limit = 20000;
    /// Largest rows * cols handled by Smith normal form.
    std::int64_t snf_limit = 400000;
};

struct DegreeReport {
    int n = 0;
    std::int64_t dim = 0;
    std::int64_t rank_dn = 0;
    std::int64_t rank_dnext = 0;
    /// Nullopt when the engine could not decide (only beyond the size limits).
    std::optional<bool> exact;
    /// Elementary divisors of d_{n+1} (integral strategy only).
    std::optional<std::vector<BigInt>> divisors;
    std::string method;
};

struct ExactnessReport {
    Composition lambda;
    std::string strategy;
    std::vector<DegreeReport> degrees;
    /// Every reported degree is decided and exact.
    bool all_exact() const;
};

/// Ranks of d_n (n = 0..a(λ)); entries for d_n outside [lo, hi] are absent.
struct RankTable {
    std::vector<std::optional<std::int64_t>> rank;  // index n
    std::string method;
};

/// Exact ranks of d_lo..d_hi over F_p at q0 (with clearing when enabled).
RankTable ranks_mod_p(const ComplexIndex& index, std::uint32_t p, std::uint32_t q0, int lo, int hi,
                      bool clearing = true);

/// Report for degrees lo..hi (clamped to -1..a(λ)) over one strategy.
/// The index must be built through degree hi + 1 (or fully).
ExactnessReport check_exactness(const ComplexIndex& index, const Specialization& spec, int lo, int hi,
                                const EngineOptions& options = {});

/// One row of check_exactness.
DegreeReport check_exact_at(const ComplexIndex& index, int n, const Specialization& spec,
                            const EngineOptions& options = {});

/// generic followed by default_battery().
std::vector<Specialization> full_battery();

std::vector<ExactnessReport> full_report(const Composition& lambda, const std::vector<Specialization>& strategies,
                                         const EngineOptions& options = {});

/// (A_n) and (B_n) for K_n = symbols with standard tail, over F_p at q0.
struct ABResult {
    bool A = false;
    bool B = false;
    std::int64_t k_size = 0;
};
ABResult check_AB(const ComplexIndex& index, int n, std::uint32_t p, std::uint32_t q0);

/// Positions of degree-n symbols whose tail is standard (K_0: positions in T^rs(λ)).
std::vector<std::int64_t> standard_tail_symbols(const ComplexIndex& index, int n);

/// Deterministic q0 in [2, p - 2] for the generic strategy.
std::uint32_t generic_point(const Composition& lambda, std::uint32_t p, int salt = 0);

nlohmann::json to_json(const ExactnessReport& report);
nlohmann::json to_json(const std::vector<ExactnessReport>& reports);

}  // namespace permres
