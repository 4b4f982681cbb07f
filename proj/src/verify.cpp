#include "zmx/verify.hpp"

#include "zmx/cyclic.hpp"
#include "zmx/graph.hpp"

#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace zmx {

namespace {

using Failure = std::optional<std::string>;
using TrialFn = std::function<Failure(Sampler&, int n, const VerifyConfig&)>;

constexpr std::size_t kMaxNotes = 8;

Failure fail_if(bool bad, const std::string& what) {
    return bad ? Failure(what) : std::nullopt;
}

Failure det_formula_trial(Sampler& s, int n, const VerifyConfig& cfg) {
    CyclicParams p = random_cyclic_params(s, n, cfg.range, 0.25);
    const Rational super_product = [&] {
        Rational x(1);
        for (const auto& v : p.super) {
            x *= v;
        }
        return x;
    }();
    if (super_product != 0 && s.chance(0.2)) {
        // Force c = d to exercise the singular branch.
        Rational d(1);
        for (const auto& v : p.diag) {
            d *= v;
        }
        p.corner = d / super_product;
    }
    const Matrix a = from_cyclic_params(p);
    if (!is_inverse_cyclic(a)) {
        return "generated matrix is not inverse cyclic";
    }
    const Rational oracle = det(a);
    if (cyclic_det(a) != oracle) {
        return "cyclic_det " + to_string(cyclic_det(a)) + " != Bareiss det " + to_string(oracle);
    }
    const auto [d, c] = cyclic_products(a);
    return fail_if((d == c) != (oracle == 0), "d = c does not match singularity");
}

Failure cycle_matrix_trial(Sampler& s, int n, const VerifyConfig& cfg) {
    // Forward: full, inverse cyclic, d != c  =>  inverse is bdsw.
    CyclicParams p = random_full_cyclic_params(s, n, cfg.range);
    Matrix a = from_cyclic_params(p);
    while (cyclic_products(a).d == cyclic_products(a).c) {
        p.corner *= 2;
        a = from_cyclic_params(p);
    }
    if (!is_full(a)) {
        return "full parameters produced a matrix with a zero entry";
    }
    const Matrix b = inverse(a);
    if (!is_bdsw(b)) {
        return "inverse of a full inverse cyclic matrix is not bdsw";
    }
    if (cyclic_inverse(a) != b) {
        return "closed-form inverse differs from Gauss-Jordan";
    }
    const auto [d, c] = cyclic_products(a);
    const Rational constant = d / (d - c);
    for (int i = 0; i < n; ++i) {
        if (a(i, i) * b(i, i) != constant) {
            return "a_ii * b_ii != d / (d - c) at i = " + std::to_string(i + 1);
        }
    }
    if (!roundtrip_check(a)) {
        return "roundtrip_check failed on forward sample";
    }

    // Backward: nonsingular bdsw  =>  inverse is full and inverse cyclic.
    Matrix bdsw = random_bdsw(s, n, cfg.range);
    while (det(bdsw) == 0) {
        bdsw(n - 1, 0) *= 2;
    }
    const Matrix back = inverse(bdsw);
    if (!is_full(back) || !is_inverse_cyclic(back)) {
        return "inverse of a nonsingular bdsw matrix is not full inverse cyclic";
    }
    return fail_if(!roundtrip_check(back), "roundtrip_check failed on backward sample");
}

Failure bdsw_z_trial(Sampler& s, int n, const VerifyConfig& cfg) {
    const std::pair<SignCase, SignVerdict> cases[] = {
        {SignCase::Positive, SignVerdict::InverseM},
        {SignCase::Negative, SignVerdict::InverseN},
        {SignCase::PositiveWrongGap, SignVerdict::Neither},
        {SignCase::NegativeWrongGap, SignVerdict::Neither},
        {SignCase::Mixed, SignVerdict::Neither},
    };
    for (const auto& [which, expected] : cases) {
        const Matrix a = from_cyclic_params(random_signed_cyclic_params(s, n, which));
        const SignVerdict verdict = bdsw_sign_classify(a);
        if (verdict != expected) {
            return "verdict " + std::string(to_string(verdict)) + ", expected " +
                   std::string(to_string(expected));
        }
        const Matrix b = inverse(a);
        const bool inverse_m = is_bdsw(b) && is_nonsingular_m(b, cfg.order_cap);
        const bool inverse_n = is_bdsw(b) && is_n(b, cfg.order_cap);
        if (inverse_m != (expected == SignVerdict::InverseM) ||
            inverse_n != (expected == SignVerdict::InverseN)) {
            return "oracle classification of the inverse disagrees with " +
                   std::string(to_string(expected));
        }
    }
    return std::nullopt;
}

Failure type_d_trial(Sampler& s, int n, const VerifyConfig& cfg) {
    const TypeDParams p = random_type_d_params(s, n, cfg.range);
    const TypeDCheck check = type_d_verify(p, cfg.order_cap);
    if (!check.tridiagonal || !check.z) {
        return "inverse is not a tridiagonal Z-matrix";
    }
    if (check.l_index_of_inverse != check.expected_l_index(n)) {
        return "l_index " + std::to_string(check.l_index_of_inverse) + ", expected " +
               std::to_string(check.expected_l_index(n));
    }
    const Matrix inv = inverse(type_d(p));
    const Rational& last = p.a[n - 1];
    if (last < 0 && !is_n(inv, cfg.order_cap)) {
        return "a_n < 0 but inverse is not an N-matrix";
    }
    if (last == 0 && (!is_n0(inv, cfg.order_cap) || is_n(inv, cfg.order_cap))) {
        return "a_n = 0 but inverse is not N0-and-not-N";
    }
    if (n >= 3 && p.a[n - 2] == 0 && !is_f0(inv, cfg.order_cap)) {
        return "a_(n-1) = 0 but inverse is not F0";
    }
    return std::nullopt;
}

Failure polyn_trial(Sampler& s, int n, const VerifyConfig& cfg) {
    for (SignMode mode : {SignMode::Nonneg, SignMode::Nonpos}) {
        const CirculantParams p = random_circulant_params(s, n, mode, s.chance(0.5));
        const bool conditions = circulant_conditions(p, mode);
        const Matrix a = circulant_pz(p);
        bool conforming = false;
        if (det(a) != 0) {
            const Matrix b = inverse(a);
            conforming = is_bdsw(b) && (mode == SignMode::Nonneg ? is_nonsingular_m(b, cfg.order_cap)
                                                                 : is_n(b, cfg.order_cap));
        }
        if (conditions != conforming) {
            return std::string(mode == SignMode::Nonneg ? "nonneg" : "nonpos") +
                   " mode: conditions " + (conditions ? "hold" : "fail") + " but inverse " +
                   (conforming ? "conforms" : "does not conform");
        }
    }
    return std::nullopt;
}

Failure maybee_trial(Sampler& s, int n, const VerifyConfig& cfg) {
    Matrix dense = random_matrix(s, n, cfg.range, 0.2);
    while (det(dense) == 0) {
        dense = random_matrix(s, n, cfg.range, 0.2);
    }
    if (maybee_inverse(dense) != inverse(dense)) {
        return "path expansion differs from Gauss-Jordan on a dense matrix";
    }
    Matrix bdsw = random_bdsw(s, n, cfg.range);
    while (det(bdsw) == 0) {
        bdsw(n - 1, 0) *= 2;
    }
    return fail_if(maybee_inverse(bdsw) != inverse(bdsw),
                   "path expansion differs from Gauss-Jordan on a bdsw matrix");
}

Failure zclass_oracles_trial(Sampler& s, int n, const VerifyConfig& cfg) {
    const Matrix a = random_z_matrix(s, n, 3, 0.4);
    const ClassReport r = classify(a, cfg.order_cap);
    if (!r.is_nonsingular) {
        return fail_if(r.is_nonsingular_m || r.is_n, "singular matrix classified nonsingular M or N");
    }
    const Matrix b = inverse(a);
    if (r.is_nonsingular_m != all_nonnegative(b)) {
        return "nonsingular M <=> inverse >= 0 violated";
    }
    if ((r.is_nonsingular_m && r.irreducible) != all_positive(b)) {
        return "irreducible nonsingular M <=> inverse > 0 violated";
    }
    if (r.is_n != all_negative(b)) {
        return "N <=> inverse < 0 violated";
    }
    if (r.is_n0 != (all_nonpositive(b) && r.irreducible)) {
        return "N0 <=> inverse <= 0 and irreducible violated";
    }
    if (n >= 3) {
        bool minors_nonpositive = true;
        const std::vector<int> signs = principal_minor_signs(b, cfg.order_cap);
        for (std::uint64_t mask = 1; mask < signs.size(); ++mask) {
            if (std::popcount(mask) >= 2 && signs[mask] > 0) {
                minors_nonpositive = false;
            }
        }
        bool positive_diagonal = false;
        for (int i = 0; i < n; ++i) {
            positive_diagonal = positive_diagonal || b(i, i) > 0;
        }
        const bool by_inverse = r.determinant < 0 && minors_nonpositive && positive_diagonal;
        if (r.is_f0 != by_inverse) {
            return "F0 <=> (det < 0, minors of inverse of order >= 2 nonpositive, positive "
                   "diagonal entry) violated";
        }
    }
    return std::nullopt;
}

const std::map<std::string, TrialFn>& registry() {
    static const std::map<std::string, TrialFn> suites = {
        {"bdsw-z", bdsw_z_trial},
        {"cycle-matrix", cycle_matrix_trial},
        {"det-formula", det_formula_trial},
        {"maybee", maybee_trial},
        {"polyn", polyn_trial},
        {"type-d", type_d_trial},
        {"zclass-oracles", zclass_oracles_trial},
    };
    return suites;
}

// Smallest order each suite can run at, and the largest it accepts.
std::pair<int, int> order_bounds(const std::string& id, int cap) {
    if (id == "maybee") {
        return {1, std::min(cap, kPathOrderCap)};
    }
    if (id == "polyn" || id == "cycle-matrix" || id == "bdsw-z" || id == "zclass-oracles") {
        return {2, cap};
    }
    return {1, cap};
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {"cycle-matrix", "det-formula",    "bdsw-z", "type-d",
                                                 "polyn",        "maybee", "zclass-oracles"};
    return ids;
}

std::uint64_t trial_seed(std::uint64_t seed, int n, int trial) {
    // splitmix64 finaliser over the packed (seed, n, trial) triple.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(n) << 32 |
                                                      static_cast<std::uint32_t>(trial));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

VerifySummary run_verify(const VerifyConfig& config) {
    const auto& suites = registry();
    const auto it = suites.find(config.theorem);
    if (it == suites.end()) {
        throw UnknownTheorem(config.theorem);
    }
    if (config.trials < 1) {
        throw InvalidParameters("trials must be at least 1");
    }
    if (config.n_lo > config.n_hi) {
        throw InvalidParameters("empty order range");
    }
    const auto [min_order, max_order] = order_bounds(config.theorem, config.order_cap);
    if (config.n_lo < min_order) {
        throw InvalidParameters(config.theorem + " needs n >= " + std::to_string(min_order));
    }
    if (config.n_hi > max_order) {
        throw OrderCapExceeded(config.n_hi, max_order);
    }

    VerifySummary summary;
    summary.theorem = config.theorem;
    summary.seed = config.seed;
    for (int n = config.n_lo; n <= config.n_hi; ++n) {
        for (int trial = 0; trial < config.trials; ++trial) {
            Sampler sampler(trial_seed(config.seed, n, trial));
            Failure failure;
            try {
                failure = it->second(sampler, n, config);
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            ++summary.trials;
            if (failure) {
                ++summary.failures;
                if (summary.failure_notes.size() < kMaxNotes) {
                    std::ostringstream note;
                    note << "n=" << n << " trial=" << trial << ": " << *failure;
                    summary.failure_notes.push_back(note.str());
                }
            }
        }
    }
    return summary;
}

}  // namespace zmx
