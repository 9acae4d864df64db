#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramv/report.hpp"

namespace ramv {

// Identity evaluators.  Each *_eval computes both sides of its identity from
// scratch (LHS and RHS never share series machinery beyond the engines),
// fills in a VerificationReport, and never weakens a tolerance to force a
// pass.  Hypothesis failures are reported, not thrown: when
// validate_hypotheses rejects the parameters the evaluator returns a report
// with pass = false and both sides unset.  Structural impossibilities
// (wrong family sizes, t = 0 where 1/t appears) throw DomainError or
// DegenerateInput instead, since no meaningful report exists.

// Checks the non-resonance and ratio conditions of the identity `id` for
// all index pairs up to n_max, plus the theta/beta range constraints.
// Reporting operation: never throws on bad parameters.  The resonance scan
// solves x_i^2 n^2 + a_i^2 - a_j^2 = x_j^2 k^2 for integer k at each n (and
// the y/b analogue), so one pass is O(n_max) per pair, not O(n_max^2).
HypothesisReport validate_hypotheses(const std::string& id, const IdentityParams& p,
                                     long n_max, const PrecisionContext& ctx);

// Proposition 1: products of cos kernels, weight (-1)^(n-1) cos(n theta).
VerificationReport prop1_eval(const IdentityParams& p, const PrecisionContext& ctx);

// Proposition 2: products of sin kernels over odd indices, |Re theta_i| <= pi/2.
VerificationReport prop2_eval(const IdentityParams& p, const PrecisionContext& ctx);

// Proposition 3: bilateral form mixing sin-kernel factors in t with
// hyperbolic factors in 1/t.  Requires t != 0.
VerificationReport prop3_eval(const IdentityParams& p, const PrecisionContext& ctx);

// Proposition 7: the two-parameter Lambert-type transformation.  Reads
// theta1, theta2 from p.thetas, x1, x2 from p.xs, and w from p.w.
VerificationReport prop7_eval(const IdentityParams& p, const PrecisionContext& ctx);

// Corollary of Proposition 7 at alpha*beta = pi: alpha = p.xs[0], and
// p.xs[1] must equal pi/alpha (enforced, not assumed).
VerificationReport cor310_eval(const IdentityParams& p, const PrecisionContext& ctx);

// The theta -> 0 limit identity with coth closed form.  The two slowly
// converging difference series are summed in paired form; splitting them
// is not an option since each half diverges logarithmically.
VerificationReport eq311_eval(const IdentityParams& p, const PrecisionContext& ctx);

// Theorem 5: product of M expansions f_i((t - a_i)/x_i) against the
// rearranged double series.  Non-resonance x_i c_i(n) - x_j c_j(k) != a_j - a_i
// is probed numerically over the scan window.
VerificationReport theorem5_eval(const std::vector<FunctionExpansion>& fs,
                                 const std::vector<BigComplex>& xs,
                                 const std::vector<BigComplex>& as_, const BigComplex& t,
                                 const PrecisionContext& ctx);

// Ready-made expansions for the theorem demos and cross-checks.  The kernel
// pair carries theta in the residues over the n^2 / (2n+1)^2 lattices; the
// power pair has constant residue 1 with poles n^2 and n^4.  The closed
// forms guard the small-argument cancellation at the origin; elsewhere they
// are the plain kernel formulas.
FunctionExpansion expansion_cos_kernel(const BigComplex& theta);
FunctionExpansion expansion_sin_kernel(const BigComplex& theta);
FunctionExpansion expansion_inverse_squares();
FunctionExpansion expansion_inverse_fourth();

// Theorem 6: bilateral extension with a second family g_i((1/t - b_i)/y_i).
// gs empty degenerates to theorem5_eval.
VerificationReport theorem6_eval(const std::vector<FunctionExpansion>& fs,
                                 const std::vector<FunctionExpansion>& gs,
                                 const std::vector<BigComplex>& xs,
                                 const std::vector<BigComplex>& as_,
                                 const std::vector<BigComplex>& ys,
                                 const std::vector<BigComplex>& bs, const BigComplex& t,
                                 const PrecisionContext& ctx);

// Section 4 corollary family, dispatched on id ("cor4.1" ... "cor4.23",
// "eq4.5" ... "eq4.20").  Every entry evaluates the printed form of its
// equation, including the divided (theta -> 0) variants which use the
// analytic limit sin((2n+1)theta)/theta -> (2n+1) rather than small-theta
// division.
VerificationReport cor4_family_eval(const std::string& id, const IdentityParams& p,
                                    const PrecisionContext& ctx);

// Proposition 8: the power-pair Lambert identity for exponents M >= N >= 1
// with exact Bernoulli closed form.  Reads M, N from the fields of p and
// x1, x2, t from xs/t.
VerificationReport prop8_eval(const IdentityParams& p, const PrecisionContext& ctx);

// Registry of named identities.  Defaults always satisfy the hypotheses, so
// `verify <id>` with no overrides passes.
struct RegistryEntry {
    std::string id;
    std::string reference;
    IdentityParams defaults;
    std::function<VerificationReport(const IdentityParams&, const PrecisionContext&)> eval;
};

// Entries in canonical order (the order `list` and `sweep` print).
const std::vector<RegistryEntry>& registry();

// nullptr when the id is unknown.
const RegistryEntry* find_identity(const std::string& id);

// Raw override strings from the CLI, e.g. {"x", "[1,i]"}, {"t", "1/3"}.
using Overrides = std::map<std::string, std::string>;

// Merges overrides onto the entry's defaults, validates hypotheses, then
// evaluates.  Throws UnknownIdentity for an unregistered id and DomainError
// for an override that does not parse.
VerificationReport registry_verify(const std::string& id, const Overrides& overrides,
                                   const PrecisionContext& ctx);

} // namespace ramv
