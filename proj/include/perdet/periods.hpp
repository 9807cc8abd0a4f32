#pragma once

#include "perdet/cmatrix.hpp"
#include "perdet/pathplan.hpp"

namespace perdet {

struct TransportOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    double improper_cutoff = 1e-12;  // tau cutoff at improper chain ends
};

// Numeric view of a connection: A(t) = sum_i B_i / (t - lambda_i).
struct ConnectionNumeric {
    size_t rank = 1;
    std::vector<Complex> lambdas;
    std::vector<CMatrix> B;
    explicit ConnectionNumeric(const LogConnection& conn);
    CMatrix A(Complex t) const;
    Complex trace_A(Complex t) const;
    CMatrix B_infinity() const;
};

// Fundamental solution transport: solves Y' = -A(t) Y along the polyline,
// returns Y at the end. Deterministic adaptive Dormand-Prince 5(4).
CMatrix transport(const ConnectionNumeric& conn, const Polyline& path, const CMatrix& Y0,
                  const TransportOptions& opt = {});
CMatrix transport(const LogConnection& conn, const Polyline& path, const CMatrix& Y0,
                  const TransportOptions& opt = {});

// Monodromy around the standard loop of plan point i, in the frame at base.
CMatrix monodromy(const LogConnection& conn, size_t i, const PathPlan& plan,
                  const TransportOptions& opt = {});
// Monodromy around the positive loop at infinity.
CMatrix monodromy_infinity(const LogConnection& conn, const PathPlan& plan,
                           const TransportOptions& opt = {});

// de Rham basis of Ker(sum) as slot vectors: for x in 0..d-2, k in 0..r-1,
// the class e_k at slot x minus e_k at the last slot, rendered as the form
// omega = e_k (dt/(t-lambda_x) - dt/(t-lambda_last)).
struct DeRhamBasis {
    size_t d = 0, r = 0;
    // entry (x,k) listed in column-major order consistent with period_pairing
    size_t size() const { return (d - 1) * r; }
};
DeRhamBasis de_rham_basis(const LogConnection& conn);

// Betti side: transported frames F_x at each anchor (continuation of Id at base).
std::vector<CMatrix> betti_frames(const LogConnection& conn, const PathPlan& plan,
                                  const TransportOptions& opt = {});

// Period matrix of Theorem T: entry((x,j),(x',k)) = int over the chain
// lambda_x -> base -> lambda_last of W_j(t) (dt/(t-lambda_x') - dt/(t-lambda_last)) e_k,
// with W = F^{-1}, W(base) = Id (dual flat sections). det H_c is its determinant;
// base_frame (default Id) replaces W(base) for the frame-change bookkeeping test.
struct PeriodPairing {
    CMatrix H;
    Complex det_Hc{0.0, 0.0};
    int ode_steps = 0;
};
PeriodPairing period_pairing(const LogConnection& conn, const PathPlan& plan,
                             const TransportOptions& opt = {},
                             const CMatrix* base_frame = nullptr);

// Regularized symbol (P, x - lambda_i)_gamma = lim D(t) (t-lambda_i)^{-tr B_i},
// D = det F^{-1}, computed by Abel's identity as a scalar line integral:
//   exp( S_i - tr B_i log(base - lambda_i) ),
//   S_i = int_base^lambda_i [Tr A(t) - tr B_i/(t - lambda_i)] dt.
Complex regularized_symbol(const LogConnection& conn, const PathPlan& plan, size_t i,
                           double quad_tol = 1e-13);
// (P, 1/x)_{gamma_inf} = exp( S_inf + tr B_inf log(base) ),
//   S_inf = int_base^inf [Tr A(t) + tr B_inf/t] dt.
Complex regularized_symbol_infinity(const LogConnection& conn, const PathPlan& plan,
                                    double quad_tol = 1e-13);

// Same limit extracted from the transported fundamental matrix near the
// singular point (independent route, Richardson-extrapolated).
Complex regularized_symbol_by_transport(const LogConnection& conn, const PathPlan& plan, size_t i,
                                        const TransportOptions& opt = {});

struct PeriodReport {
    Complex det_Hc{0.0, 0.0};
    Complex gamma_side{0.0, 0.0};   // prod Gamma(res_x) * Gamma(1-res_inf)^{-1} * det(-res_inf)
    Complex symbol_side{0.0, 0.0};  // prod (P, x-lambda_i) * (P, 1/x)^{-1}
    double residual = 0.0;          // |det_Hc / (gamma_side*symbol_side) - 1|
    int ode_steps = 0;
    bool branch_convention_ok = true;
};

// The full two-sided check of Theorem T:
// det H_c = [prod_x Gamma(res_x)] Gamma(1 - res_inf)^{-1} det(-res_inf)
//           * [prod_x (P, x-lambda_x)] * (P, 1/x)^{-1}.
PeriodReport verify_theorem_T(const LogConnection& conn, const PathPlan& plan,
                              const TransportOptions& opt = {});
PeriodReport verify_theorem_T(const LogConnection& conn, double tol = 1e-10);

}  // namespace perdet
