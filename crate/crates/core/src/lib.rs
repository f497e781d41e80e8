//! Quadrature for half-line Fourier sine and cosine transforms by a
//! single-exponential change of variable, with a complete
//! discretisation-error analysis (residue and saddle-point terms) for
//! the Lorentzian model problem.
//!
//! The sine transform ∫₀^∞ f(x) sin(tx) dx is rewritten with
//! x = (m/t)·φ(u), φ(u) = log(eᵘ+1), and approximated by the truncated
//! trapezoidal rule with stepsize π/m; cosine transforms use the midpoint
//! rule. The error engine locates the integrand poles and the phase
//! saddle point in the upper half plane and reproduces the decomposition
//! I − T_m = R_m + S_m.
//!
//! Modules:
//! * [`special`] — complex Si/Ci/si, exponential integral, closed-form
//!   references for the model transforms.
//! * [`maps`] — the single-exponential map and the two Ooura–Mori
//!   double-exponential maps, with derivatives and (for the SE map)
//!   complex continuation and inverse.
//! * [`quadrature`] — transformed integrands, truncated trapezoidal and
//!   midpoint sums, parameter matching m = √(nπ/α).
//! * [`error_analysis`] — pole location, residue terms, saddle search,
//!   and the full error decomposition.
//!
//! ```
//! use oscq_core::{sine_transform, IntegrandSpec, QuadratureParams, TransformMap};
//!
//! let spec = IntegrandSpec::lorentzian(0.0, 1.0).unwrap();
//! let params = QuadratureParams::with_default_n(8.0, 1.0).unwrap();
//! let value = sine_transform(&spec, &TransformMap::single_exp(), &params).unwrap();
//! let exact = spec.reference_sine(1.0).unwrap();
//! assert!((value - exact).abs() < 1e-10);
//! ```

pub mod error;
pub mod error_analysis;
pub mod kahan;
pub mod maps;
pub mod quadrature;
pub mod special;

pub use num_complex::Complex64;

pub use error::{OscqError, Result};
pub use error_analysis::{
    decompose_error, find_saddle, locate_pole, pole_asymptotic, residue_from_pole,
    residue_term_asymptotic, residue_term_exact, saddle_phase, saddle_phase_gradient,
    saddle_phase_hessian, saddle_term, DiscretisationRule, ErrorDecomposition,
};
pub use kahan::KahanSum;
pub use maps::{
    se_derivative, se_derivative_complex, se_evaluate, se_evaluate_complex, se_inverse,
    se_inverse_complex, DecayClass, TransformMap,
};
pub use quadrature::{
    choose_m, cosine_transform, default_n, sine_transform, transformed_integrand, truncation_bound,
    IntegrandSpec, QuadratureParams,
};
pub use special::{
    cosine_integral, exp_integral_e1, halfline_cosine_reference, halfline_sine_reference,
    lorentzian_sine_reference, si_complement, sine_integral, LorentzianParams, EULER_GAMMA,
};
