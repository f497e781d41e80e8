//! Special functions: complex exponential integral, trigonometric
//! integrals Si/Ci/si, and the closed-form half-line references.

mod expint;
mod trig;

pub use expint::{exp_integral_e1, EULER_GAMMA};
pub use trig::{
    cosine_integral, halfline_cosine_reference, halfline_sine_reference,
    lorentzian_sine_reference, si_complement, sine_integral, LorentzianParams,
};
