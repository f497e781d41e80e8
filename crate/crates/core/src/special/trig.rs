//! Trigonometric integrals Si, Ci, si for complex argument, and the
//! closed-form half-line transforms built from them.
//!
//! Everything is derived from the entire function Ein via the exact
//! identities (valid for all finite z)
//!
//!   Si(z)  = (Ein(iz) − Ein(−iz)) / 2i,
//!   Ci(z)  = γ + log z − (Ein(iz) + Ein(−iz)) / 2,
//!
//! so the branch structure of Ci comes entirely from the explicit
//! principal logarithm.

use num_complex::Complex64;

use super::expint::{ein, EULER_GAMMA};
use crate::error::{OscqError, Result};

/// Exponentials of |Im z| beyond this overflow f64; Si/Ci themselves
/// grow like e^{|Im z|}/|z|.
const IM_OVERFLOW: f64 = 700.0;

/// Parameters of the Lorentzian model problem ∫₀^∞ sin(tx)/((x−a)²+b²) dx.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzianParams {
    pub a: f64,
    pub b: f64,
    pub t: f64,
}

impl LorentzianParams {
    /// Requires b > 0 and t > 0.
    pub fn new(a: f64, b: f64, t: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && t.is_finite()) {
            return Err(OscqError::Domain("Lorentzian parameters must be finite".into()));
        }
        if b <= 0.0 {
            return Err(OscqError::Domain(format!("require b > 0, got b = {b}")));
        }
        if t <= 0.0 {
            return Err(OscqError::Domain(format!("require t > 0, got t = {t}")));
        }
        Ok(Self { a, b, t })
    }
}

fn check_finite(z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(OscqError::Domain("argument must be finite".into()));
    }
    Ok(())
}

fn check_overflow(z: Complex64) -> Result<()> {
    if z.im.abs() > IM_OVERFLOW {
        return Err(OscqError::Overflow(format!(
            "|Im z| = {} exceeds {IM_OVERFLOW}; e^|Im z| leaves the f64 range",
            z.im.abs()
        )));
    }
    Ok(())
}

/// Sine integral Si(z) = ∫₀ᶻ sin(s)/s ds; entire, odd.
pub fn sine_integral(z: Complex64) -> Result<Complex64> {
    check_finite(z)?;
    check_overflow(z)?;
    let iz = Complex64::new(-z.im, z.re);
    let miz = Complex64::new(z.im, -z.re);
    let diff = ein(iz)? - ein(miz)?;
    // divide by 2i
    Ok(Complex64::new(diff.im / 2.0, -diff.re / 2.0))
}

/// Cosine integral Ci(z) = γ + log z + ∫₀ᶻ (cos s − 1)/s ds, principal
/// branch; cut along the closed negative real axis.
pub fn cosine_integral(z: Complex64) -> Result<Complex64> {
    check_finite(z)?;
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(OscqError::Domain(
            "Ci is undefined at 0 and on the negative real axis".into(),
        ));
    }
    check_overflow(z)?;
    let iz = Complex64::new(-z.im, z.re);
    let miz = Complex64::new(z.im, -z.re);
    let sum = ein(iz)? + ein(miz)?;
    Ok(EULER_GAMMA + z.ln() - 0.5 * sum)
}

/// Complementary sine integral si(z) = π/2 − Si(z).
pub fn si_complement(z: Complex64) -> Result<Complex64> {
    Ok(std::f64::consts::FRAC_PI_2 - sine_integral(z)?)
}

/// ∫₀^∞ cos(xy)/(a+x) dx = si(ay)·sin(ay) − Ci(ay)·cos(ay),
/// for |arg a| < π and y > 0.
pub fn halfline_cosine_reference(a: Complex64, y: f64) -> Result<Complex64> {
    if !(y > 0.0) {
        return Err(OscqError::Domain(format!("require y > 0, got y = {y}")));
    }
    let ay = a * y;
    let s = si_complement(ay)?;
    let c = cosine_integral(ay)?;
    Ok(s * ay.sin() - c * ay.cos())
}

/// ∫₀^∞ sin(xy)/(a+x) dx = Ci(ay)·sin(ay) + si(ay)·cos(ay),
/// for |arg a| < π and y > 0.
pub fn halfline_sine_reference(a: Complex64, y: f64) -> Result<Complex64> {
    if !(y > 0.0) {
        return Err(OscqError::Domain(format!("require y > 0, got y = {y}")));
    }
    let ay = a * y;
    let s = si_complement(ay)?;
    let c = cosine_integral(ay)?;
    Ok(c * ay.sin() + s * ay.cos())
}

/// Exact value of I = ∫₀^∞ sin(tx)/((x−a)²+b²) dx by partial fractions:
///
///   bI = −cos(at)·sinh(bt)·Re Ci(w) + sin(at)·cosh(bt)·Im Ci(w)
///        − sin(at)·sinh(bt)·Re si(w) − cos(at)·cosh(bt)·Im si(w),
///
/// with w = (−a+ib)t. The argument w stays off the Ci cut for every
/// valid parameter set (b > 0, t > 0 force Im w > 0).
pub fn lorentzian_sine_reference(p: &LorentzianParams) -> Result<f64> {
    let w = Complex64::new(-p.a, p.b) * p.t;
    let ci = cosine_integral(w)?;
    let si = si_complement(w)?;
    let (at, bt) = (p.a * p.t, p.b * p.t);
    let v = -at.cos() * bt.sinh() * ci.re + at.sin() * bt.cosh() * ci.im
        - at.sin() * bt.sinh() * si.re
        - at.cos() * bt.cosh() * si.im;
    Ok(v / p.b)
}
