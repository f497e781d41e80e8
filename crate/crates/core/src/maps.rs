//! Change-of-variable maps φ : (−∞,∞) → (0,∞) used to rewrite half-line
//! Fourier integrals as integrals over the whole real line.
//!
//! All maps satisfy φ(u) → 0 as u → −∞ and φ(u) ~ u as u → +∞. The
//! single-exponential map φ(u) = log(eᵘ+1) additionally has a closed-form
//! inverse and a complex continuation, which the error analysis relies on.
//!
//! Numerics: every formula is arranged around `exp_m1`/`ln_1p` so that no
//! intermediate overflows and removable singularities at u = 0 need no
//! special series. The transformed integrand decays at nodes through the
//! factor sin(mφ(kπ/m)) = (−1)ᵏ sin(m·(φ(u)−u)), so each map also exposes
//! the offset φ(u) − u computed without cancellation.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{OscqError, Result};

/// How fast the transformed integrand decays at the quadrature nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecayClass {
    SingleExponential,
    DoubleExponential,
}

/// A change-of-variable map with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransformMap {
    /// φ(u) = log(eᵘ + 1)
    SingleExp,
    /// φ₁(u) = u / (1 − exp(−K sinh u)), φ₁(0) = 1/K
    OouraMori1 { k: f64 },
    /// φ₂(u) = u / (1 − exp(−2u − α(1−e⁻ᵘ) − β(eᵘ−1))), β = 1/4
    OouraMori2 { alpha: f64, beta: f64 },
}

impl TransformMap {
    pub fn single_exp() -> Self {
        TransformMap::SingleExp
    }

    /// First Ooura–Mori map with the customary K = 2π.
    pub fn ooura_mori_1() -> Self {
        TransformMap::OouraMori1 { k: 2.0 * PI }
    }

    pub fn ooura_mori_1_with_k(k: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(OscqError::Domain(format!("require K > 0, got {k}")));
        }
        Ok(TransformMap::OouraMori1 { k })
    }

    /// Second Ooura–Mori map; α is derived from the scale parameter M as
    /// α = β/√(1 + M·log(1+M)/(2π)) with β = 1/4.
    pub fn ooura_mori_2(m_param: f64) -> Result<Self> {
        if !(m_param > 0.0) || !m_param.is_finite() {
            return Err(OscqError::Domain(format!("require M > 0, got {m_param}")));
        }
        let beta = 0.25;
        let alpha = beta / (1.0 + m_param * m_param.ln_1p() / (2.0 * PI)).sqrt();
        Ok(TransformMap::OouraMori2 { alpha, beta })
    }

    pub fn decay_class(&self) -> DecayClass {
        match self {
            TransformMap::SingleExp => DecayClass::SingleExponential,
            _ => DecayClass::DoubleExponential,
        }
    }

    /// φ(u)
    pub fn evaluate(&self, u: f64) -> f64 {
        match *self {
            TransformMap::SingleExp => se_evaluate(u),
            TransformMap::OouraMori1 { k } => {
                if u == 0.0 {
                    return 1.0 / k;
                }
                ratio_map(u, k * u.sinh())
            }
            TransformMap::OouraMori2 { alpha, beta } => {
                if u == 0.0 {
                    return 1.0 / (2.0 + alpha + beta);
                }
                ratio_map(u, om2_exponent(u, alpha, beta))
            }
        }
    }

    /// φ′(u)
    pub fn derivative(&self, u: f64) -> f64 {
        match *self {
            TransformMap::SingleExp => se_derivative(u),
            TransformMap::OouraMori1 { k } => {
                if u == 0.0 {
                    return 0.5;
                }
                ratio_map_derivative(u, k * u.sinh(), k * u.cosh())
            }
            TransformMap::OouraMori2 { alpha, beta } => {
                if u == 0.0 {
                    let p = 2.0 + alpha + beta;
                    return 0.5 - (beta - alpha) / (2.0 * p * p);
                }
                let e = om2_exponent(u, alpha, beta);
                let ep = 2.0 + alpha * (-u).exp() + beta * u.exp();
                ratio_map_derivative(u, e, ep)
            }
        }
    }

    /// φ(u) − u, computed without cancellation. At positive nodes the
    /// entire oscillation factor reduces to sin(kπ + m·offset).
    pub fn phase_offset(&self, u: f64) -> f64 {
        match *self {
            TransformMap::SingleExp => {
                if u >= 0.0 {
                    (-u).exp().ln_1p()
                } else {
                    se_evaluate(u) - u
                }
            }
            TransformMap::OouraMori1 { k } => {
                if u > 0.0 {
                    ratio_map_offset(u, k * u.sinh())
                } else {
                    self.evaluate(u) - u
                }
            }
            TransformMap::OouraMori2 { alpha, beta } => {
                if u > 0.0 {
                    ratio_map_offset(u, om2_exponent(u, alpha, beta))
                } else {
                    self.evaluate(u) - u
                }
            }
        }
    }

    /// φ⁻¹(x). Only the single-exponential map has a closed form; the
    /// double-exponential maps report it as unavailable.
    pub fn inverse(&self, x: f64) -> Result<f64> {
        match self {
            TransformMap::SingleExp => se_inverse(x),
            _ => Err(OscqError::Unsupported(
                "no closed-form inverse for double-exponential maps".into(),
            )),
        }
    }
}

/// u / (1 − e⁻ˢ) without overflow for either sign of s.
fn ratio_map(u: f64, s: f64) -> f64 {
    if s > 0.0 {
        u / (-(-s).exp_m1())
    } else {
        // 1/(1-e^{-s}) = e^s/(e^s - 1)
        u * s.exp() / s.exp_m1()
    }
}

/// d/du [u / (1 − e⁻ˢ⁽ᵘ⁾)] = 1/D − u·s′·e⁻ˢ/D², D = 1 − e⁻ˢ.
fn ratio_map_derivative(u: f64, s: f64, sp: f64) -> f64 {
    if s > 0.0 {
        let d = -(-s).exp_m1();
        let es = (-s).exp();
        if es == 0.0 {
            return 1.0 / d;
        }
        1.0 / d - u * sp * es / (d * d)
    } else {
        let es = s.exp();
        if es == 0.0 {
            return 0.0;
        }
        let em = s.exp_m1(); // negative
        es / em - u * sp * es / (em * em)
    }
}

/// (φ(u) − u) for s > 0: u·e⁻ˢ/(1 − e⁻ˢ).
fn ratio_map_offset(u: f64, s: f64) -> f64 {
    let es = (-s).exp();
    if es == 0.0 {
        return 0.0;
    }
    u * es / (-(-s).exp_m1())
}

fn om2_exponent(u: f64, alpha: f64, beta: f64) -> f64 {
    2.0 * u + alpha * (-(-u).exp_m1()) + beta * u.exp_m1()
}

/// φ(u) = log(eᵘ + 1), overflow-free.
pub fn se_evaluate(u: f64) -> f64 {
    if u > 0.0 {
        u + (-u).exp().ln_1p()
    } else {
        u.exp().ln_1p()
    }
}

/// φ′(u) = eᵘ/(eᵘ+1), the logistic function.
pub fn se_derivative(u: f64) -> f64 {
    1.0 / (1.0 + (-u).exp())
}

/// φ⁻¹(x) = log(eˣ − 1) for x > 0.
pub fn se_inverse(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(OscqError::Domain(format!(
            "se_inverse requires x > 0, got {x}"
        )));
    }
    if x > 700.0 {
        // e^{-x} underflows; log(e^x - 1) = x + log(1 - e^{-x})
        Ok(x + (-(-x).exp()).ln_1p())
    } else {
        Ok(x.exp_m1().ln())
    }
}

const BRANCH_POINT_RADIUS: f64 = 1e-12;

fn check_branch_point(w: Complex64) -> Result<()> {
    // branch points of log(e^w + 1) at w = (2k+1)iπ
    let k = ((w.im / PI - 1.0) / 2.0).round();
    let im0 = (2.0 * k + 1.0) * PI;
    if (w - Complex64::new(0.0, im0)).norm() < BRANCH_POINT_RADIUS {
        return Err(OscqError::Domain(format!(
            "point {w} lies within {BRANCH_POINT_RADIUS} of the branch point {im0}i"
        )));
    }
    Ok(())
}

/// Complex continuation of φ(w) = log(eʷ + 1).
///
/// For Re w > 0 the form w + log(1 + e⁻ʷ) continues φ analytically from
/// the real axis through the lines Im w = ±π (the principal-log form has
/// spurious cuts on {Re w ≥ 0, Im w = ±π}, and the saddle point of the
/// discretisation-error phase sits within ~e^{−2πm} of Im w = π).
pub fn se_evaluate_complex(w: Complex64) -> Result<Complex64> {
    check_branch_point(w)?;
    if w.re > 0.0 {
        Ok(w + ln_1p_complex((-w).exp()))
    } else {
        Ok(ln_1p_complex(w.exp()))
    }
}

/// φ′(w) = 1/(1 + e⁻ʷ), meromorphic with poles at the branch points of φ.
pub fn se_derivative_complex(w: Complex64) -> Result<Complex64> {
    check_branch_point(w)?;
    if w.re >= 0.0 {
        Ok((1.0 + (-w).exp()).inv())
    } else {
        let ew = w.exp();
        Ok(ew / (1.0 + ew))
    }
}

/// φ″(w) = φ′(w)(1 − φ′(w)).
pub fn se_second_derivative_complex(w: Complex64) -> Result<Complex64> {
    let d = se_derivative_complex(w)?;
    Ok(d * (1.0 - d))
}

/// φ⁻¹(z) = log(eᶻ − 1) with the principal logarithm.
pub fn se_inverse_complex(z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(OscqError::Domain("se_inverse_complex undefined at z = 0".into()));
    }
    let em1 = if z.norm() < 0.5 {
        exp_m1_complex(z)
    } else if z.re > 350.0 {
        return Ok(z + ln_1p_complex(-(-z).exp()));
    } else {
        z.exp() - 1.0
    };
    if em1 == Complex64::new(0.0, 0.0) {
        return Err(OscqError::Domain(format!(
            "se_inverse_complex hits the logarithmic singularity at z = {z}"
        )));
    }
    Ok(em1.ln())
}

/// log(1 + z) accurate for small |z|.
fn ln_1p_complex(z: Complex64) -> Complex64 {
    if z.norm() < 0.25 {
        // z - z^2/2 + z^3/3 - ...
        let mut sum = Complex64::new(0.0, 0.0);
        let mut pow = z;
        for k in 1..40 {
            let add = if k % 2 == 1 { pow / k as f64 } else { -pow / k as f64 };
            sum += add;
            if add.norm() <= 1e-18 * sum.norm() {
                break;
            }
            pow *= z;
        }
        sum
    } else {
        (1.0 + z).ln()
    }
}

/// eᶻ − 1 accurate for small |z|.
fn exp_m1_complex(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        for k in 1..40 {
            term *= z / k as f64;
            sum += term;
            if term.norm() <= 1e-18 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        z.exp() - 1.0
    }
}
