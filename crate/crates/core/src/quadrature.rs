//! Truncated trapezoidal and midpoint rules for half-line Fourier
//! transforms after the change of variable x = (m/t)·φ(u).
//!
//! The sine transform uses the trapezoidal rule with stepsize h = π/m,
//! the cosine transform the midpoint rule with the same stepsize. At the
//! nodes u = kπ/m the oscillation factor collapses to
//! sin(mφ(u)) = (−1)ᵏ·sin(m·(φ(u)−u)), which is what makes the truncated
//! sums converge: the offset φ(u)−u decays like e⁻ᵘ (single-exponential
//! map) or double-exponentially (Ooura–Mori maps). Node evaluation uses
//! that form on the positive side; naive evaluation of sin(mφ(u)) there
//! loses the cancellation structure to argument rounding.

use std::f64::consts::PI;

use crate::error::{OscqError, Result};
use crate::kahan::KahanSum;
use crate::maps::TransformMap;
use crate::special::{lorentzian_sine_reference, LorentzianParams};

/// Integrand f from the built-in catalog.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntegrandSpec {
    /// f(x) = 1/((x−a)² + b²)
    Lorentzian { a: f64, b: f64 },
    /// f(x) = 1/x (so f(x)·sin(tx) is the sinc integrand)
    Sinc,
    /// f(x) = e^{−λx}
    ExpDecay { lambda: f64 },
}

impl IntegrandSpec {
    pub fn lorentzian(a: f64, b: f64) -> Result<Self> {
        LorentzianParams::new(a, b, 1.0)?;
        Ok(IntegrandSpec::Lorentzian { a, b })
    }

    pub fn sinc() -> Self {
        IntegrandSpec::Sinc
    }

    pub fn exp_decay(lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(OscqError::Domain(format!("require lambda > 0, got {lambda}")));
        }
        Ok(IntegrandSpec::ExpDecay { lambda })
    }

    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            IntegrandSpec::Lorentzian { a, b } => 1.0 / ((x - a) * (x - a) + b * b),
            IntegrandSpec::Sinc => 1.0 / x,
            IntegrandSpec::ExpDecay { lambda } => (-lambda * x).exp(),
        }
    }

    /// sup of |f| on (0,∞), when finite.
    pub fn bound_cf(&self) -> Option<f64> {
        match *self {
            IntegrandSpec::Lorentzian { a, b } => {
                if a >= 0.0 {
                    Some(1.0 / (b * b))
                } else {
                    Some(1.0 / (a * a + b * b))
                }
            }
            IntegrandSpec::Sinc => None,
            IntegrandSpec::ExpDecay { .. } => Some(1.0),
        }
    }

    /// Closed-form value of ∫₀^∞ f(x) sin(tx) dx.
    pub fn reference_sine(&self, t: f64) -> Result<f64> {
        match *self {
            IntegrandSpec::Lorentzian { a, b } => {
                lorentzian_sine_reference(&LorentzianParams::new(a, b, t)?)
            }
            IntegrandSpec::Sinc => Ok(PI / 2.0),
            IntegrandSpec::ExpDecay { lambda } => Ok(t / (lambda * lambda + t * t)),
        }
    }

    /// Closed-form value of ∫₀^∞ f(x) cos(tx) dx, where one exists.
    pub fn reference_cosine(&self, t: f64) -> Result<f64> {
        match *self {
            IntegrandSpec::ExpDecay { lambda } => Ok(lambda / (lambda * lambda + t * t)),
            _ => Err(OscqError::Unsupported(
                "no closed-form cosine reference for this integrand".into(),
            )),
        }
    }
}

/// Rule parameters: stepsize h = π/m (always derived, never stored),
/// truncation index n, transform frequency t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureParams {
    pub m: f64,
    pub n: usize,
    pub t: f64,
}

impl QuadratureParams {
    /// Caps the node count; sums anywhere near it are a caller mistake.
    const MAX_N: usize = 100_000_000;

    pub fn new(m: f64, n: usize, t: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(OscqError::Domain(format!("require m > 0, got {m}")));
        }
        if n == 0 {
            return Err(OscqError::Domain("require n >= 1".into()));
        }
        if n > Self::MAX_N {
            return Err(OscqError::Domain(format!(
                "n = {n} exceeds the supported maximum {}",
                Self::MAX_N
            )));
        }
        if !(t > 0.0) || !t.is_finite() {
            return Err(OscqError::Domain(format!("require t > 0, got {t}")));
        }
        Ok(Self { m, n, t })
    }

    /// n = ⌈4m²⌉, the customary choice that pushes truncation error to
    /// machine precision.
    pub fn with_default_n(m: f64, t: f64) -> Result<Self> {
        Self::new(m, default_n(m), t)
    }

    pub fn h(&self) -> f64 {
        PI / self.m
    }
}

/// Default truncation index n = ⌈4m²⌉. Requires m > 0.
pub fn default_n(m: f64) -> usize {
    (4.0 * m * m).ceil() as usize
}

/// m = √(nπ/α), matching the discretisation rate e^{−αm} against the
/// truncation rate e^{−nπ/m}.
pub fn choose_m(n: usize, alpha: f64) -> Result<f64> {
    if n == 0 {
        return Err(OscqError::Domain("require n >= 1".into()));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(OscqError::Domain(format!("require alpha > 0, got {alpha}")));
    }
    Ok((n as f64 * PI / alpha).sqrt())
}

/// Bound on the truncation error |T_m − T_{n,m}| ≤ 2·m·C_f·e^{−nπ/m}.
pub fn truncation_bound(spec: &IntegrandSpec, m: f64, n: usize) -> Result<f64> {
    let cf = spec.bound_cf().ok_or_else(|| {
        OscqError::Unsupported("truncation bound needs a finite sup |f|".into())
    })?;
    Ok(2.0 * m * cf * (-(n as f64) * PI / m).exp())
}

/// The transformed integrand F_m(u) = f((m/t)φ(u))·sin(mφ(u))·(m/t)·φ′(u).
pub fn transformed_integrand(
    spec: &IntegrandSpec,
    map: &TransformMap,
    m: f64,
    t: f64,
    u: f64,
) -> f64 {
    let phi = map.evaluate(u);
    let dphi = map.derivative(u);
    let s = if u > 0.0 {
        // sin(mu + m·offset); keeps the e^{-u} offset structure explicit
        let off = map.phase_offset(u);
        let (smu, cmu) = (m * u).sin_cos();
        let (soff, coff) = (m * off).sin_cos();
        smu * coff + cmu * soff
    } else {
        (m * phi).sin()
    };
    sinc_safe_product(spec, m, t, phi, dphi, s)
}

/// f((m/t)φ)·s·(m/t)·φ′ with the 1/x integrand handled as a ratio so the
/// left tail (φ → 0) stays finite.
fn sinc_safe_product(spec: &IntegrandSpec, m: f64, t: f64, phi: f64, dphi: f64, s: f64) -> f64 {
    match spec {
        IntegrandSpec::Sinc => {
            if phi == 0.0 {
                return 0.0;
            }
            s * dphi / phi
        }
        _ => {
            let x = (m / t) * phi;
            spec.eval(x) * s * (m / t) * dphi
        }
    }
}

fn parity_sign(k: i64) -> f64 {
    if k & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// F_m at the trapezoidal node u = kπ/m, using
/// sin(mφ) = (−1)ᵏ sin(m·(φ(u)−u)) on the non-negative side.
fn sine_node(spec: &IntegrandSpec, map: &TransformMap, m: f64, t: f64, k: i64) -> f64 {
    let u = k as f64 * PI / m;
    let phi = map.evaluate(u);
    let dphi = map.derivative(u);
    let s = if k >= 0 {
        parity_sign(k) * (m * map.phase_offset(u)).sin()
    } else {
        (m * phi).sin()
    };
    sinc_safe_product(spec, m, t, phi, dphi, s)
}

/// Cosine-transform integrand at the midpoint node u = (k+½)π/m, using
/// cos(mφ) = −(−1)ᵏ sin(m·(φ(u)−u)) on the positive side.
fn cosine_node(spec: &IntegrandSpec, map: &TransformMap, m: f64, t: f64, k: i64) -> f64 {
    let u = (k as f64 + 0.5) * PI / m;
    let phi = map.evaluate(u);
    let dphi = map.derivative(u);
    let c = if k >= 0 {
        -parity_sign(k) * (m * map.phase_offset(u)).sin()
    } else {
        (m * phi).cos()
    };
    sinc_safe_product(spec, m, t, phi, dphi, c)
}

/// Truncated trapezoidal approximation to ∫₀^∞ f(x) sin(tx) dx:
/// T_{n,m} = (π/m) Σ_{k=−n..n} F_m(kπ/m), summed outermost-nodes-first
/// with Kahan compensation.
pub fn sine_transform(
    spec: &IntegrandSpec,
    map: &TransformMap,
    params: &QuadratureParams,
) -> Result<f64> {
    let (m, t, n) = (params.m, params.t, params.n as i64);
    let mut acc = KahanSum::new();
    for dist in (1..=n).rev() {
        acc += sine_node(spec, map, m, t, -dist);
        acc += sine_node(spec, map, m, t, dist);
    }
    acc += sine_node(spec, map, m, t, 0);
    Ok(params.h() * acc.value())
}

/// Truncated midpoint approximation to ∫₀^∞ f(x) cos(tx) dx:
/// M_{n,m} = (π/m) Σ_{k=−n..n−1} F((k+½)π/m).
///
/// Requires f bounded at the origin (the 1/x integrand has a divergent
/// cosine transform).
pub fn cosine_transform(
    spec: &IntegrandSpec,
    map: &TransformMap,
    params: &QuadratureParams,
) -> Result<f64> {
    if matches!(spec, IntegrandSpec::Sinc) {
        return Err(OscqError::Unsupported(
            "cosine transform of 1/x diverges at the origin".into(),
        ));
    }
    let (m, t, n) = (params.m, params.t, params.n as i64);
    let mut acc = KahanSum::new();
    for j in (0..n).rev() {
        acc += cosine_node(spec, map, m, t, -1 - j);
        acc += cosine_node(spec, map, m, t, j);
    }
    Ok(params.h() * acc.value())
}
