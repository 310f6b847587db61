//! Vanishing orders at the intersection of two lines carrying nodal, singular
//! or impedance conditions.
//!
//! Geometry: `Γ⁻` is the positive `x₁`-axis and `Γ⁺` the ray at angle
//! `θ₀ = απ`, `α ∈ (0, 1)`. Normals point out of the sector between them, so
//! `ν = (0, -1)` on `Γ⁻` and `ν = (cos(θ₀ + π/2), sin(θ₀ + π/2))` on `Γ⁺`.
//! Impedance lines satisfy `∂_ν u + C u = 0` with `C₁` on `Γ⁻` and `C₂` on `Γ⁺`.
//!
//! With `A_k = a_k e^{ikφ}` and `B_k = b_k e^{-ikφ}` on a ray at angle `φ`
//! with normal sign `s`, matching the coefficients of `J_{n-1}(√λ r)` gives
//! the exact level-`n` relations used by [`run_recursion`]:
//!
//! * nodal: `a_n e^{inφ} + b_n e^{-inφ} = 0` for `n ≥ 0`;
//! * impedance (singular when `C = 0`), `n ≥ 1`:
//!   `s (i√λ/2) [(A_n − B_n) + [n ≥ 3](A_{n−2} − B_{n−2})] + C (A_{n−1} + B_{n−1}) = 0`.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

use crate::expansion::{Expansion, ExpansionError, VanishingOrder};
use crate::lines::{classify_angle, AngleClass, LineCondition, LinesError, EPS_RAT, Q_MAX};
use crate::specfun::N_ORDER_MAX;

const I: C64 = C64 { re: 0.0, im: 1.0 };
const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

/// Relative determinant threshold below which a level is treated as singular.
pub const SINGULAR_THRESHOLD: f64 = 1e-10;

/// Errors raised by the vanishing-order machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VanishingError {
    #[error("angle ratio must lie in (0, 1) after reduction, got {0}")]
    BadAngle(f64),
    #[error("eigenvalue must be positive, got {0}")]
    BadEigenvalue(f64),
    #[error("a nodal line through the corner forces u(0) = 0, got {0}")]
    NodalNeedsZero(C64),
    #[error("recursion depth {0} exceeds the order cap {N_ORDER_MAX}")]
    DepthTooLarge(usize),
    #[error(transparent)]
    Lines(#[from] LinesError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error("malformed corner configuration: {0}")]
    Json(String),
}

/// Two line conditions meeting at the origin at angle `απ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerConfig {
    pub cond_minus: LineCondition,
    pub cond_plus: LineCondition,
    pub alpha: f64,
    pub angle_class: AngleClass,
    pub lambda: f64,
    pub u_at_origin: C64,
}

impl CornerConfig {
    /// Builds a configuration from a real angle ratio in `(0, 2)`, classified
    /// with the default rationality settings. Ratios in `(1, 2)` are reduced
    /// to `(0, 1)` by continuing `Γ⁺` through the corner.
    pub fn new(
        cond_minus: LineCondition,
        cond_plus: LineCondition,
        alpha: f64,
        lambda: f64,
        u_at_origin: C64,
    ) -> Result<Self, VanishingError> {
        let class = classify_angle(alpha, Q_MAX, EPS_RAT)?;
        Self::with_class(cond_minus, cond_plus, alpha, class, lambda, u_at_origin)
    }

    /// Builds a configuration with an exactly known rational angle `p/q`.
    pub fn rational(
        cond_minus: LineCondition,
        cond_plus: LineCondition,
        p: u64,
        q: u64,
        lambda: f64,
        u_at_origin: C64,
    ) -> Result<Self, VanishingError> {
        let class = AngleClass::from_ratio(p, q);
        Self::with_class(cond_minus, cond_plus, p as f64 / q as f64, class, lambda, u_at_origin)
    }

    fn with_class(
        cond_minus: LineCondition,
        cond_plus: LineCondition,
        mut alpha: f64,
        mut class: AngleClass,
        lambda: f64,
        u_at_origin: C64,
    ) -> Result<Self, VanishingError> {
        if alpha > 1.0 && alpha < 2.0 {
            alpha -= 1.0;
            if let AngleClass::Rational { p, q } = class {
                class = AngleClass::from_ratio(p - q, q);
            }
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(VanishingError::BadAngle(alpha));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(VanishingError::BadEigenvalue(lambda));
        }
        let nodal = matches!(cond_minus, LineCondition::Nodal) || matches!(cond_plus, LineCondition::Nodal);
        if nodal && u_at_origin != ZERO {
            return Err(VanishingError::NodalNeedsZero(u_at_origin));
        }
        Ok(Self { cond_minus, cond_plus, alpha, angle_class: class, lambda, u_at_origin })
    }

    /// Corner angle `θ₀ = απ`.
    pub fn theta0(&self) -> f64 {
        self.alpha * PI
    }

    fn pair(&self) -> PairKind {
        use LineCondition::*;
        match (self.cond_minus, self.cond_plus) {
            (Nodal, Nodal) => PairKind::NodalNodal,
            (Nodal, _) | (_, Nodal) => PairKind::Mixed,
            (Singular, Singular) => PairKind::SingularSingular,
            _ => PairKind::Generalized,
        }
    }

    /// Parses `{"cond_minus":{..}, "cond_plus":{..}, "alpha": x | {"p":..,"q":..}, "lambda":.., "u0":[re,im]}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, VanishingError> {
        let j: CornerJson = serde_json::from_value(v.clone()).map_err(|e| VanishingError::Json(e.to_string()))?;
        let u0 = j.u0.map_or(ZERO, |[re, im]| C64::new(re, im));
        match j.alpha {
            AlphaJson::Real(a) => Self::new(j.cond_minus, j.cond_plus, a, j.lambda, u0),
            AlphaJson::Exact { p, q } => Self::rational(j.cond_minus, j.cond_plus, p, q, j.lambda, u0),
        }
    }

    /// JSON form accepted by [`CornerConfig::from_json`].
    pub fn to_json(&self) -> serde_json::Value {
        let alpha = match self.angle_class {
            AngleClass::Rational { p, q } => serde_json::json!({"p": p, "q": q}),
            AngleClass::Irrational => serde_json::json!(self.alpha),
        };
        serde_json::json!({
            "cond_minus": self.cond_minus,
            "cond_plus": self.cond_plus,
            "alpha": alpha,
            "lambda": self.lambda,
            "u0": [self.u_at_origin.re, self.u_at_origin.im],
        })
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AlphaJson {
    Real(f64),
    Exact { p: u64, q: u64 },
}

#[derive(Deserialize)]
struct CornerJson {
    cond_minus: LineCondition,
    cond_plus: LineCondition,
    alpha: AlphaJson,
    lambda: f64,
    #[serde(default)]
    u0: Option<[f64; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairKind {
    NodalNodal,
    SingularSingular,
    /// Two non-nodal lines, at least one with `η ≠ 0`.
    Generalized,
    /// One nodal line and one singular or impedance line.
    Mixed,
}

/// The result that determines a predicted order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rationale {
    /// `u(0) ≠ 0`, so the order is zero.
    NonzeroAtCorner,
    /// Two nodal or two singular lines at an irrational angle with `u(0) = 0`.
    IrrationalSameType,
    /// Two generalized singular lines at an irrational angle with `u(0) = 0`.
    IrrationalGeneralized,
    /// A nodal line meeting a (generalized) singular line at an irrational angle.
    IrrationalMixed,
    /// Symmetric pair at a rational angle of degree `q`: order `q`.
    RationalDegree,
    /// Nodal line against a (generalized) singular line with `α = (2m+1)/(2n)`: order `n`.
    RationalMixedHalfOdd,
    /// Nodal line against a (generalized) singular line, no `α = (2m+1)/(2n)` representation.
    RationalMixedNoResonance,
    /// Right angle: only a lower bound is available.
    RightAngleLowerBound,
    /// The pair needs `u(0) = 0` but `u(0) ≠ 0`, and no result covers the case.
    NoApplicableRule,
}

impl Rationale {
    /// Human-readable description.
    pub fn describe(&self) -> &'static str {
        match self {
            Rationale::NonzeroAtCorner => "u(0) != 0: order zero, local form u(0) J0(sqrt(lambda) r) for two singular lines",
            Rationale::IrrationalSameType => "two nodal or two singular lines at an irrational angle: infinite order",
            Rationale::IrrationalGeneralized => "generalized singular lines at an irrational angle with u(0) = 0: infinite order",
            Rationale::IrrationalMixed => "nodal line against a (generalized) singular line at an irrational angle: infinite order",
            Rationale::RationalDegree => "rational angle p/q, symmetric pair: order equals the degree q",
            Rationale::RationalMixedHalfOdd => "nodal against (generalized) singular line, alpha = (2m+1)/(2n): order n",
            Rationale::RationalMixedNoResonance => "nodal against (generalized) singular line, odd degree: infinite order",
            Rationale::RightAngleLowerBound => "right angle: vanishing order bounded below only",
            Rationale::NoApplicableRule => "no applicable rule",
        }
    }
}

/// Predicted vanishing order with the result that determines it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub order: VanishingOrder,
    pub rationale: Rationale,
}

/// Predicts the vanishing order at the corner.
pub fn predict(config: &CornerConfig) -> Verdict {
    let pair = config.pair();
    let u0_zero = config.u_at_origin == ZERO;
    let v = |order, rationale| Verdict { order, rationale };
    match config.angle_class {
        AngleClass::Irrational => match pair {
            PairKind::NodalNodal => v(VanishingOrder::Infinite, Rationale::IrrationalSameType),
            PairKind::Mixed => v(VanishingOrder::Infinite, Rationale::IrrationalMixed),
            PairKind::SingularSingular if u0_zero => v(VanishingOrder::Infinite, Rationale::IrrationalSameType),
            PairKind::Generalized if u0_zero => v(VanishingOrder::Infinite, Rationale::IrrationalGeneralized),
            _ => v(VanishingOrder::Finite(0), Rationale::NonzeroAtCorner),
        },
        AngleClass::Rational { p, q } => {
            let right = p == 1 && q == 2;
            match pair {
                PairKind::NodalNodal => v(VanishingOrder::Finite(q as usize), Rationale::RationalDegree),
                PairKind::Mixed if right => v(VanishingOrder::AtLeast(1), Rationale::RightAngleLowerBound),
                PairKind::Mixed => match mixed_resonance(q) {
                    Some(n) => v(VanishingOrder::Finite(n as usize), Rationale::RationalMixedHalfOdd),
                    None => v(VanishingOrder::Infinite, Rationale::RationalMixedNoResonance),
                },
                PairKind::SingularSingular if !u0_zero => v(VanishingOrder::Finite(0), Rationale::NonzeroAtCorner),
                PairKind::Generalized if !u0_zero => v(VanishingOrder::AtLeast(0), Rationale::NoApplicableRule),
                _ if right => v(VanishingOrder::AtLeast(2), Rationale::RightAngleLowerBound),
                _ => v(VanishingOrder::Finite(q as usize), Rationale::RationalDegree),
            }
        }
    }
}

/// Smallest `n` with `α = (2m+1)/(2n)` for some integer `m ≥ 0`, given `α = p/q` in lowest terms.
pub fn mixed_resonance(q: u64) -> Option<u64> {
    q.is_multiple_of(2).then_some(q / 2)
}

/// What happened at one level of the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecursionEvent {
    /// The level's 2×2 system is singular and consistent; one coefficient is free.
    Free { level: usize, value: [f64; 2] },
    /// The level's system is singular and its right-hand side is not in the range:
    /// the lower coefficients (in particular `u(0)`) are forced to vanish.
    Inconsistent { level: usize, residual: f64 },
}

/// Output of [`run_recursion`].
#[derive(Debug, Clone, PartialEq)]
pub struct RecursionReport {
    /// Smallest level whose system is singular.
    pub first_singular: Option<usize>,
    /// `(a_n, b_n)` for `n = 0..=n_max`, `b_0 = 0`.
    pub coeffs: Vec<(C64, C64)>,
    pub events: Vec<RecursionEvent>,
    /// Highest level up to which every system was consistent.
    pub valid_through: usize,
}

impl RecursionReport {
    /// Whether any level was inconsistent.
    pub fn forced_zero(&self) -> bool {
        self.events.iter().any(|e| matches!(e, RecursionEvent::Inconsistent { .. }))
    }

    /// First inconsistent level, if any.
    pub fn first_inconsistent(&self) -> Option<usize> {
        self.events.iter().find_map(|e| match *e {
            RecursionEvent::Inconsistent { level, .. } => Some(level),
            _ => None,
        })
    }

    /// Vanishing order of the consistent part of the table, or `Infinite` when
    /// every coefficient through `valid_through` vanishes.
    pub fn order(&self) -> VanishingOrder {
        let coeffs = self.coeffs[..=self.valid_through].to_vec();
        let scale = coeffs.iter().map(|(a, b)| a.norm().max(b.norm())).fold(0.0, f64::max);
        if scale == 0.0 {
            return VanishingOrder::Infinite;
        }
        let e = Expansion::new(1.0, coeffs).expect("recursion table within the order cap");
        e.vanishing_order_from_coeffs(1e-10)
    }
}

struct Row {
    m: [C64; 2],
    rhs: C64,
}

fn line_row(cond: LineCondition, n: usize, phi: f64, s: f64, k: f64, coeffs: &[(C64, C64)]) -> Option<Row> {
    let e = C64::from_polar(1.0, n as f64 * phi);
    match cond {
        LineCondition::Nodal => Some(Row { m: [e, e.conj()], rhs: ZERO }),
        LineCondition::Singular | LineCondition::Impedance(_) if n == 0 => None,
        LineCondition::Singular | LineCondition::Impedance(_) => {
            let c = cond.eta().unwrap_or(ZERO);
            let big_a = |j: usize| coeffs[j].0 * C64::from_polar(1.0, j as f64 * phi);
            let big_b = |j: usize| coeffs[j].1 * C64::from_polar(1.0, -(j as f64) * phi);
            let f = I * (s * k / 2.0);
            let mut rhs = -c * (big_a(n - 1) + big_b(n - 1));
            if n >= 3 {
                rhs -= f * (big_a(n - 2) - big_b(n - 2));
            }
            Some(Row { m: [f * e, -f * e.conj()], rhs })
        }
    }
}

/// Solves the coefficient recursion level by level from `a_0 = u(0)`.
///
/// At the first singular level the free direction is scaled by `free`; later
/// singular levels take the minimum-norm solution.
pub fn run_recursion_with(config: &CornerConfig, n_max: usize, free: C64) -> Result<RecursionReport, VanishingError> {
    if n_max > N_ORDER_MAX {
        return Err(VanishingError::DepthTooLarge(n_max));
    }
    let k = config.lambda.sqrt();
    let th = config.theta0();
    let mut coeffs = vec![(ZERO, ZERO); n_max + 1];
    coeffs[0].0 = config.u_at_origin;
    let mut events = Vec::new();
    let mut first_singular = None;
    let mut valid_through = n_max;
    let mut scale = config.u_at_origin.norm();
    for n in 0..=n_max {
        let rows: Vec<Row> = [
            line_row(config.cond_minus, n, 0.0, -1.0, k, &coeffs),
            line_row(config.cond_plus, n, th, 1.0, k, &coeffs),
        ]
        .into_iter()
        .flatten()
        .collect();
        if n == 0 {
            continue;
        }
        let (r0, r1) = (&rows[0], &rows[1]);
        let det = r0.m[0] * r1.m[1] - r0.m[1] * r1.m[0];
        let n0 = (r0.m[0].norm_sqr() + r0.m[1].norm_sqr()).sqrt();
        let n1 = (r1.m[0].norm_sqr() + r1.m[1].norm_sqr()).sqrt();
        let (x0, x1);
        if det.norm() > SINGULAR_THRESHOLD * n0 * n1 {
            x0 = (r0.rhs * r1.m[1] - r0.m[1] * r1.rhs) / det;
            x1 = (r0.m[0] * r1.rhs - r1.m[0] * r0.rhs) / det;
        } else {
            let (dom, other, dn) = if n0 >= n1 { (r0, r1, n0) } else { (r1, r0, n1) };
            let conj = [dom.m[0].conj(), dom.m[1].conj()];
            let px = [dom.rhs * conj[0] / (dn * dn), dom.rhs * conj[1] / (dn * dn)];
            let mu = (other.m[0] * conj[0] + other.m[1] * conj[1]) / (dn * dn);
            let residual = (other.rhs - mu * dom.rhs).norm() / ((other.m[0].norm_sqr() + other.m[1].norm_sqr()).sqrt());
            let null = [-dom.m[1] / dn, dom.m[0] / dn];
            let rhs_scale = scale.max(dom.rhs.norm() / dn).max(other.rhs.norm());
            if residual > SINGULAR_THRESHOLD * rhs_scale.max(1e-300) && residual > 1e-300 {
                events.push(RecursionEvent::Inconsistent { level: n, residual });
                if valid_through == n_max {
                    valid_through = n - 1;
                }
            }
            let t = if first_singular.is_none() { free } else { ZERO };
            if first_singular.is_none() {
                first_singular = Some(n);
                events.push(RecursionEvent::Free { level: n, value: [t.re, t.im] });
            } else {
                events.push(RecursionEvent::Free { level: n, value: [0.0, 0.0] });
            }
            x0 = px[0] + t * null[0];
            x1 = px[1] + t * null[1];
        }
        coeffs[n] = (x0, x1);
        scale = scale.max(x0.norm()).max(x1.norm());
    }
    Ok(RecursionReport { first_singular, coeffs, events, valid_through })
}

/// [`run_recursion_with`] with unit free coefficient.
pub fn run_recursion(config: &CornerConfig, n_max: usize) -> Result<RecursionReport, VanishingError> {
    run_recursion_with(config, n_max, C64::new(1.0, 0.0))
}

/// Builds an eigenfunction expansion from the recursion, truncated at the
/// last consistent level.
pub fn constructed_expansion(config: &CornerConfig, n_max: usize) -> Result<(Expansion, RecursionReport), VanishingError> {
    let rep = run_recursion(config, n_max)?;
    let e = Expansion::new(config.lambda, rep.coeffs[..=rep.valid_through].to_vec())?;
    Ok((e, rep))
}

/// Largest boundary-condition residual of `u` on both rays, sampled at
/// `samples` points of `(0, h]`.
pub fn boundary_residual(config: &CornerConfig, u: &Expansion, h: f64, samples: usize) -> f64 {
    let th = config.theta0();
    let mut worst: f64 = 0.0;
    for (cond, phi, s) in [(config.cond_minus, 0.0, -1.0), (config.cond_plus, th, 1.0)] {
        for i in 1..=samples {
            let r = h * i as f64 / samples as f64;
            let val = u.eval(r, phi);
            let res = match cond {
                LineCondition::Nodal => val,
                _ => {
                    let dn = u.ray_normal_derivative(phi, r, s).expect("r > 0");
                    dn + cond.eta().unwrap_or(ZERO) * val
                }
            };
            worst = worst.max(res.norm());
        }
    }
    worst
}

/// Low-order coefficients from the closed-form level solves; `None` marks a
/// level whose `sin(nθ₀)` vanishes (and every level above it).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowOrder {
    pub level1: Option<(C64, C64)>,
    pub level2: Option<(C64, C64)>,
    pub level3: Option<(C64, C64)>,
    pub level4: Option<(C64, C64)>,
}

impl LowOrder {
    /// Levels `1..=4` as `(a_n, b_n)` slots.
    pub fn levels(&self) -> [Option<(C64, C64)>; 4] {
        [self.level1, self.level2, self.level3, self.level4]
    }
}

/// `(a_n, b_n)`, `n = 1..4`, for two impedance lines `C₁` (on `Γ⁻`) and `C₂` (on `Γ⁺`).
pub fn low_order_coefficients(u0: C64, lambda: f64, theta0: f64, c1: C64, c2: C64) -> LowOrder {
    let sl = lambda.sqrt();
    let e = |m: f64| C64::from_polar(1.0, m * theta0);
    let tiny = |x: f64| x.abs() < 1e-12;
    let mut out = LowOrder { level1: None, level2: None, level3: None, level4: None };
    let s1 = theta0.sin();
    if tiny(s1) {
        return out;
    }
    let a1 = (c1 * e(-1.0) + c2) * u0 / (sl * s1);
    let b1 = (c1 * e(1.0) + c2) * u0 / (sl * s1);
    out.level1 = Some((a1, b1));
    let s2 = (2.0 * theta0).sin();
    if tiny(s2) {
        return out;
    }
    let pre2 = u0 * 2.0 / (lambda * s2 * s1);
    let cth = theta0.cos();
    let a2 = pre2 * (c1 * c2 + c1 * c2 * e(-2.0) + c2 * c2 * cth + c1 * c1 * cth * e(-2.0));
    let b2 = pre2 * (c1 * c2 + c1 * c2 * e(2.0) + c2 * c2 * cth + c1 * c1 * cth * e(2.0));
    out.level2 = Some((a2, b2));
    let s3 = (3.0 * theta0).sin();
    if tiny(s3) {
        return out;
    }
    let big_b1 = c2 * 2.0 * (a2 * e(2.0) + b2 * e(-2.0)) - c2 * 4.0 * u0 - I * (a1 * e(1.0) - b1 * e(-1.0)) * sl;
    let big_b2 = c1 * 2.0 * (a2 + b2) - c1 * 4.0 * u0 + I * (a1 - b1) * sl;
    let a3 = (big_b1 + big_b2 * e(-3.0)) / (2.0 * sl * s3);
    let b3 = (big_b1 + big_b2 * e(3.0)) / (2.0 * sl * s3);
    out.level3 = Some((a3, b3));
    let s4 = (4.0 * theta0).sin();
    if tiny(s4) {
        return out;
    }
    let d1 = c2 * 2.0 * (a3 * e(3.0) + b3 * e(-3.0)) - I * 2.0 * sl * (a2 * e(2.0) - b2 * e(-2.0))
        - c2 * 6.0 * (a1 * e(1.0) + b1 * e(-1.0));
    let d2 = c1 * 2.0 * (a3 + b3) + I * 2.0 * sl * (a2 - b2) - c1 * 6.0 * (a1 + b1);
    let a4 = (d1 + d2 * e(-4.0)) / (2.0 * sl * s4);
    let b4 = (d1 + d2 * e(4.0)) / (2.0 * sl * s4);
    out.level4 = Some((a4, b4));
    out
}

/// Why [`u0_forced_zero`] returned its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForcingCertificate {
    /// Straight angle with `C₁ ≠ C₂`: the two level-1 relations contradict unless `u(0) = 0`.
    StraightAngle,
    /// `α = 1/3`, `C₁ ≠ C₂` and `1 + 4(C₁² + C₁C₂ + C₂²)/(3λ) ≠ 0`.
    ThirdAngle,
    /// `α ∈ {1/2, 1/4}`: the singular level only yields an identity.
    ConsistencyIdentityOnly,
    /// None of the covered cases applies.
    NotCovered,
}

/// Whether the closed-form low-order analysis forces `u(0) = 0` for two
/// impedance lines.
pub fn u0_forced_zero(alpha: AngleClass, c1: C64, c2: C64, lambda: f64) -> (bool, ForcingCertificate) {
    match alpha {
        AngleClass::Rational { p: 1, q: 1 } if c1 != c2 => (true, ForcingCertificate::StraightAngle),
        AngleClass::Rational { p: 1, q: 3 } if c1 != c2 => {
            let bracket = C64::new(1.0, 0.0) + (c1 * c1 + c1 * c2 + c2 * c2) * (4.0 / (3.0 * lambda));
            if bracket.norm() > 1e-14 {
                (true, ForcingCertificate::ThirdAngle)
            } else {
                (false, ForcingCertificate::NotCovered)
            }
        }
        AngleClass::Rational { p: 1, q: 2 } | AngleClass::Rational { p: 1, q: 4 } => {
            (false, ForcingCertificate::ConsistencyIdentityOnly)
        }
        _ => (false, ForcingCertificate::NotCovered),
    }
}

/// Settings of [`check_corner`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    /// Recursion depth; also the truncation of the constructed eigenfunction.
    pub depth: usize,
    /// Largest radius of the disk-integral grid.
    pub r_max: f64,
    /// Smallest radius of the disk-integral grid.
    pub r_min: f64,
    /// Number of radii, geometrically spaced.
    pub n_radii: usize,
    /// Outer radius of the boundary-residual check.
    pub residual_radius: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self { depth: 24, r_max: 0.1, r_min: 0.003, n_radii: 8, residual_radius: 0.02 }
    }
}

/// Prediction, recursion and numeric estimate for one corner.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CornerCheck {
    pub verdict: Verdict,
    pub first_singular: Option<usize>,
    pub first_inconsistent: Option<usize>,
    pub recursion_order: VanishingOrder,
    pub numeric_order: Option<VanishingOrder>,
    pub numeric_error: Option<String>,
    pub boundary_residual: f64,
    pub agree: bool,
}

/// Whether an observed order is compatible with a predicted one, where
/// orders at or above `cap` count as infinite.
pub fn compatible(predicted: VanishingOrder, observed: VanishingOrder, cap: usize) -> bool {
    use VanishingOrder::*;
    match (predicted, observed) {
        (Infinite, Infinite) => true,
        (Infinite, AtLeast(m)) | (Infinite, Finite(m)) => m >= cap,
        (p, Finite(n)) => p.admits(n),
        (Finite(_), Infinite) => false,
        (AtLeast(_), Infinite) => true,
        (Finite(n), AtLeast(m)) => m <= n,
        (AtLeast(_), AtLeast(_)) => true,
    }
}

/// Runs [`predict`], [`run_recursion`] and a numeric estimate on the
/// constructed eigenfunction, and reports whether all three agree.
pub fn check_corner(config: &CornerConfig, opts: &CheckOptions) -> Result<CornerCheck, VanishingError> {
    let verdict = predict(config);
    let (u, rep) = constructed_expansion(config, opts.depth)?;
    let recursion_order = rep.order();
    let ratio = (opts.r_min / opts.r_max).powf(1.0 / (opts.n_radii - 1) as f64);
    let radii: Vec<f64> = (0..opts.n_radii).map(|i| opts.r_max * ratio.powi(i as i32)).collect();
    let cfg = crate::expansion::EstimatorConfig::default();
    let estimate = crate::expansion::estimate_vanishing_order_numeric(&|p: [f64; 2]| u.eval_xy(p), [0.0, 0.0], &radii, &cfg);
    let (numeric_order, numeric_error) = match estimate {
        Ok(o) => (Some(o), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let cap = rep.valid_through.min(opts.depth);
    let agree = compatible(verdict.order, recursion_order, cap)
        && numeric_order.is_some_and(|o| compatible(verdict.order, o, cap) && compatible(recursion_order, o, cap));
    let boundary_residual = boundary_residual(config, &u, opts.residual_radius, 64);
    Ok(CornerCheck {
        verdict,
        first_singular: rep.first_singular,
        first_inconsistent: rep.first_inconsistent(),
        recursion_order,
        numeric_order,
        numeric_error,
        boundary_residual,
        agree,
    })
}
