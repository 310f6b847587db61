//! Line segments carrying nodal, singular or impedance conditions, angle
//! rationality, the reflection principle and the irrational reflection cascade.
//!
//! Angles between lines are written `θ = απ`.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

/// Errors raised by line operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinesError {
    #[error("segment length must be positive, got {0}")]
    NonPositiveLength(f64),
    #[error("reflecting an impedance line across a singular line is not covered by the reflection principle")]
    UnsupportedReflection,
    #[error("angle ratio must lie in (0, 2), got {0}")]
    AngleOutOfRange(f64),
    #[error("dense line family needs two nodal or two singular segments through a common point at an irrational angle: {0}")]
    WitnessPrecondition(String),
    #[error("malformed segment JSON: {0}")]
    Json(String),
}

/// Boundary condition carried by a line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineCondition {
    /// `u = 0` on the line.
    Nodal,
    /// `∂_ν u = 0` on the line.
    Singular,
    /// `∂_ν u + η u = 0` on the line with `η ≠ 0`.
    Impedance(C64),
}

impl LineCondition {
    /// Impedance condition; `η = 0` is normalized to [`LineCondition::Singular`].
    pub fn impedance(eta: C64) -> Self {
        if eta == C64::new(0.0, 0.0) {
            LineCondition::Singular
        } else {
            LineCondition::Impedance(eta)
        }
    }

    /// The impedance parameter, with `0` for singular lines and `None` for nodal lines.
    pub fn eta(&self) -> Option<C64> {
        match *self {
            LineCondition::Nodal => None,
            LineCondition::Singular => Some(C64::new(0.0, 0.0)),
            LineCondition::Impedance(e) => Some(e),
        }
    }

    /// Short lowercase name.
    pub fn name(&self) -> &'static str {
        match self {
            LineCondition::Nodal => "nodal",
            LineCondition::Singular => "singular",
            LineCondition::Impedance(_) => "impedance",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ConditionJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eta: Option<[f64; 2]>,
}

impl Serialize for LineCondition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let eta = match self {
            LineCondition::Impedance(e) => Some([e.re, e.im]),
            _ => None,
        };
        ConditionJson { kind: self.name().to_string(), eta }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LineCondition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ConditionJson::deserialize(d)?;
        match (j.kind.as_str(), j.eta) {
            ("nodal", _) => Ok(LineCondition::Nodal),
            ("singular", _) => Ok(LineCondition::Singular),
            ("impedance", Some([re, im])) => Ok(LineCondition::impedance(C64::new(re, im))),
            ("impedance", None) => Err(serde::de::Error::custom("impedance condition needs \"eta\"")),
            (other, _) => Err(serde::de::Error::custom(format!("unknown condition kind {other:?}"))),
        }
    }
}

/// A straight segment starting at `origin` in direction `angle_over_pi · π`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub origin: [f64; 2],
    pub angle_over_pi: f64,
    pub length: f64,
    pub condition: LineCondition,
}

impl Segment {
    pub fn new(origin: [f64; 2], angle_over_pi: f64, length: f64, condition: LineCondition) -> Result<Self, LinesError> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(LinesError::NonPositiveLength(length));
        }
        Ok(Self { origin, angle_over_pi, length, condition })
    }

    /// Direction angle in radians.
    pub fn angle(&self) -> f64 {
        self.angle_over_pi * PI
    }

    /// Unit direction vector.
    pub fn direction(&self) -> [f64; 2] {
        let a = self.angle();
        [a.cos(), a.sin()]
    }

    /// Point at arc length `t` from the origin.
    pub fn point(&self, t: f64) -> [f64; 2] {
        let d = self.direction();
        [self.origin[0] + t * d[0], self.origin[1] + t * d[1]]
    }

    /// Parses the JSON form `{"origin":[x,y], "angle_over_pi":.., "length":.., "condition":{..}}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, LinesError> {
        let s: Segment = serde_json::from_value(v.clone()).map_err(|e| LinesError::Json(e.to_string()))?;
        Segment::new(s.origin, s.angle_over_pi, s.length, s.condition)
    }
}

/// Rationality class of an angle ratio `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum AngleClass {
    Irrational,
    Rational { p: u64, q: u64 },
}

impl AngleClass {
    /// Exact rational class `p/q`, reduced to lowest terms.
    pub fn from_ratio(p: u64, q: u64) -> Self {
        let g = gcd(p, q).max(1);
        AngleClass::Rational { p: p / g, q: q / g }
    }

    /// Degree of rationality `q`, if rational.
    pub fn degree(&self) -> Option<u64> {
        match *self {
            AngleClass::Rational { q, .. } => Some(q),
            AngleClass::Irrational => None,
        }
    }
}

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Default largest denominator accepted by [`classify_angle`].
pub const Q_MAX: u64 = 10_000;
/// Default distance to a convergent accepted by [`classify_angle`].
pub const EPS_RAT: f64 = 1e-9;

/// Classifies `alpha` by its continued-fraction convergents: the first
/// convergent `p/q` with `q ≤ q_max` and `|alpha − p/q| ≤ eps` makes it
/// rational.
pub fn classify_angle(alpha: f64, q_max: u64, eps: f64) -> Result<AngleClass, LinesError> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(LinesError::AngleOutOfRange(alpha));
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 0u64);
    let mut x = alpha;
    for _ in 0..64 {
        let a = x.floor();
        if a > 1e15 {
            break;
        }
        let a = a as u64;
        let (p2, q2) = (a.saturating_mul(p1).saturating_add(p0), a.saturating_mul(q1).saturating_add(q0));
        if q2 > q_max {
            break;
        }
        if (alpha - p2 as f64 / q2 as f64).abs() <= eps && p2 > 0 {
            return Ok(AngleClass::from_ratio(p2, q2));
        }
        let frac = x - a as f64;
        if frac <= 0.0 {
            break;
        }
        x = 1.0 / frac;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    Ok(AngleClass::Irrational)
}

/// Mirror image of `target` across the full line containing `mirror`.
///
/// Across a nodal mirror every condition keeps its type (an impedance keeps its
/// constant `η`); across a singular mirror nodal and singular lines keep their
/// type and impedance lines are rejected.
pub fn reflect(target: &Segment, mirror: &Segment) -> Result<Segment, LinesError> {
    if !(mirror.length > 0.0) {
        return Err(LinesError::NonPositiveLength(mirror.length));
    }
    let condition = match (mirror.condition, target.condition) {
        (LineCondition::Nodal, c) => c,
        (LineCondition::Singular, LineCondition::Impedance(_)) => return Err(LinesError::UnsupportedReflection),
        (LineCondition::Singular, c) => c,
        (LineCondition::Impedance(_), _) => return Err(LinesError::UnsupportedReflection),
    };
    let d = mirror.direction();
    let rel = [target.origin[0] - mirror.origin[0], target.origin[1] - mirror.origin[1]];
    let along = rel[0] * d[0] + rel[1] * d[1];
    let img = [
        mirror.origin[0] + 2.0 * along * d[0] - rel[0],
        mirror.origin[1] + 2.0 * along * d[1] - rel[1],
    ];
    let mut angle = 2.0 * mirror.angle_over_pi - target.angle_over_pi;
    angle = angle.rem_euclid(2.0);
    Ok(Segment { origin: img, angle_over_pi: angle, length: target.length, condition })
}

/// Stop threshold of [`cascade`].
pub const CASCADE_STOP: f64 = 1e-6;

/// Iterates `α_{n+1} = 1 − ⌊1/α_n⌋ α_n` from `alpha1` until the value drops
/// below [`CASCADE_STOP`], hits zero, or `max_iter` values are produced.
pub fn cascade(alpha1: f64, max_iter: usize) -> Vec<f64> {
    let mut out = vec![alpha1];
    let mut a = alpha1;
    while out.len() < max_iter && a >= CASCADE_STOP && a > 0.0 {
        let inv = 1.0 / a;
        let m = inv.round();
        let next = if (inv - m).abs() <= 1e-12 * inv {
            0.0
        } else {
            1.0 - inv.floor() * a
        };
        a = next.max(0.0);
        out.push(a);
    }
    out
}

/// Exact cascade for a rational seed `p/q`: `α_{n+1} = (q mod p)/q`.
pub fn cascade_rational(p: u64, q: u64, max_iter: usize) -> Vec<(u64, u64)> {
    let mut out = vec![(p, q)];
    let mut num = p;
    while num != 0 && out.len() < max_iter {
        num = q % num;
        out.push((num, q));
    }
    out
}

/// Largest gap, in radians, between consecutive ray directions on the circle.
pub fn max_angle_gap(angles: &[f64]) -> f64 {
    let mut a: Vec<f64> = angles.iter().map(|x| x.rem_euclid(2.0 * PI)).collect();
    a.sort_by(|x, y| x.partial_cmp(y).expect("finite angles"));
    if a.is_empty() {
        return 2.0 * PI;
    }
    let mut gap = a[0] + 2.0 * PI - a[a.len() - 1];
    for w in a.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    gap
}

/// Generates, by repeated reflection, a family of lines through the common
/// point of two nodal (or two singular) segments at an irrational angle until
/// the ray directions leave no gap of `angular_resolution` radians.
pub fn dense_line_witness(
    gamma_plus: &Segment,
    gamma_minus: &Segment,
    angular_resolution: f64,
) -> Result<Vec<Segment>, LinesError> {
    let same_kind = matches!(
        (gamma_plus.condition, gamma_minus.condition),
        (LineCondition::Nodal, LineCondition::Nodal) | (LineCondition::Singular, LineCondition::Singular)
    );
    if !same_kind {
        return Err(LinesError::WitnessPrecondition("conditions must both be nodal or both singular".into()));
    }
    let dx = gamma_plus.origin[0] - gamma_minus.origin[0];
    let dy = gamma_plus.origin[1] - gamma_minus.origin[1];
    if dx.hypot(dy) > 1e-12 {
        return Err(LinesError::WitnessPrecondition("segments must start at a common point".into()));
    }
    let alpha = (gamma_plus.angle_over_pi - gamma_minus.angle_over_pi).rem_euclid(2.0);
    let alpha = if alpha > 1.0 { 2.0 - alpha } else { alpha };
    if alpha <= 0.0 || alpha >= 1.0 {
        return Err(LinesError::WitnessPrecondition(format!("degenerate angle ratio {alpha}")));
    }
    if let AngleClass::Rational { p, q } = classify_angle(alpha, Q_MAX, EPS_RAT)? {
        return Err(LinesError::WitnessPrecondition(format!("angle ratio is rational, {p}/{q}")));
    }
    if !(angular_resolution > 0.0) {
        return Err(LinesError::WitnessPrecondition("angular resolution must be positive".into()));
    }
    let mut family = vec![*gamma_minus, *gamma_plus];
    let cap = 1_000_000usize;
    loop {
        let angles: Vec<f64> = family.iter().map(|s| s.angle()).collect();
        if max_angle_gap(&angles) < angular_resolution {
            return Ok(family);
        }
        if family.len() >= cap {
            return Err(LinesError::WitnessPrecondition("family did not become dense within the cap".into()));
        }
        let n = family.len();
        let next = reflect(&family[n - 2], &family[n - 1])?;
        family.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::Expansion;

    #[test]
    fn classify_examples() {
        assert_eq!(classify_angle(0.5, 100, 1e-12).unwrap(), AngleClass::Rational { p: 1, q: 2 });
        assert_eq!(classify_angle(2.0 / 3.0, 100, 1e-12).unwrap(), AngleClass::Rational { p: 2, q: 3 });
        let r = 0.5f64.sqrt();
        assert_eq!(classify_angle(r, 100_000, 1e-12).unwrap(), AngleClass::Irrational);
        assert_eq!(classify_angle(r, Q_MAX, EPS_RAT).unwrap(), AngleClass::Irrational);
        // The convergent 470832/665857 lies 8.0e-13 from 1/sqrt(2).
        assert_eq!(classify_angle(r, 1_000_000, 1e-12).unwrap(), AngleClass::Rational { p: 470832, q: 665857 });
        assert_eq!(classify_angle(1.5, 100, 1e-12).unwrap(), AngleClass::Rational { p: 3, q: 2 });
        assert_eq!(classify_angle(1.0, 100, 1e-12).unwrap(), AngleClass::Rational { p: 1, q: 1 });
        assert!(classify_angle(2.0, 100, 1e-12).is_err());
    }

    #[test]
    fn impedance_zero_is_singular() {
        assert_eq!(LineCondition::impedance(C64::new(0.0, 0.0)), LineCondition::Singular);
        let c: LineCondition = serde_json::from_str(r#"{"kind":"impedance","eta":[0.0,0.0]}"#).unwrap();
        assert_eq!(c, LineCondition::Singular);
    }

    #[test]
    fn reflect_examples() {
        let t = Segment::new([0.0, 0.0], 0.0, 1.0, LineCondition::Nodal).unwrap();
        let m = Segment::new([0.0, 0.0], 0.3, 1.0, LineCondition::Nodal).unwrap();
        let r = reflect(&t, &m).unwrap();
        assert!((r.angle_over_pi - 0.6).abs() < 1e-14);
        let same = reflect(&m, &m).unwrap();
        assert!((same.angle_over_pi - 0.3).abs() < 1e-14 && same.origin == [0.0, 0.0]);
        let vert = Segment::new([1.0, -1.0], 0.5, 2.0, LineCondition::Nodal).unwrap();
        let r = reflect(&t, &vert).unwrap();
        assert!((r.origin[0] - 2.0).abs() < 1e-14 && r.origin[1].abs() < 1e-14);
        assert!((r.angle_over_pi - 1.0).abs() < 1e-14);
        let imp = Segment::new([0.0, 0.0], 0.0, 1.0, LineCondition::Impedance(C64::new(1.0, 0.0))).unwrap();
        let sing = Segment::new([0.0, 0.0], 0.2, 1.0, LineCondition::Singular).unwrap();
        assert_eq!(reflect(&imp, &sing), Err(LinesError::UnsupportedReflection));
    }

    #[test]
    fn cascade_examples() {
        assert_eq!(cascade(1.0 / 3.0, 500), vec![1.0 / 3.0, 0.0]);
        let s = cascade(0.5f64.sqrt(), 500);
        assert!((s[1] - (1.0 - 0.5f64.sqrt())).abs() < 1e-15);
        assert!(s.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(cascade_rational(2, 7, 100), vec![(2, 7), (1, 7), (0, 7)]);
    }

    #[test]
    fn dense_family_for_irrational_angle() {
        let a = Segment::new([0.0, 0.0], 0.0, 1.0, LineCondition::Nodal).unwrap();
        let b = Segment::new([0.0, 0.0], 0.5f64.sqrt(), 1.0, LineCondition::Nodal).unwrap();
        let fam = dense_line_witness(&b, &a, 0.1).unwrap();
        let angles: Vec<f64> = fam.iter().map(|s| s.angle()).collect();
        assert!(max_angle_gap(&angles) < 0.1);
        let c = Segment::new([0.0, 0.0], 0.5, 1.0, LineCondition::Nodal).unwrap();
        assert!(dense_line_witness(&c, &a, 0.1).is_err());
    }

    #[test]
    fn reflected_nodal_lines_stay_nodal() {
        let u = Expansion::sine_mode(3, 2.0).unwrap();
        let mut fam = vec![
            Segment::new([0.0, 0.0], 0.0, 1.0, LineCondition::Nodal).unwrap(),
            Segment::new([0.0, 0.0], 1.0 / 3.0, 1.0, LineCondition::Nodal).unwrap(),
        ];
        for _ in 0..10 {
            let n = fam.len();
            fam.push(reflect(&fam[n - 2], &fam[n - 1]).unwrap());
        }
        for s in &fam {
            for i in 1..=20 {
                assert!(u.eval_xy(s.point(i as f64 / 20.0)).norm() <= 1e-12);
            }
        }
    }
}
