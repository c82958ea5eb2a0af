//! Scalar and three-channel algebra on the open cube (-1, 1)^3.
//!
//! Channel values live strictly inside (-1, 1). Addition is
//! `(a + b) / (1 + a*b)` and scalar multiplication is
//! `tanh(lambda * atanh(a))`, which together make the interval a real vector
//! space. The map `phi = atanh` carries that structure onto the ordinary
//! reals, so the Euclidean pieces (dot product, norm) are computed on phi
//! coordinates where both operations become plain addition and scaling.
//!
//! Every operation re-clamps its result a margin away from the interval
//! ends, so saturating inputs can never round onto ±1 and later `atanh`
//! calls stay finite.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// Margin kept between any stored channel value and the interval ends.
pub const DOMAIN_MARGIN: f64 = 1e-12;

const MAX_ABS: f64 = 1.0 - DOMAIN_MARGIN;

/// A number strictly inside (-1, 1): one colour channel.
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub struct LogScalar(f64);

impl LogScalar {
    /// The additive identity of the interval algebra.
    pub const ZERO: LogScalar = LogScalar(0.0);

    /// Validates `value` and clamps it into `[-1 + margin, 1 - margin]`.
    /// NaN and infinities are rejected; finite values outside the interval
    /// saturate at the margin.
    pub fn new(value: f64) -> Result<LogScalar> {
        if !value.is_finite() {
            return Err(Error::NonFinite("channel value"));
        }
        Ok(Self::clamped(value))
    }

    /// Clamp a finite real into the open interval.
    pub(crate) fn clamped(value: f64) -> LogScalar {
        debug_assert!(!value.is_nan());
        LogScalar(value.clamp(-MAX_ABS, MAX_ABS))
    }

    /// The raw channel value in (-1, 1).
    pub fn value(self) -> f64 {
        self.0
    }

    /// The isomorphism onto the reals: `atanh`, forced odd so that
    /// `phi(-x) == -phi(x)` holds bit for bit. The domain clamp keeps the
    /// result finite (at the margin, `|phi|` is about 14.2).
    pub fn phi(self) -> f64 {
        self.0.abs().atanh().copysign(self.0)
    }

    /// Inverse of [`LogScalar::phi`]: `tanh`, clamped back into the
    /// interval. Rejects non-finite arguments.
    pub fn phi_inv(y: f64) -> Result<LogScalar> {
        if !y.is_finite() {
            return Err(Error::NonFinite("phi_inv argument"));
        }
        Ok(Self::clamped(y.tanh()))
    }

    /// Scalar action `lambda * a = tanh(lambda * atanh(a))`.
    ///
    /// This is the numerically stable form of
    /// `((1+a)^l - (1-a)^l) / ((1+a)^l + (1-a)^l)`; the power form overflows
    /// for large `lambda` and loses precision near the interval ends.
    ///
    /// Panics when `lambda` is not finite. User-supplied multipliers are
    /// validated at the [`crate::enhance::AffineParams`] boundary.
    pub fn scale(self, lambda: f64) -> LogScalar {
        assert!(lambda.is_finite(), "scalar multiplier must be finite");
        Self::clamped((lambda * self.phi()).tanh())
    }
}

impl Add for LogScalar {
    type Output = LogScalar;

    fn add(self, rhs: LogScalar) -> LogScalar {
        Self::clamped((self.0 + rhs.0) / (1.0 + self.0 * rhs.0))
    }
}

impl Sub for LogScalar {
    type Output = LogScalar;

    fn sub(self, rhs: LogScalar) -> LogScalar {
        Self::clamped((self.0 - rhs.0) / (1.0 - self.0 * rhs.0))
    }
}

impl Neg for LogScalar {
    type Output = LogScalar;

    fn neg(self) -> LogScalar {
        LogScalar(-self.0)
    }
}

/// A point of the colour cube: three channels held as [`LogScalar`]s.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ColorVec {
    pub r: LogScalar,
    pub g: LogScalar,
    pub b: LogScalar,
}

impl ColorVec {
    /// The cube centre, neutral element of the colour algebra.
    pub const ZERO: ColorVec = ColorVec {
        r: LogScalar::ZERO,
        g: LogScalar::ZERO,
        b: LogScalar::ZERO,
    };

    pub fn new(r: LogScalar, g: LogScalar, b: LogScalar) -> ColorVec {
        ColorVec { r, g, b }
    }

    /// Validate three raw channel values.
    pub fn from_values(r: f64, g: f64, b: f64) -> Result<ColorVec> {
        Ok(ColorVec {
            r: LogScalar::new(r)?,
            g: LogScalar::new(g)?,
            b: LogScalar::new(b)?,
        })
    }

    /// A gray vector with the same value in every channel.
    pub fn splat(c: LogScalar) -> ColorVec {
        ColorVec { r: c, g: c, b: c }
    }

    pub fn channels(self) -> [LogScalar; 3] {
        [self.r, self.g, self.b]
    }

    pub fn values(self) -> [f64; 3] {
        [self.r.value(), self.g.value(), self.b.value()]
    }

    /// Componentwise scalar action. Panics when `lambda` is not finite.
    pub fn scale(self, lambda: f64) -> ColorVec {
        ColorVec {
            r: self.r.scale(lambda),
            g: self.g.scale(lambda),
            b: self.b.scale(lambda),
        }
    }

    /// The `atanh` image of the vector.
    pub fn phi(self) -> PhiVec {
        PhiVec {
            r: self.r.phi(),
            g: self.g.phi(),
            b: self.b.phi(),
        }
    }

    /// Scalar product: the Euclidean dot of the phi coordinates.
    pub fn dot(self, other: ColorVec) -> f64 {
        self.phi().dot(other.phi())
    }

    /// Euclidean norm in phi coordinates: `sqrt(dot(v, v))`.
    pub fn norm(self) -> f64 {
        self.phi().norm()
    }
}

impl Add for ColorVec {
    type Output = ColorVec;

    fn add(self, rhs: ColorVec) -> ColorVec {
        ColorVec {
            r: self.r + rhs.r,
            g: self.g + rhs.g,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for ColorVec {
    type Output = ColorVec;

    fn sub(self, rhs: ColorVec) -> ColorVec {
        ColorVec {
            r: self.r - rhs.r,
            g: self.g - rhs.g,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for ColorVec {
    type Output = ColorVec;

    fn neg(self) -> ColorVec {
        ColorVec {
            r: -self.r,
            g: -self.g,
            b: -self.b,
        }
    }
}

/// The `atanh` image of a [`ColorVec`]: unbounded coordinates in which the
/// cube algebra is ordinary linear algebra.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PhiVec {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

impl PhiVec {
    pub fn dot(self, other: PhiVec) -> f64 {
        self.r * other.r + self.g * other.g + self.b * other.b
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Back into the cube via `tanh`. Rejects non-finite coordinates.
    pub fn to_color(self) -> Result<ColorVec> {
        Ok(ColorVec {
            r: LogScalar::phi_inv(self.r)?,
            g: LogScalar::phi_inv(self.g)?,
            b: LogScalar::phi_inv(self.b)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use proptest::prelude::*;

    fn ls(v: f64) -> LogScalar {
        LogScalar::new(v).unwrap()
    }

    /// Reference power form of the scalar action, used only to cross-check
    /// the tanh form.
    fn scale_power_form(lambda: f64, a: f64) -> f64 {
        let up = (1.0 + a).powf(lambda);
        let down = (1.0 - a).powf(lambda);
        (up - down) / (up + down)
    }

    #[test]
    fn construction_clamps_and_rejects() {
        assert_eq!(ls(0.25).value(), 0.25);
        assert_eq!(ls(1.0).value(), 1.0 - DOMAIN_MARGIN);
        assert_eq!(ls(-7.0).value(), -(1.0 - DOMAIN_MARGIN));
        assert!(LogScalar::new(f64::NAN).is_err());
        assert!(LogScalar::new(f64::INFINITY).is_err());
    }

    #[test]
    fn add_examples() {
        // (0.5 + 0.5) / (1 + 0.25) = 0.8
        assert!(((ls(0.5) + ls(0.5)).value() - 0.8).abs() < 1e-15);
        // neutral element
        assert_eq!((ls(0.37) + LogScalar::ZERO).value(), 0.37);
        // opposite element
        assert_eq!((ls(0.37) + (-ls(0.37))).value(), 0.0);
    }

    #[test]
    fn sub_examples() {
        // (0.8 - 0.5) / (1 - 0.4) = 0.5
        assert!(((ls(0.8) - ls(0.5)).value() - 0.5).abs() < 1e-15);
        assert_eq!((ls(0.9) - ls(0.9)).value(), 0.0);
        assert_eq!((ls(-0.4) - LogScalar::ZERO).value(), -0.4);
    }

    #[test]
    fn neg_examples() {
        assert_eq!((-ls(0.5)).value(), -0.5);
        assert_eq!((-LogScalar::ZERO).value(), 0.0);
        assert_eq!((-ls(-0.99)).value(), 0.99);
    }

    #[test]
    fn scale_examples() {
        // 2 * 0.5 = (2.25 - 0.25) / (2.25 + 0.25) = 0.8, same as 0.5 + 0.5
        assert!((ls(0.5).scale(2.0).value() - 0.8).abs() < 1e-12);
        // unit scalar
        assert!((ls(0.62).scale(1.0).value() - 0.62).abs() < 1e-12);
        // 0.5 * 0.8 = (sqrt(1.8) - sqrt(0.2)) / (sqrt(1.8) + sqrt(0.2)) = 0.5
        assert!((ls(0.8).scale(0.5).value() - 0.5).abs() < 1e-12);
    }

    #[test]
    #[should_panic(expected = "finite")]
    fn scale_rejects_non_finite_multiplier() {
        let _ = ls(0.5).scale(f64::NAN);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(LogScalar::ZERO.phi(), 0.0);
        assert!((ls(1f64.tanh()).phi() - 1.0).abs() < 1e-12);
        // 0.5 * ln(1.762 / 0.238)
        assert!((ls(0.762).phi() - 1.0009670664123251).abs() < 1e-12);
        // odd by construction, bit for bit
        assert_eq!(ls(0.613).phi(), -(-ls(0.613)).phi());
    }

    #[test]
    fn phi_inv_examples() {
        assert_eq!(LogScalar::phi_inv(0.0).unwrap().value(), 0.0);
        assert!((LogScalar::phi_inv(1.0).unwrap().value() - 0.7615941559557649).abs() < 1e-15);
        assert!((LogScalar::phi_inv(-1.0).unwrap().value() + 0.7615941559557649).abs() < 1e-15);
        assert!(LogScalar::phi_inv(f64::INFINITY).is_err());
    }

    #[test]
    fn vector_examples() {
        let v = ColorVec::from_values(0.5, 0.0, -0.5).unwrap();
        assert_eq!(v + ColorVec::ZERO, v);
        assert_eq!(v - v, ColorVec::ZERO);

        let half = ColorVec::splat(ls(0.5));
        for c in half.scale(2.0).values() {
            assert!((c - 0.8).abs() < 1e-12);
        }
    }

    #[test]
    fn dot_examples() {
        let u_l = ColorVec::splat(ls(1f64.tanh()));
        assert!((u_l.dot(u_l) - 3.0).abs() < 1e-9);

        let v = ColorVec::from_values(0.3, -0.7, 0.9).unwrap();
        assert_eq!(v.dot(ColorVec::ZERO), 0.0);

        let w1 = ColorVec::splat(ls(-0.5));
        let w2 = ColorVec::splat(ls(0.5));
        assert!((w1.dot(w2) - (-0.9052117206094362)).abs() < 1e-12);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(ColorVec::ZERO.norm(), 0.0);
        let u_l = ColorVec::splat(ls(1f64.tanh()));
        assert!((u_l.norm() - 3f64.sqrt()).abs() < 1e-9);
        let v = ColorVec::from_values(0.5, 0.0, 0.0).unwrap();
        assert!((v.norm() - 0.5493061443340548).abs() < 1e-12);
    }

    #[test]
    fn saturating_inputs_stay_inside_the_interval() {
        let hi = ls(1.0);
        let results = [
            hi + hi,
            hi - (-hi),
            hi.scale(1e6),
            hi.scale(1e300),
            (-hi).scale(317.0),
        ];
        for r in results {
            assert!(r.value().is_finite());
            assert!(r.value().abs() <= MAX_ABS);
            assert!(r.phi().is_finite());
        }
    }

    fn any_scalar() -> impl Strategy<Value = LogScalar> {
        // Full representable range, including the saturation margin.
        (-1.0f64..=1.0).prop_map(LogScalar::clamped)
    }

    fn interior_scalar() -> impl Strategy<Value = LogScalar> {
        (-0.95f64..=0.95).prop_map(LogScalar::clamped)
    }

    fn interior_vec() -> impl Strategy<Value = ColorVec> {
        (interior_scalar(), interior_scalar(), interior_scalar())
            .prop_map(|(r, g, b)| ColorVec::new(r, g, b))
    }

    proptest! {
        #[test]
        fn add_commutes(a in any_scalar(), b in any_scalar()) {
            prop_assert_eq!(a + b, b + a);
        }

        #[test]
        fn add_associates(a in interior_scalar(), b in interior_scalar(), c in interior_scalar()) {
            let left = (a + b) + c;
            let right = a + (b + c);
            prop_assert!((left.value() - right.value()).abs() < 1e-9);
        }

        #[test]
        fn identity_and_inverse(a in any_scalar()) {
            prop_assert_eq!(a + LogScalar::ZERO, a);
            prop_assert_eq!((a + (-a)).value(), 0.0);
            prop_assert_eq!(a - a, LogScalar::ZERO);
        }

        #[test]
        fn addition_matches_phi_transport(a in any_scalar(), b in any_scalar()) {
            let direct = a + b;
            let via_phi = LogScalar::phi_inv(a.phi() + b.phi()).unwrap();
            prop_assert!((direct.value() - via_phi.value()).abs() < 1e-9);
        }

        #[test]
        fn scaling_matches_phi_transport(a in any_scalar(), lambda in -16.0f64..=16.0) {
            let direct = a.scale(lambda);
            let via_phi = LogScalar::phi_inv(lambda * a.phi()).unwrap();
            prop_assert!((direct.value() - via_phi.value()).abs() < 1e-9);
        }

        #[test]
        fn tanh_form_matches_power_form(a in -0.999f64..=0.999, lambda in -8.0f64..=8.0) {
            let tanh_form = LogScalar::clamped(a).scale(lambda).value();
            let power_form = scale_power_form(lambda, a);
            prop_assert!((tanh_form - power_form).abs() < 1e-9);
        }

        #[test]
        fn vector_space_axioms(
            u in interior_vec(),
            v in interior_vec(),
            lambda in -2.0f64..=2.0,
            mu in -2.0f64..=2.0,
        ) {
            // lambda * (u + v) = lambda * u + lambda * v
            let lhs = (u + v).scale(lambda);
            let rhs = u.scale(lambda) + v.scale(lambda);
            for (l, r) in lhs.values().iter().zip(rhs.values()) {
                prop_assert!((l - r).abs() < 1e-9);
            }
            // (lambda + mu) * v = lambda * v + mu * v
            let lhs = v.scale(lambda + mu);
            let rhs = v.scale(lambda) + v.scale(mu);
            for (l, r) in lhs.values().iter().zip(rhs.values()) {
                prop_assert!((l - r).abs() < 1e-9);
            }
            // (lambda * mu) * v = lambda * (mu * v)
            let lhs = v.scale(lambda * mu);
            let rhs = v.scale(mu).scale(lambda);
            for (l, r) in lhs.values().iter().zip(rhs.values()) {
                prop_assert!((l - r).abs() < 1e-9);
            }
            // 1 * v = v
            for (l, r) in v.scale(1.0).values().iter().zip(v.values()) {
                prop_assert!((l - r).abs() < 1e-9);
            }
        }

        #[test]
        fn norm_is_homogeneous(v in interior_vec(), lambda in -2.0f64..=2.0) {
            prop_assert!((v.scale(lambda).norm() - lambda.abs() * v.norm()).abs() < 1e-9);
        }

        #[test]
        fn cauchy_schwarz(u in interior_vec(), v in interior_vec()) {
            prop_assert!(u.dot(v).abs() <= u.norm() * v.norm() + 1e-12);
        }

        #[test]
        fn operations_stay_closed(a in any_scalar(), b in any_scalar(), lambda in -64.0f64..=64.0) {
            for r in [a + b, a - b, -a, a.scale(lambda)] {
                prop_assert!(r.value().is_finite());
                prop_assert!(r.value().abs() <= MAX_ABS);
            }
        }

        #[test]
        fn scaling_is_strictly_increasing(
            a in -0.95f64..=0.9499,
            gap in 1e-6f64..=0.05,
            lambda in 0.1f64..=4.0,
        ) {
            let lo = LogScalar::clamped(a);
            let hi = LogScalar::clamped(a + gap);
            prop_assert!(lo.scale(lambda).value() < hi.scale(lambda).value());
        }

        #[test]
        fn addition_is_strictly_increasing(
            a in -0.99f64..=0.9899,
            gap in 1e-7f64..=0.01,
            b in interior_scalar(),
        ) {
            let lo = LogScalar::clamped(a);
            let hi = LogScalar::clamped(a + gap);
            prop_assert!((lo + b).value() < (hi + b).value());
        }
    }
}
