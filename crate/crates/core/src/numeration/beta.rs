use std::fmt;

use dashu_float::ops::Abs;
use dashu_float::DBig;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeration::{DigitSequence, QuadraticParams, RenyiExpansion};

/// Default working precision in decimal digits.
pub const DEFAULT_PRECISION: usize = 64;

/// Working-precision real number.
pub type Real = DBig;

pub(crate) fn int(x: i64, precision: usize) -> Real {
    Real::from(x).with_precision(precision).value()
}

pub(crate) fn pow10(exp: i64, precision: usize) -> Real {
    let ten = int(10, precision);
    if exp >= 0 {
        ten.powi(exp.into())
    } else {
        int(1, precision) / ten.powi((-exp).into())
    }
}

/// `10^(-precision/2)`, the agreement tolerance for the working precision.
pub fn half_precision_tolerance(precision: usize) -> Real {
    pow10(-((precision / 2) as i64), precision)
}

pub(crate) fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

/// `(u + v·√d) / w` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticSurd {
    pub u: i64,
    pub v: i64,
    pub d: i64,
    pub w: i64,
}

impl QuadraticSurd {
    pub fn eval(&self, precision: usize) -> Real {
        let root = int(self.d, precision).sqrt();
        (int(self.u, precision) + int(self.v, precision) * root) / int(self.w, precision)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√{})/{}", self.u, self.v, self.d, self.w)
    }
}

/// β at a given decimal precision, plus its exact form when β is quadratic.
#[derive(Clone, Debug)]
pub struct BetaValue {
    value: Real,
    precision: usize,
    exact: Option<QuadraticSurd>,
    quadratic: Option<QuadraticParams>,
}

impl BetaValue {
    pub fn value(&self) -> &Real {
        &self.value
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn exact(&self) -> Option<QuadraticSurd> {
        self.exact
    }

    pub fn quadratic_params(&self) -> Option<QuadraticParams> {
        self.quadratic
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.value)
    }

    /// `⌈β⌉ - 1`, the largest digit of a β-expansion.
    pub fn max_digit(&self) -> u32 {
        let c = self.value.ceil();
        let c: i64 = c.to_int().value().try_into().expect("β fits in i64");
        (c - 1) as u32
    }

    pub(crate) fn tolerance(&self) -> Real {
        half_precision_tolerance(self.precision)
    }
}

impl fmt::Display for BetaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Larger root of `x² - (a+1)x + (a-b)`.
pub fn beta_of(params: QuadraticParams, precision: usize) -> Result<BetaValue> {
    check_precision(precision)?;
    let a = params.a() as i64;
    let b = params.b() as i64;
    let exact = QuadraticSurd {
        u: a + 1,
        v: 1,
        d: (a + 1) * (a + 1) - 4 * (a - b),
        w: 2,
    };
    Ok(BetaValue {
        value: exact.eval(precision),
        precision,
        exact: Some(exact),
        quadratic: Some(params),
    })
}

/// β solving `Σ t_i β^{-i} = 1` for an arbitrary admissible expansion.
///
/// Quadratic expansions `a b^ω` go through [`beta_of`]; everything else is
/// found by bisection on `[t_1, t_1 + 1]`, where the series is decreasing in β.
pub fn beta_from_renyi(renyi: &RenyiExpansion, precision: usize) -> Result<BetaValue> {
    check_precision(precision)?;
    if let Some(params) = renyi.quadratic_params() {
        return beta_of(params, precision);
    }
    let work = precision + 10;
    let one = int(1, work);
    let mut lo = int(renyi.digit(0) as i64, work);
    let mut hi = &lo + &one;
    let eps = pow10(-(work as i64) + 2, work);
    let two = int(2, work);
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / &two;
        if series_value(renyi.digits(), &mid) > one {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let value = ((lo + hi) / two).with_precision(precision).value();
    Ok(BetaValue {
        value,
        precision,
        exact: None,
        quadratic: None,
    })
}

/// Rejects working precisions outside 16..=4096 decimal digits.
pub fn check_precision(precision: usize) -> Result<()> {
    if !(16..=4096).contains(&precision) {
        return Err(Error::Precision(format!(
            "working precision must be between 16 and 4096 decimal digits, got {precision}"
        )));
    }
    Ok(())
}

/// `Σ_{i>=1} s_i β^{-i}` for an eventually periodic digit sequence, summing
/// the periodic tail as a geometric series.
pub fn series_value(seq: &DigitSequence, beta: &Real) -> Real {
    let precision = beta.precision();
    let one = int(1, precision);
    let inv = &one / beta;
    let mut acc = int(0, precision);
    let mut scale = one.clone();
    for &t in &seq.preperiod {
        scale = &scale * &inv;
        acc += &scale * int(t as i64, precision);
    }
    let mut block = int(0, precision);
    let mut block_scale = one.clone();
    for &t in &seq.period {
        block_scale = &block_scale * &inv;
        block += &block_scale * int(t as i64, precision);
    }
    // β^{-m} · block / (1 - β^{-p})
    acc + scale * block / (one - block_scale)
}

/// `Σ t_i β^{-i}`; equals 1 for the Rényi expansion of β.
pub fn expansion_sum(renyi: &RenyiExpansion, beta: &BetaValue) -> Real {
    series_value(renyi.digits(), beta.value())
}

/// Gap lengths `Δ_k = Σ_{i>=1} t_{i+k} β^{-i}` between consecutive β-integers.
#[derive(Clone, Debug)]
pub struct GapDistances {
    values: Vec<Real>,
}

impl GapDistances {
    pub fn values(&self) -> &[Real] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Index of the `Δ_k` nearest to `gap`, if it is within `tolerance`.
    pub fn classify(&self, gap: &Real, tolerance: &Real) -> Option<usize> {
        let (k, dist) = self
            .values
            .iter()
            .map(|d| (gap - d).abs())
            .enumerate()
            .min_by(|x, y| x.1.cmp(&y.1))?;
        (dist <= *tolerance).then_some(k)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(to_f64).collect()
    }
}

/// `Δ_0 … Δ_{n-1}` with `n = m + p` (or `m` for a finite expansion).
pub fn gap_distances(renyi: &RenyiExpansion, beta: &BetaValue) -> GapDistances {
    let values = (0..renyi.gap_count())
        .map(|k| series_value(&renyi.digits().shifted(k), beta.value()))
        .collect();
    GapDistances { values }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: &Real, y: f64, tol: f64) -> bool {
        (to_f64(x) - y).abs() < tol
    }

    #[test]
    fn quadratic_beta_values() {
        let q = |a, b| beta_of(QuadraticParams::new(a, b).unwrap(), 64).unwrap();
        // x² - 4x + 2
        assert!(close(q(3, 1).value(), 2.0 + 2f64.sqrt(), 1e-14));
        // x² - 3x + 1
        assert!(close(q(2, 1).value(), (3.0 + 5f64.sqrt()) / 2.0, 1e-14));
        // x² - 4x + 1
        assert!(close(q(3, 2).value(), 2.0 + 3f64.sqrt(), 1e-14));
        assert_eq!(q(3, 1).value().precision(), 64);
        assert_eq!(q(3, 1).max_digit(), 3);
    }

    #[test]
    fn quadratic_root_satisfies_polynomial() {
        for params in QuadraticParams::grid(8) {
            let beta = beta_of(params, 64).unwrap();
            let x = beta.value();
            let (a, b) = (params.a() as i64, params.b() as i64);
            let poly = x * x - int(a + 1, 64) * x + int(a - b, 64);
            assert!(poly.abs() < pow10(-50, 64), "{params}");
        }
    }

    #[test]
    fn renyi_sum_is_one() {
        for params in QuadraticParams::grid(8) {
            let renyi = RenyiExpansion::quadratic(params);
            let beta = beta_of(params, 64).unwrap();
            let err = (expansion_sum(&renyi, &beta) - int(1, 64)).abs();
            assert!(err < half_precision_tolerance(64));
        }
    }

    #[test]
    fn bisection_matches_closed_form() {
        let renyi: RenyiExpansion = "3 1 (2)".parse().unwrap();
        let beta = beta_from_renyi(&renyi, 40).unwrap();
        assert!(beta.exact().is_none());
        let err = (expansion_sum(&renyi, &beta) - int(1, 40)).abs();
        assert!(err < half_precision_tolerance(40));

        // non-minimal quadratic input still takes the exact route
        let r2: RenyiExpansion = "4 1 (1)".parse().unwrap();
        let b2 = beta_from_renyi(&r2, 64).unwrap();
        assert_eq!(
            b2.quadratic_params(),
            Some(QuadraticParams::new(4, 1).unwrap())
        );
    }

    #[test]
    fn gap_values_for_three_one() {
        let params = QuadraticParams::new(3, 1).unwrap();
        let beta = beta_of(params, 64).unwrap();
        let gaps = gap_distances(&RenyiExpansion::quadratic(params), &beta);
        assert_eq!(gaps.len(), 2);
        assert!((&gaps.values()[0] - int(1, 64)).abs() < half_precision_tolerance(64));
        // Δ_1 = b/(β-1) = √2 - 1
        assert!(close(&gaps.values()[1], 2f64.sqrt() - 1.0, 1e-14));
    }

    #[test]
    fn gaps_are_decreasing_for_quadratic_grid() {
        for params in QuadraticParams::grid(10) {
            let beta = beta_of(params, 64).unwrap();
            let gaps = gap_distances(&RenyiExpansion::quadratic(params), &beta);
            assert!(gaps.values()[1] < gaps.values()[0]);
            assert!(gaps.values()[1] > int(0, 64));
        }
    }

    #[test]
    fn precision_bounds() {
        let p = QuadraticParams::new(3, 1).unwrap();
        assert!(matches!(beta_of(p, 4), Err(Error::Precision(_))));
    }
}
