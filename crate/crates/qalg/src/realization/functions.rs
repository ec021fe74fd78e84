use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::operator::{OpMonomial, PhaseSpaceOperator};
use super::RealizationError;
use crate::scalars::{Rational, ScalarSeries};

/// Polynomial in x and t with truncated tau-series coefficients; the
/// domain that difference-differential operators act on.
#[derive(Clone, PartialEq, Eq)]
pub struct PolynomialFunction {
    order: u32,
    terms: BTreeMap<(u32, u32), ScalarSeries>,
}

impl PolynomialFunction {
    pub fn zero(order: u32) -> Self {
        PolynomialFunction { order, terms: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::monomial(0, 0, Rational::one(), order)
    }

    pub fn x(order: u32) -> Self {
        Self::monomial(1, 0, Rational::one(), order)
    }

    pub fn t(order: u32) -> Self {
        Self::monomial(0, 1, Rational::one(), order)
    }

    /// c x^a t^b.
    pub fn monomial(a: u32, b: u32, c: Rational, order: u32) -> Self {
        let mut f = Self::zero(order);
        f.add_term(a, b, ScalarSeries::constant(c, order));
        f
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, &ScalarSeries)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn t_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, a: u32, b: u32, coeff: ScalarSeries) {
        if coeff.order() < self.order {
            let order = coeff.order();
            self.truncate_in_place(order);
        }
        let coeff = coeff.truncate(self.order);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn truncate_in_place(&mut self, order: u32) {
        if order >= self.order {
            return;
        }
        self.order = order;
        let old = std::mem::take(&mut self.terms);
        for (m, c) in old {
            let t = c.truncate(order);
            if !t.is_zero() {
                self.terms.insert(m, t);
            }
        }
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero(self.order);
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c.scale(by))).collect();
        PolynomialFunction { order: self.order, terms }
    }

    pub fn scale_series(&self, by: &ScalarSeries) -> Self {
        let order = self.order.min(by.order());
        let by = by.truncate(order);
        let mut out = Self::zero(order);
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, &c.truncate(order) * &by);
        }
        out
    }

    /// Commutative polynomial product.
    pub fn multiply(&self, rhs: &PolynomialFunction) -> PolynomialFunction {
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(order);
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, &c1.truncate(order) * &c2.truncate(order));
            }
        }
        out
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            for (t, e, q) in c.iter() {
                if first {
                    if q.is_negative() {
                        out.push('-');
                    }
                    first = false;
                } else if q.is_negative() {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                let coeff = crate::scalars::series_term_display(&q.abs(), t, e);
                let mono = OpMonomial { x: a, t: b, dx: 0, dt: 0 };
                if mono == OpMonomial::UNIT {
                    out.push_str(&coeff);
                } else if coeff == "1" {
                    out.push_str(&mono.display());
                } else {
                    out.push_str(&coeff);
                    out.push(' ');
                    out.push_str(&mono.display());
                }
            }
        }
        out
    }
}

impl Add for &PolynomialFunction {
    type Output = PolynomialFunction;
    fn add(self, rhs: &PolynomialFunction) -> PolynomialFunction {
        let order = self.order.min(rhs.order);
        let mut out = self.clone();
        out.truncate_in_place(order);
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.truncate(order));
        }
        out
    }
}

impl Sub for &PolynomialFunction {
    type Output = PolynomialFunction;
    fn sub(self, rhs: &PolynomialFunction) -> PolynomialFunction {
        self + &(-rhs)
    }
}

impl Neg for &PolynomialFunction {
    type Output = PolynomialFunction;
    fn neg(self) -> PolynomialFunction {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        PolynomialFunction { order: self.order, terms }
    }
}

impl fmt::Debug for PolynomialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod tau^{})", self.display(), self.order + 1)
    }
}

/// n (n-1) ... (n-k+1).
fn falling(n: u32, k: u32) -> Rational {
    let mut out = Rational::one();
    for i in 0..k {
        out = &out * &Rational::from_int((n - i) as i64);
    }
    out
}

/// Act with an operator on a polynomial. Shift operators are stored as
/// truncated series in tau dt, so the action is only faithful when every
/// dt power that could hit a t-monomial is present: that needs the
/// operator's truncation order to be at least the t-degree of f.
pub fn apply(
    op: &PhaseSpaceOperator,
    f: &PolynomialFunction,
) -> Result<PolynomialFunction, RealizationError> {
    let t_degree = f.t_degree();
    if t_degree > op.order() {
        return Err(RealizationError::TruncationTooCoarse { t_degree, order: op.order() });
    }
    let order = op.order().min(f.order());
    let mut out = PolynomialFunction::zero(order);
    for (m, oc) in op.iter() {
        for (a, b, fc) in f.iter() {
            if m.dx > a || m.dt > b {
                continue;
            }
            let w = &falling(a, m.dx) * &falling(b, m.dt);
            let coeff = (&oc.truncate(order) * &fc.truncate(order)).scale(&w);
            out.add_term(a - m.dx + m.x, b - m.dt + m.t, coeff);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_acts_by_falling_factorials() {
        let order = 2;
        let d2 = PhaseSpaceOperator::from_term(
            OpMonomial { dx: 2, ..OpMonomial::UNIT },
            ScalarSeries::one(order),
        );
        // x^3 t -> 6 x t
        let f = PolynomialFunction::monomial(3, 1, Rational::one(), order);
        let got = apply(&d2, &f).unwrap();
        assert_eq!(got, PolynomialFunction::monomial(1, 1, Rational::from_int(6), order));
    }

    #[test]
    fn coarse_truncation_is_rejected() {
        let dt = PhaseSpaceOperator::derivative_t(1);
        let f = PolynomialFunction::monomial(0, 3, Rational::one(), 1);
        match apply(&dt, &f) {
            Err(RealizationError::TruncationTooCoarse { t_degree: 3, order: 1 }) => {}
            other => panic!("expected truncation guard, got {other:?}"),
        }
    }

    #[test]
    fn polynomial_product() {
        let order = 1;
        let xt = PolynomialFunction::x(order).multiply(&PolynomialFunction::t(order));
        assert_eq!(xt, PolynomialFunction::monomial(1, 1, Rational::one(), order));
        let sq = &PolynomialFunction::x(order) + &PolynomialFunction::t(order);
        let sq = sq.multiply(&sq);
        // terms sort by (x-degree, t-degree)
        assert_eq!(sq.display(), "t^2 + 2 x t + x^2");
    }
}
