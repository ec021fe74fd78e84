use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalars::{Rational, ScalarSeries};

/// Normal-ordered phase-space word x^a t^b dx^c dt^d (coordinates left,
/// derivatives right). The two coordinate/derivative pairs commute with
/// each other; [dx, x] = [dt, t] = 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpMonomial {
    pub x: u32,
    pub t: u32,
    pub dx: u32,
    pub dt: u32,
}

impl OpMonomial {
    pub const UNIT: OpMonomial = OpMonomial { x: 0, t: 0, dx: 0, dt: 0 };

    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        for (sym, e) in [("x", self.x), ("t", self.t), ("dx", self.dx), ("dt", self.dt)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_string()),
                k => parts.push(format!("{sym}^{k}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut out = Rational::one();
    for i in 0..k {
        out = &out * &Rational::new((n - i) as i64, (i + 1) as i64);
    }
    out
}

/// i! C(c, i) C(a, i): the count of ways i derivative legs contract onto
/// i coordinate legs when commuting d^c past x^a.
fn contraction_weight(c: u32, a: u32, i: u32) -> Rational {
    let mut fact = Rational::one();
    for j in 2..=i {
        fact = &fact * &Rational::from_int(j as i64);
    }
    &(&binomial(c, i) * &binomial(a, i)) * &fact
}

/// Differential-difference operator on the (x, t) plane: a finite sum of
/// normal-ordered phase-space words with truncated tau-series coefficients.
/// Shift operators like e^{tau dt} live here as their expanded series.
#[derive(Clone, PartialEq, Eq)]
pub struct PhaseSpaceOperator {
    order: u32,
    terms: BTreeMap<OpMonomial, ScalarSeries>,
}

impl PhaseSpaceOperator {
    pub fn zero(order: u32) -> Self {
        PhaseSpaceOperator { order, terms: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::from_term(OpMonomial::UNIT, ScalarSeries::one(order))
    }

    pub fn from_term(m: OpMonomial, coeff: ScalarSeries) -> Self {
        let mut op = Self::zero(coeff.order());
        op.add_term(m, coeff);
        op
    }

    pub fn coordinate_x(order: u32) -> Self {
        Self::from_term(OpMonomial { x: 1, ..OpMonomial::UNIT }, ScalarSeries::one(order))
    }

    pub fn coordinate_t(order: u32) -> Self {
        Self::from_term(OpMonomial { t: 1, ..OpMonomial::UNIT }, ScalarSeries::one(order))
    }

    pub fn derivative_x(order: u32) -> Self {
        Self::from_term(OpMonomial { dx: 1, ..OpMonomial::UNIT }, ScalarSeries::one(order))
    }

    pub fn derivative_t(order: u32) -> Self {
        Self::from_term(OpMonomial { dt: 1, ..OpMonomial::UNIT }, ScalarSeries::one(order))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OpMonomial, &ScalarSeries)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: OpMonomial, coeff: ScalarSeries) {
        if coeff.order() < self.order {
            let order = coeff.order();
            self.truncate_in_place(order);
        }
        let coeff = coeff.truncate(self.order);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn truncate(&self, order: u32) -> Self {
        let mut out = self.clone();
        out.truncate_in_place(order);
        out
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero(self.order);
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c.scale(by))).collect();
        PhaseSpaceOperator { order: self.order, terms }
    }

    pub fn scale_series(&self, by: &ScalarSeries) -> Self {
        let order = self.order.min(by.order());
        let by = by.truncate(order);
        let mut out = Self::zero(order);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.truncate(order) * &by);
        }
        out
    }

    pub fn mul_tau_pow(&self, k: u32) -> Self {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            out.add_term(*m, c.mul_tau_pow(k));
        }
        out
    }

    /// Operator product, normal ordering derivative legs past coordinate
    /// legs pairwise (x with dx, t with dt; the pairs are independent).
    pub fn multiply(&self, rhs: &PhaseSpaceOperator) -> PhaseSpaceOperator {
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(order);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let coeff = &ca.truncate(order) * &cb.truncate(order);
                if coeff.is_zero() {
                    continue;
                }
                for i in 0..=a.dx.min(b.x) {
                    let wx = contraction_weight(a.dx, b.x, i);
                    for j in 0..=a.dt.min(b.t) {
                        let w = &wx * &contraction_weight(a.dt, b.t, j);
                        if w.is_zero() {
                            continue;
                        }
                        let m = OpMonomial {
                            x: a.x + b.x - i,
                            t: a.t + b.t - j,
                            dx: a.dx + b.dx - i,
                            dt: a.dt + b.dt - j,
                        };
                        out.add_term(m, coeff.scale(&w));
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &PhaseSpaceOperator) -> PhaseSpaceOperator {
        &self.multiply(rhs) - &rhs.multiply(self)
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in &self.terms {
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
                if *m == OpMonomial::UNIT {
                    out.push_str(&coeff);
                } else if coeff == "1" {
                    out.push_str(&m.display());
                } else {
                    out.push_str(&coeff);
                    out.push(' ');
                    out.push_str(&m.display());
                }
            }
        }
        out
    }
}

impl Add for &PhaseSpaceOperator {
    type Output = PhaseSpaceOperator;
    fn add(self, rhs: &PhaseSpaceOperator) -> PhaseSpaceOperator {
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.truncate(order));
        }
        out
    }
}

impl Sub for &PhaseSpaceOperator {
    type Output = PhaseSpaceOperator;
    fn sub(self, rhs: &PhaseSpaceOperator) -> PhaseSpaceOperator {
        self + &(-rhs)
    }
}

impl Neg for &PhaseSpaceOperator {
    type Output = PhaseSpaceOperator;
    fn neg(self) -> PhaseSpaceOperator {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        PhaseSpaceOperator { order: self.order, terms }
    }
}

impl fmt::Debug for PhaseSpaceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod tau^{})", self.display(), self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_commutators() {
        let order = 2;
        let x = PhaseSpaceOperator::coordinate_x(order);
        let t = PhaseSpaceOperator::coordinate_t(order);
        let dx = PhaseSpaceOperator::derivative_x(order);
        let dt = PhaseSpaceOperator::derivative_t(order);
        assert_eq!(dx.commutator(&x), PhaseSpaceOperator::one(order));
        assert_eq!(dt.commutator(&t), PhaseSpaceOperator::one(order));
        assert!(dx.commutator(&t).is_zero());
        assert!(dt.commutator(&x).is_zero());
        assert!(x.commutator(&t).is_zero());
        assert!(dx.commutator(&dt).is_zero());
    }

    #[test]
    fn leibniz_weights() {
        // dx^2 x^2 = x^2 dx^2 + 4 x dx + 2.
        let order = 1;
        let d2 = PhaseSpaceOperator::from_term(
            OpMonomial { dx: 2, ..OpMonomial::UNIT },
            ScalarSeries::one(order),
        );
        let x2 = PhaseSpaceOperator::from_term(
            OpMonomial { x: 2, ..OpMonomial::UNIT },
            ScalarSeries::one(order),
        );
        let got = d2.multiply(&x2);
        let mut expect = PhaseSpaceOperator::from_term(
            OpMonomial { x: 2, dx: 2, ..OpMonomial::UNIT },
            ScalarSeries::one(order),
        );
        expect.add_term(
            OpMonomial { x: 1, dx: 1, ..OpMonomial::UNIT },
            ScalarSeries::constant(Rational::from_int(4), order),
        );
        expect.add_term(OpMonomial::UNIT, ScalarSeries::constant(Rational::from_int(2), order));
        assert_eq!(got, expect);
    }

    #[test]
    fn display_reads_naturally() {
        let mut op = PhaseSpaceOperator::derivative_t(2);
        op.add_term(
            OpMonomial { x: 1, dx: 1, ..OpMonomial::UNIT },
            ScalarSeries::monomial(1, 0, Rational::from_int(-1), 2),
        );
        assert_eq!(op.display(), "dt - tau x dx");
    }
}
