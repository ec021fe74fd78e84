use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use super::Rational;

/// Scalar errors. Mismatched truncation orders in ring operations are a
/// usage bug and assert instead; these are the recoverable cases.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("series has a term of tau-order zero; cannot divide by tau")]
    NotDivisibleByTau,
    #[error("exp requires every term to carry tau (constant term {0} found)")]
    ExpOfConstantTerm(String),
}

/// Terms that survive as eps^k with k < 0, reported when an eps -> 0 limit
/// does not exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsDivergence {
    /// (tau exponent, eps exponent, coefficient) of each divergent term.
    pub terms: Vec<(u32, i32, Rational)>,
}

impl fmt::Display for EpsDivergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, e, q) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", term_display(q, *t, *e))?;
        }
        Ok(())
    }
}

/// Formal power series in `tau`, Laurent in `eps`, truncated at a fixed
/// tau order: terms with tau exponent above `order` are identically
/// dropped, so every stored series is exact modulo tau^(order+1).
///
/// Invariants: no zero coefficients are stored; every tau exponent is
/// <= `order`. The eps exponents are unconstrained integers (eps only
/// appears transiently, during contractions).
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarSeries {
    order: u32,
    terms: BTreeMap<(u32, i32), Rational>,
}

impl ScalarSeries {
    pub fn zero(order: u32) -> Self {
        ScalarSeries { order, terms: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(value: Rational, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.insert(0, 0, value);
        s
    }

    /// tau^k, or zero when k exceeds the truncation order.
    pub fn tau_pow(k: u32, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.insert(k, 0, Rational::one());
        s
    }

    pub fn monomial(tau: u32, eps: i32, coeff: Rational, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.insert(tau, eps, coeff);
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    /// Coefficient of tau^t eps^e (zero when absent).
    pub fn coeff(&self, tau: u32, eps: i32) -> Rational {
        self.terms.get(&(tau, eps)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i32, &Rational)> {
        self.terms.iter().map(|(&(t, e), q)| (t, e, q))
    }

    /// Smallest tau exponent carrying a nonzero coefficient.
    pub fn min_tau_order(&self) -> Option<u32> {
        self.terms.keys().map(|&(t, _)| t).min()
    }

    /// True when no eps power appears (the common, contraction-free case).
    pub fn is_eps_free(&self) -> bool {
        self.terms.keys().all(|&(_, e)| e == 0)
    }

    fn insert(&mut self, tau: u32, eps: i32, coeff: Rational) {
        if tau > self.order || coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((tau, eps)).or_insert_with(Rational::zero);
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.remove(&(tau, eps));
        }
    }

    /// Lower the truncation window. Raising it would invent unknown zero
    /// coefficients, so that direction asserts.
    pub fn truncate(&self, order: u32) -> Self {
        assert!(
            order <= self.order,
            "cannot raise truncation order {} to {}",
            self.order,
            order
        );
        let terms = self
            .terms
            .iter()
            .filter(|(&(t, _), _)| t <= order)
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        ScalarSeries { order, terms }
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero(self.order);
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, v * by)).collect();
        ScalarSeries { order: self.order, terms }
    }

    /// Multiply by tau^k (shifting exponents; terms leaving the window drop).
    pub fn mul_tau_pow(&self, k: u32) -> Self {
        let mut out = Self::zero(self.order);
        for (&(t, e), q) in &self.terms {
            out.insert(t + k, e, q.clone());
        }
        out
    }

    /// Multiply by eps^k (k may be negative).
    pub fn mul_eps_pow(&self, k: i32) -> Self {
        let terms = self.terms.iter().map(|(&(t, e), q)| ((t, e + k), q.clone())).collect();
        ScalarSeries { order: self.order, terms }
    }

    /// Substitute tau -> eps^p * tau, the parameter leg of a contraction.
    pub fn subst_tau_eps(&self, p: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(t, e), q)| ((t, e + p * t as i32), q.clone()))
            .collect();
        ScalarSeries { order: self.order, terms }
    }

    /// Keep only the tau^0 band, preserving the truncation order.
    pub fn tau_zero_part(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(&(t, _), _)| t == 0)
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        ScalarSeries { order: self.order, terms }
    }

    /// eps -> 0 limit: positive eps powers vanish, eps^0 survives, negative
    /// powers are reported as a structured divergence.
    pub fn eps_limit(&self) -> Result<Self, EpsDivergence> {
        let divergent: Vec<_> = self
            .terms
            .iter()
            .filter(|(&(_, e), _)| e < 0)
            .map(|(&(t, e), q)| (t, e, q.clone()))
            .collect();
        if !divergent.is_empty() {
            return Err(EpsDivergence { terms: divergent });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(&(_, e), _)| e == 0)
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        Ok(ScalarSeries { order: self.order, terms })
    }

    /// Exact division by tau. Every term must carry tau >= 1; the result is
    /// tracked at one order lower because the dropped tau^(order+1) band
    /// would have landed at tau^order.
    pub fn div_tau(&self) -> Result<Self, ScalarError> {
        if self.terms.keys().any(|&(t, _)| t == 0) {
            return Err(ScalarError::NotDivisibleByTau);
        }
        let order = self.order.saturating_sub(1);
        let terms = self.terms.iter().map(|(&(t, e), q)| ((t - 1, e), q.clone())).collect();
        Ok(ScalarSeries { order, terms })
    }

    /// exp of a series with no constant term. Terminates because each power
    /// raises the minimum tau order by at least one.
    pub fn exp(&self) -> Result<Self, ScalarError> {
        if let Some(q) = self.terms.get(&(0, 0)) {
            return Err(ScalarError::ExpOfConstantTerm(q.to_string()));
        }
        if self.terms.keys().any(|&(t, _)| t == 0) {
            // eps-only terms never gain tau under powers, so the sum below
            // would not terminate; exp is only used on tau-graded input.
            return Err(ScalarError::ExpOfConstantTerm("eps term".into()));
        }
        let mut out = Self::one(self.order);
        let mut power = Self::one(self.order);
        for k in 1..=self.order {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            out = &out + &power.scale(&Rational::inv_factorial(k));
        }
        Ok(out)
    }
}

impl Add for &ScalarSeries {
    type Output = ScalarSeries;
    fn add(self, rhs: &ScalarSeries) -> ScalarSeries {
        assert_eq!(self.order, rhs.order, "series truncation order mismatch");
        let mut out = self.clone();
        for (&(t, e), q) in &rhs.terms {
            out.insert(t, e, q.clone());
        }
        out
    }
}

impl Sub for &ScalarSeries {
    type Output = ScalarSeries;
    fn sub(self, rhs: &ScalarSeries) -> ScalarSeries {
        self + &(-rhs)
    }
}

impl Neg for &ScalarSeries {
    type Output = ScalarSeries;
    fn neg(self) -> ScalarSeries {
        let terms = self.terms.iter().map(|(k, v)| (*k, -v)).collect();
        ScalarSeries { order: self.order, terms }
    }
}

impl Mul for &ScalarSeries {
    type Output = ScalarSeries;
    fn mul(self, rhs: &ScalarSeries) -> ScalarSeries {
        assert_eq!(self.order, rhs.order, "series truncation order mismatch");
        let mut out = ScalarSeries::zero(self.order);
        for (&(t1, e1), q1) in &self.terms {
            for (&(t2, e2), q2) in &rhs.terms {
                if t1 + t2 > self.order {
                    continue;
                }
                out.insert(t1 + t2, e1 + e2, q1 * q2);
            }
        }
        out
    }
}

/// Render one `q * tau^t * eps^e` factor the way humans write it.
pub fn term_display(q: &Rational, tau: u32, eps: i32) -> String {
    let mut parts = Vec::new();
    if !q.is_one() || (tau == 0 && eps == 0) {
        parts.push(q.to_string());
    }
    match tau {
        0 => {}
        1 => parts.push("tau".into()),
        k => parts.push(format!("tau^{k}")),
    }
    match eps {
        0 => {}
        1 => parts.push("eps".into()),
        k => parts.push(format!("eps^{k}")),
    }
    parts.join(" ")
}

impl fmt::Display for ScalarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(t, e), q) in &self.terms {
            if first {
                if q.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if q.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", term_display(&q.abs(), t, e))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ScalarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod tau^{})", self, self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(order: u32) -> ScalarSeries {
        ScalarSeries::tau_pow(1, order)
    }

    #[test]
    fn product_truncates_at_order() {
        // (1 + tau)(1 - tau) at order 1 keeps only the constant term.
        let one = ScalarSeries::one(1);
        let a = &one + &tau(1);
        let b = &one - &tau(1);
        assert_eq!(&a * &b, ScalarSeries::one(1));

        // At order 2 the tau^2 term is visible.
        let one = ScalarSeries::one(2);
        let a = &one + &tau(2);
        let b = &one - &tau(2);
        let expect = &one - &ScalarSeries::tau_pow(2, 2);
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn eps_powers_cancel_in_products() {
        let a = ScalarSeries::monomial(1, -1, Rational::one(), 4);
        let b = ScalarSeries::monomial(1, 1, Rational::one(), 4);
        assert_eq!(&a * &b, ScalarSeries::tau_pow(2, 4));
    }

    #[test]
    fn exp_small_window() {
        let e = tau(2).exp().unwrap();
        let mut expect = ScalarSeries::one(2);
        expect = &expect + &tau(2);
        expect = &expect + &ScalarSeries::monomial(2, 0, Rational::new(1, 2), 2);
        assert_eq!(e, expect);
    }

    #[test]
    fn exp_rejects_constant_terms() {
        let s = ScalarSeries::one(3);
        assert_eq!(s.exp(), Err(ScalarError::ExpOfConstantTerm("1".into())));
        let eps_only = ScalarSeries::monomial(0, 1, Rational::one(), 3);
        assert!(eps_only.exp().is_err());
    }

    #[test]
    fn div_tau_shifts_and_lowers_order() {
        // (exp(tau) - 1)/tau at working order 3 = 1 + tau/2 + tau^2/6,
        // tracked at order 2.
        let e = tau(3).exp().unwrap();
        let shifted = (&e - &ScalarSeries::one(3)).div_tau().unwrap();
        assert_eq!(shifted.order(), 2);
        let mut expect = ScalarSeries::one(2);
        expect = &expect + &ScalarSeries::monomial(1, 0, Rational::new(1, 2), 2);
        expect = &expect + &ScalarSeries::monomial(2, 0, Rational::new(1, 6), 2);
        assert_eq!(shifted, expect);
    }

    #[test]
    fn div_tau_rejects_constant_band() {
        assert_eq!(ScalarSeries::one(3).div_tau(), Err(ScalarError::NotDivisibleByTau));
        let eps_term = ScalarSeries::monomial(0, 2, Rational::one(), 3);
        assert_eq!(eps_term.div_tau(), Err(ScalarError::NotDivisibleByTau));
    }

    #[test]
    fn eps_limit_drops_positive_and_reports_negative() {
        let mut s = ScalarSeries::one(3);
        s = &s + &ScalarSeries::monomial(1, 2, Rational::one(), 3);
        assert_eq!(s.eps_limit().unwrap(), ScalarSeries::one(3));

        let bad = ScalarSeries::monomial(2, -1, Rational::new(3, 2), 3);
        let err = bad.eps_limit().unwrap_err();
        assert_eq!(err.terms, vec![(2, -1, Rational::new(3, 2))]);
        assert_eq!(err.to_string(), "3/2 tau^2 eps^-1");
    }

    #[test]
    fn subst_tau_eps_tags_each_tau_power() {
        let s = &tau(3) + &ScalarSeries::tau_pow(3, 3);
        let tagged = s.subst_tau_eps(1);
        assert_eq!(tagged.coeff(1, 1), Rational::one());
        assert_eq!(tagged.coeff(3, 3), Rational::one());
        // p = 0 leaves the series untouched.
        assert_eq!(s.subst_tau_eps(0), s);
    }

    #[test]
    fn display_is_human_oriented() {
        let mut s = ScalarSeries::one(4);
        s = &s - &ScalarSeries::monomial(2, 0, Rational::new(1, 2), 4);
        s = &s + &ScalarSeries::monomial(3, -1, Rational::from_int(2), 4);
        assert_eq!(s.to_string(), "1 - 1/2 tau^2 + 2 tau^3 eps^-1");
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn mixed_order_addition_is_a_usage_bug() {
        let _ = &ScalarSeries::one(2) + &ScalarSeries::one(3);
    }
}
