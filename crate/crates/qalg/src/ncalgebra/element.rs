use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalars::{Rational, ScalarError, ScalarSeries};

/// Normal-ordered product of generators, stored as an exponent vector over
/// the algebra's generator ranks. The vector length is the generator count;
/// ordering is graded lexicographic so that low-degree words come first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(ngens: usize) -> Self {
        Monomial(vec![0; ngens])
    }

    pub fn generator(rank: usize, ngens: usize) -> Self {
        let mut exps = vec![0; ngens];
        exps[rank] = 1;
        Monomial(exps)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn ngens(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, rank: usize) -> u32 {
        self.0[rank]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Ranks with nonzero exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(r, _)| r)
    }

    /// The word spelled out letter by letter in rank order.
    pub fn letters(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.degree() as usize);
        for (rank, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                word.push(rank);
            }
        }
        word
    }

    /// Exponentwise product, valid only when every letter of `self` ranks
    /// at or below every letter of `rhs` (so no reordering is needed).
    pub fn concat_ordered(&self, rhs: &Monomial) -> Option<Monomial> {
        let lhs_max = self.support().max();
        let rhs_min = rhs.support().min();
        match (lhs_max, rhs_min) {
            (Some(a), Some(b)) if a > b => None,
            _ => {
                let exps = self.0.iter().zip(&rhs.0).map(|(x, y)| x + y).collect();
                Some(Monomial(exps))
            }
        }
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_unit() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (rank, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[rank].clone()),
                k => parts.push(format!("{}^{}", names[rank], k)),
            }
        }
        parts.join(" ")
    }
}

impl Ord for Monomial {
    // Graded order; among equal degrees the word using earlier ranks more
    // heavily comes first, so single generators sort in PBW rank order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.0)
    }
}

/// Element of the (truncated) enveloping algebra: a finite sum of
/// normal-ordered monomials with `ScalarSeries` coefficients, all tracked
/// at one truncation order.
///
/// Binary operations harmonize mixed orders by truncating to the smaller
/// window; this loses no information that the smaller operand had.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    ngens: usize,
    order: u32,
    terms: BTreeMap<Monomial, ScalarSeries>,
}

impl AlgebraElement {
    pub fn zero(ngens: usize, order: u32) -> Self {
        AlgebraElement { ngens, order, terms: BTreeMap::new() }
    }

    pub fn one(ngens: usize, order: u32) -> Self {
        Self::from_term(Monomial::unit(ngens), ScalarSeries::one(order))
    }

    pub fn generator(rank: usize, ngens: usize, order: u32) -> Self {
        Self::from_term(Monomial::generator(rank, ngens), ScalarSeries::one(order))
    }

    pub fn constant(value: Rational, ngens: usize, order: u32) -> Self {
        Self::from_term(Monomial::unit(ngens), ScalarSeries::constant(value, order))
    }

    pub fn from_term(monomial: Monomial, coeff: ScalarSeries) -> Self {
        let mut e = Self::zero(monomial.ngens(), coeff.order());
        e.add_term(monomial, coeff);
        e
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &ScalarSeries)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> ScalarSeries {
        self.terms.get(m).cloned().unwrap_or_else(|| ScalarSeries::zero(self.order))
    }

    /// Accumulate one term, truncating the whole element down if the new
    /// coefficient carries less precision.
    pub fn add_term(&mut self, monomial: Monomial, coeff: ScalarSeries) {
        assert_eq!(monomial.ngens(), self.ngens, "generator arity mismatch");
        if coeff.order() < self.order {
            let order = coeff.order();
            self.truncate_in_place(order);
        }
        let coeff = coeff.truncate(self.order);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
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
            return Self::zero(self.ngens, self.order);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.scale(by))).collect();
        AlgebraElement { ngens: self.ngens, order: self.order, terms }
    }

    /// Coefficientwise product with a scalar series (orders harmonized).
    pub fn scale_series(&self, by: &ScalarSeries) -> Self {
        let order = self.order.min(by.order());
        let by = by.truncate(order);
        let mut out = Self::zero(self.ngens, order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.truncate(order) * &by);
        }
        out
    }

    pub fn mul_tau_pow(&self, k: u32) -> Self {
        let mut out = Self::zero(self.ngens, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul_tau_pow(k));
        }
        out
    }

    /// Exact division of every coefficient by tau; the element's order
    /// drops by one. Fails when any coefficient has a tau^0 band.
    pub fn div_tau(&self) -> Result<Self, ScalarError> {
        let mut out = Self::zero(self.ngens, self.order.saturating_sub(1));
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.div_tau()?);
        }
        Ok(out)
    }

    /// Smallest tau order over all coefficients.
    pub fn min_tau_order(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.min_tau_order()).min()
    }

    pub fn is_eps_free(&self) -> bool {
        self.terms.values().all(|c| c.is_eps_free())
    }

    /// Apply a coefficient map; used by contraction substitutions.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Monomial, &ScalarSeries) -> ScalarSeries) -> Self {
        let mut out = Self::zero(self.ngens, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(m, c));
        }
        out
    }

    /// First term (in monomial order) whose support leaves `allowed`.
    pub fn first_term_outside(&self, allowed: &[usize]) -> Option<(&Monomial, &ScalarSeries)> {
        self.terms
            .iter()
            .find(|(m, _)| m.support().any(|r| !allowed.contains(&r)))
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        // Flatten to (monomial, tau, eps, coeff) and print in monomial-major
        // order so low-degree words lead.
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
                if m.is_unit() {
                    out.push_str(&coeff);
                } else if coeff == "1" {
                    out.push_str(&m.display(names));
                } else {
                    out.push_str(&coeff);
                    out.push(' ');
                    out.push_str(&m.display(names));
                }
            }
        }
        out
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.ngens, rhs.ngens, "generator arity mismatch");
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.truncate(order));
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        AlgebraElement { ngens: self.ngens, order: self.order, terms }
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.ngens).map(|r| format!("g{r}")).collect();
        write!(f, "{} (mod tau^{})", self.display(&names), self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_order_is_graded() {
        let unit = Monomial::unit(3);
        let g0 = Monomial::generator(0, 3);
        let g2 = Monomial::generator(2, 3);
        let g0g2 = g0.concat_ordered(&g2).unwrap();
        assert!(unit < g0);
        assert!(g0 < g2);
        assert!(g2 < g0g2);
    }

    #[test]
    fn concat_ordered_rejects_inversions() {
        let g0 = Monomial::generator(0, 3);
        let g2 = Monomial::generator(2, 3);
        assert!(g2.concat_ordered(&g0).is_none());
        assert_eq!(g0.concat_ordered(&g2).unwrap().letters(), vec![0, 2]);
    }

    #[test]
    fn add_cancels_and_harmonizes_orders() {
        let g = AlgebraElement::generator(1, 2, 5);
        let diff = &g - &g.truncate(3);
        assert!(diff.is_zero());
        assert_eq!(diff.order(), 3);
    }

    #[test]
    fn display_flattens_series_coefficients() {
        let names = vec!["D".to_string(), "H".to_string()];
        let mut e = AlgebraElement::generator(1, 2, 3);
        e.add_term(
            Monomial::from_exponents(vec![0, 2]),
            ScalarSeries::monomial(1, 0, Rational::new(1, 2), 3),
        );
        assert_eq!(e.display(&names), "H + 1/2 tau H^2");
    }
}
