use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::ncalgebra::{AlgebraElement, AlgebraError, Monomial};
use crate::scalars::{Rational, ScalarSeries};

use crate::ncalgebra::{normal_order_word, BracketMap, Strategy};

/// Element of a tensor power of the enveloping algebra: a sum of slot
/// tuples of normal-ordered monomials with series coefficients. Arity 2
/// carries coproducts and the R-matrix; arity 3 the Yang-Baxter check.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    ngens: usize,
    arity: usize,
    order: u32,
    terms: BTreeMap<Vec<Monomial>, ScalarSeries>,
}

impl TensorElement {
    pub fn zero(ngens: usize, arity: usize, order: u32) -> Self {
        TensorElement { ngens, arity, order, terms: BTreeMap::new() }
    }

    pub fn one(ngens: usize, arity: usize, order: u32) -> Self {
        let mut t = Self::zero(ngens, arity, order);
        t.add_term(vec![Monomial::unit(ngens); arity], ScalarSeries::one(order));
        t
    }

    /// Pure tensor of algebra elements, one per slot.
    pub fn pure(slots: &[&AlgebraElement]) -> Self {
        assert!(!slots.is_empty(), "tensor arity must be positive");
        let ngens = slots[0].ngens();
        let order = slots.iter().map(|e| e.order()).min().unwrap();
        let mut out = Self::zero(ngens, slots.len(), order);
        let mut partial: Vec<(Vec<Monomial>, ScalarSeries)> =
            vec![(Vec::new(), ScalarSeries::one(order))];
        for e in slots {
            assert_eq!(e.ngens(), ngens, "generator arity mismatch");
            let mut next = Vec::new();
            for (tuple, c) in &partial {
                for (m, mc) in e.iter() {
                    let coeff = c * &mc.truncate(order);
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut t = tuple.clone();
                    t.push(m.clone());
                    next.push((t, coeff));
                }
            }
            partial = next;
        }
        for (tuple, c) in partial {
            out.add_term(tuple, c);
        }
        out
    }

    /// `elem` in one slot, units elsewhere.
    pub fn embed(elem: &AlgebraElement, slot: usize, arity: usize) -> Self {
        let mut out = Self::zero(elem.ngens(), arity, elem.order());
        for (m, c) in elem.iter() {
            let mut tuple = vec![Monomial::unit(elem.ngens()); arity];
            tuple[slot] = m.clone();
            out.add_term(tuple, c.clone());
        }
        out
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Monomial>, &ScalarSeries)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, slots: Vec<Monomial>, coeff: ScalarSeries) {
        assert_eq!(slots.len(), self.arity, "tensor arity mismatch");
        if coeff.order() < self.order {
            self.truncate_in_place(coeff.order());
        }
        let coeff = coeff.truncate(self.order);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
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
            return Self::zero(self.ngens, self.arity, self.order);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.scale(by))).collect();
        TensorElement { terms, ..self.clone() }
    }

    pub fn mul_tau_pow(&self, k: u32) -> Self {
        let mut out = Self::zero(self.ngens, self.arity, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul_tau_pow(k));
        }
        out
    }

    /// Coefficientwise product with a scalar series (orders harmonized).
    pub fn scale_series(&self, by: &ScalarSeries) -> Self {
        let order = self.order.min(by.order());
        let by = by.truncate(order);
        let mut out = Self::zero(self.ngens, self.arity, order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.truncate(order) * &by);
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&ScalarSeries) -> ScalarSeries) -> Self {
        let mut out = Self::zero(self.ngens, self.arity, self.order);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn min_tau_order(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.min_tau_order()).min()
    }

    /// Reverse the slot order (arity 2: the opposite coproduct).
    pub fn flip(&self) -> Self {
        let mut out = Self::zero(self.ngens, self.arity, self.order);
        for (m, c) in &self.terms {
            let mut slots = m.clone();
            slots.reverse();
            out.add_term(slots, c.clone());
        }
        out
    }

    /// Place an arity-2 tensor into chosen slots of a wider tensor, units
    /// elsewhere (R12, R13, R23 lifts).
    pub fn lift(&self, positions: (usize, usize), arity: usize) -> Self {
        assert_eq!(self.arity, 2, "lift starts from an arity-2 tensor");
        let mut out = Self::zero(self.ngens, arity, self.order);
        for (m, c) in &self.terms {
            let mut slots = vec![Monomial::unit(self.ngens); arity];
            slots[positions.0] = m[0].clone();
            slots[positions.1] = m[1].clone();
            out.add_term(slots, c.clone());
        }
        out
    }

    /// Arity-1 tensors are plain algebra elements.
    pub fn into_element(self) -> AlgebraElement {
        assert_eq!(self.arity, 1, "into_element needs arity 1");
        let mut out = AlgebraElement::zero(self.ngens, self.order);
        for (m, c) in self.terms {
            out.add_term(m.into_iter().next().unwrap(), c);
        }
        out
    }

    /// First term with any slot factor outside the allowed rank set.
    pub fn first_term_outside(&self, allowed: &[usize]) -> Option<(&Vec<Monomial>, &ScalarSeries)> {
        self.terms
            .iter()
            .find(|(slots, _)| slots.iter().any(|m| m.support().any(|r| !allowed.contains(&r))))
    }

    /// All terms with any slot factor outside the allowed rank set.
    pub fn terms_outside(&self, allowed: &[usize]) -> Self {
        let mut out = Self::zero(self.ngens, self.arity, self.order);
        for (slots, c) in &self.terms {
            if slots.iter().any(|m| m.support().any(|r| !allowed.contains(&r))) {
                out.add_term(slots.clone(), c.clone());
            }
        }
        out
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (slots, c) in &self.terms {
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
                let word = slots
                    .iter()
                    .map(|m| m.display(names))
                    .collect::<Vec<_>>()
                    .join(" (x) ");
                if coeff == "1" {
                    out.push_str(&word);
                } else {
                    out.push_str(&coeff);
                    out.push(' ');
                    out.push_str(&word);
                }
            }
        }
        out
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.ngens, rhs.ngens, "generator arity mismatch");
        assert_eq!(self.arity, rhs.arity, "tensor arity mismatch");
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.truncate(order));
        }
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self + &(-rhs)
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        TensorElement { terms, ..self.clone() }
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.ngens).map(|r| format!("g{r}")).collect();
        write!(f, "{} (mod tau^{})", self.display(&names), self.order + 1)
    }
}

/// Slotwise product: each slot pair is normal ordered independently and the
/// results recombined with the joint coefficient.
pub(crate) fn tensor_multiply_in(
    table: &BracketMap,
    a: &TensorElement,
    b: &TensorElement,
) -> Result<TensorElement, AlgebraError> {
    assert_eq!(a.ngens, b.ngens, "generator arity mismatch");
    assert_eq!(a.arity, b.arity, "tensor arity mismatch");
    let ngens = a.ngens;
    let order = a.order.min(b.order);
    let mut out = TensorElement::zero(ngens, a.arity, order);
    for (sa, ca) in &a.terms {
        for (sb, cb) in &b.terms {
            let base = &ca.truncate(order) * &cb.truncate(order);
            if base.is_zero() {
                continue;
            }
            let mut partial: Vec<(Vec<Monomial>, ScalarSeries)> = vec![(Vec::new(), base)];
            for (ma, mb) in sa.iter().zip(sb) {
                let product = if let Some(m) = ma.concat_ordered(mb) {
                    AlgebraElement::from_term(m, ScalarSeries::one(order))
                } else {
                    let mut word = ma.letters();
                    word.extend(mb.letters());
                    normal_order_word(
                        table,
                        ngens,
                        &word,
                        ScalarSeries::one(order),
                        Strategy::Leftmost,
                    )?
                };
                let mut next = Vec::new();
                for (tuple, c) in &partial {
                    for (m, mc) in product.iter() {
                        let o = c.order().min(mc.order());
                        let coeff = &c.truncate(o) * &mc.truncate(o);
                        if coeff.is_zero() {
                            continue;
                        }
                        let mut t = tuple.clone();
                        t.push(m.clone());
                        next.push((t, coeff));
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for (tuple, c) in partial {
                out.add_term(tuple, c);
            }
        }
    }
    Ok(out)
}

/// exp of a tensor whose coefficients all carry tau >= 1.
pub(crate) fn tensor_exp_in(
    table: &BracketMap,
    a: &TensorElement,
) -> Result<TensorElement, AlgebraError> {
    if let Some(0) = a.min_tau_order() {
        return Err(AlgebraError::ExpNeedsTau(format!("{a:?}")));
    }
    let mut out = TensorElement::one(a.ngens, a.arity, a.order);
    let mut power = out.clone();
    for k in 1..=a.order {
        power = tensor_multiply_in(table, &power, a)?;
        if power.is_zero() {
            break;
        }
        out = &out + &power.scale(&Rational::inv_factorial(k));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalgebra::builtin;

    #[test]
    fn pure_and_embed_agree_on_atoms() {
        let spec = builtin::uso22(2);
        let h = spec.generator(1);
        let one = spec.one();
        let lhs = TensorElement::pure(&[&h, &one]);
        let rhs = TensorElement::embed(&h, 0, 2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_reverses_slots() {
        let spec = builtin::uso22(2);
        let t = TensorElement::pure(&[&spec.generator(0), &spec.generator(1)]);
        assert_eq!(t.flip(), TensorElement::pure(&[&spec.generator(1), &spec.generator(0)]));
    }

    #[test]
    fn slotwise_product_reorders_each_slot() {
        // (K (x) 1) * (P (x) 1) puts the K P rewrite in slot 0 only.
        let spec = builtin::uso22(2);
        let a = TensorElement::embed(&spec.generator(3), 0, 2);
        let b = TensorElement::embed(&spec.generator(2), 0, 2);
        let got = tensor_multiply_in(spec.bracket_map(), &a, &b).unwrap();
        let expect_elem = spec
            .multiply(&spec.generator(3), &spec.generator(2))
            .unwrap();
        assert_eq!(got, TensorElement::embed(&expect_elem, 0, 2));
    }

    #[test]
    fn lift_places_slots() {
        let spec = builtin::uso22(2);
        let t = TensorElement::pure(&[&spec.generator(1), &spec.generator(0)]);
        let lifted = t.lift((0, 2), 3);
        let one = spec.one();
        assert_eq!(
            lifted,
            TensorElement::pure(&[&spec.generator(1), &one, &spec.generator(0)])
        );
    }
}
