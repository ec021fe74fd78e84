use std::collections::BTreeMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::ncalgebra::{AlgebraElement, AlgebraError, AlgebraSpec, Monomial};
use crate::scalars::{Rational, ScalarSeries};

use super::antipode;
use super::tensor::{tensor_multiply_in, TensorElement};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HopfError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("coproduct table malformed: {0}")]
    BadCoproducts(String),
    #[error("antipode cofactor for `{generator}` is not invertible (constant part {part})")]
    CofactorNotInvertible { generator: String, part: String },
    #[error("antipode solve did not converge for `{generator}`; residual {residual}")]
    AntipodeDiverged { generator: String, residual: String },
    #[error("algebra `{0}` declares no universal R-matrix pair")]
    NoRMatrix(String),
}

/// An algebra presentation equipped with coalgebra data: one arity-2
/// coproduct per generator, scalar counits, and (optionally) the pair of
/// generator ranks `(a, b)` whose exponentials build the universal
/// R-matrix `exp(tau g_a (x) g_b) exp(-tau g_b (x) g_a)`.
///
/// The antipode is not stored: it is derived order by order from the
/// coproducts on first use and cached.
pub struct HopfSpec {
    algebra: AlgebraSpec,
    coproducts: Vec<TensorElement>,
    counits: Vec<Rational>,
    rmatrix_pair: Option<(usize, usize)>,
    antipodes: OnceLock<Result<Vec<AlgebraElement>, HopfError>>,
}

impl Clone for HopfSpec {
    fn clone(&self) -> Self {
        HopfSpec {
            algebra: self.algebra.clone(),
            coproducts: self.coproducts.clone(),
            counits: self.counits.clone(),
            rmatrix_pair: self.rmatrix_pair,
            antipodes: OnceLock::new(),
        }
    }
}

impl PartialEq for HopfSpec {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.coproducts == other.coproducts
            && self.counits == other.counits
            && self.rmatrix_pair == other.rmatrix_pair
    }
}

impl HopfSpec {
    pub fn new(
        algebra: AlgebraSpec,
        coproducts: Vec<TensorElement>,
        counits: Vec<Rational>,
        rmatrix_pair: Option<(usize, usize)>,
    ) -> Result<Self, HopfError> {
        let n = algebra.ngens();
        if coproducts.len() != n {
            return Err(HopfError::BadCoproducts(format!(
                "expected {} coproducts, got {}",
                n,
                coproducts.len()
            )));
        }
        if counits.len() != n {
            return Err(HopfError::BadCoproducts(format!(
                "expected {} counit values, got {}",
                n,
                counits.len()
            )));
        }
        for (r, t) in coproducts.iter().enumerate() {
            if t.arity() != 2 || t.ngens() != n {
                return Err(HopfError::BadCoproducts(format!(
                    "coproduct of `{}` has arity {} over {} generators",
                    algebra.generator_names()[r],
                    t.arity(),
                    t.ngens()
                )));
            }
        }
        if let Some((a, b)) = rmatrix_pair {
            if a >= n || b >= n || a == b {
                return Err(HopfError::BadCoproducts("R-matrix pair out of range".into()));
            }
        }
        Ok(HopfSpec { algebra, coproducts, counits, rmatrix_pair, antipodes: OnceLock::new() })
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        &self.algebra
    }

    pub fn order(&self) -> u32 {
        self.algebra.order()
    }

    pub fn ngens(&self) -> usize {
        self.algebra.ngens()
    }

    pub fn rmatrix_pair(&self) -> Option<(usize, usize)> {
        self.rmatrix_pair
    }

    pub fn coproduct_of_rank(&self, rank: usize) -> &TensorElement {
        &self.coproducts[rank]
    }

    pub fn counit_of_rank(&self, rank: usize) -> &Rational {
        &self.counits[rank]
    }

    pub fn tensor_multiply(
        &self,
        a: &TensorElement,
        b: &TensorElement,
    ) -> Result<TensorElement, HopfError> {
        Ok(tensor_multiply_in(self.algebra.bracket_map(), a, b)?)
    }

    pub fn tensor_commutator(
        &self,
        a: &TensorElement,
        b: &TensorElement,
    ) -> Result<TensorElement, HopfError> {
        Ok(&self.tensor_multiply(a, b)? - &self.tensor_multiply(b, a)?)
    }

    pub fn tensor_exp(&self, a: &TensorElement) -> Result<TensorElement, HopfError> {
        Ok(super::tensor::tensor_exp_in(self.algebra.bracket_map(), a)?)
    }

    /// The coproduct of a normal-ordered monomial: the slotwise product of
    /// the generator coproducts along its letters.
    pub fn coproduct_of_monomial(&self, m: &Monomial) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::one(self.ngens(), 2, self.order());
        for rank in m.letters() {
            out = self.tensor_multiply(&out, &self.coproducts[rank])?;
        }
        Ok(out)
    }

    /// Algebra-morphism extension of the coproduct to any element.
    pub fn coproduct(&self, elem: &AlgebraElement) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero(self.ngens(), 2, elem.order().min(self.order()));
        for (m, c) in elem.iter() {
            let dm = self.coproduct_of_monomial(m)?;
            out = &out + &dm.scale_series(c);
        }
        Ok(out)
    }

    /// The opposite coproduct (slots flipped).
    pub fn coproduct_op(&self, elem: &AlgebraElement) -> Result<TensorElement, HopfError> {
        Ok(self.coproduct(elem)?.flip())
    }

    /// Counit extended as an algebra morphism: products map to products of
    /// the generator counits.
    pub fn counit(&self, elem: &AlgebraElement) -> ScalarSeries {
        let mut out = ScalarSeries::zero(elem.order());
        for (m, c) in elem.iter() {
            let mut factor = Rational::one();
            for rank in m.letters() {
                factor = &factor * &self.counits[rank];
                if factor.is_zero() {
                    break;
                }
            }
            if !factor.is_zero() {
                out = &out + &c.scale(&factor);
            }
        }
        out
    }

    /// Apply the counit to one slot of a tensor, shrinking its arity.
    pub fn counit_slot(&self, t: &TensorElement, slot: usize) -> TensorElement {
        let mut out = TensorElement::zero(t.ngens(), t.arity() - 1, t.order());
        for (slots, c) in t.iter() {
            let mut factor = Rational::one();
            for rank in slots[slot].letters() {
                factor = &factor * &self.counits[rank];
                if factor.is_zero() {
                    break;
                }
            }
            if factor.is_zero() {
                continue;
            }
            let mut rest: Vec<Monomial> = slots.clone();
            rest.remove(slot);
            out.add_term(rest, c.scale(&factor));
        }
        out
    }

    /// Apply the coproduct to one slot of a tensor, growing its arity.
    pub fn coproduct_slot(
        &self,
        t: &TensorElement,
        slot: usize,
    ) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero(t.ngens(), t.arity() + 1, t.order());
        for (slots, c) in t.iter() {
            let dm = self.coproduct_of_monomial(&slots[slot])?;
            for (pair, dc) in dm.iter() {
                let o = c.order().min(dc.order());
                let coeff = &c.truncate(o) * &dc.truncate(o);
                if coeff.is_zero() {
                    continue;
                }
                let mut grown = Vec::with_capacity(slots.len() + 1);
                grown.extend_from_slice(&slots[..slot]);
                grown.push(pair[0].clone());
                grown.push(pair[1].clone());
                grown.extend_from_slice(&slots[slot + 1..]);
                out.add_term(grown, coeff);
            }
        }
        Ok(out)
    }

    /// Generator antipodes, derived on first use by solving
    /// m(S (x) id) Delta(X) = counit(X) 1 order by order.
    pub fn antipode_table(&self) -> Result<&Vec<AlgebraElement>, HopfError> {
        self.antipodes
            .get_or_init(|| antipode::derive(self))
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// Anti-morphism extension of the antipode: letters reverse.
    pub fn antipode(&self, elem: &AlgebraElement) -> Result<AlgebraElement, HopfError> {
        let table = self.antipode_table()?;
        let mut out = AlgebraElement::zero(elem.ngens(), elem.order().min(self.order()));
        for (m, c) in elem.iter() {
            let mut product = AlgebraElement::one(elem.ngens(), self.order());
            for rank in m.letters().into_iter().rev() {
                product = self.algebra.multiply(&product, &table[rank])?;
            }
            out = &out + &product.scale_series(c);
        }
        Ok(out)
    }

    /// Rename generators without moving ranks; all structural data is
    /// rank-indexed so tables carry over verbatim.
    pub fn relabel(
        &self,
        new_name: &str,
        swaps: &BTreeMap<String, String>,
    ) -> Result<HopfSpec, HopfError> {
        let algebra = self.algebra.relabel_generators(new_name, swaps)?;
        Ok(HopfSpec {
            algebra,
            coproducts: self.coproducts.clone(),
            counits: self.counits.clone(),
            rmatrix_pair: self.rmatrix_pair,
            antipodes: OnceLock::new(),
        })
    }
}

impl std::fmt::Debug for HopfSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HopfSpec({:?})", self.algebra)
    }
}
