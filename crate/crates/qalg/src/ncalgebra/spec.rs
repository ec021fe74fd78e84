use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalars::{Rational, ScalarError, ScalarSeries};

use super::element::AlgebraElement;
use super::rewrite::{normal_order_word, BracketMap, Strategy};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("no bracket entry for generator pair ({hi}, {lo})")]
    MissingBracket { hi: usize, lo: usize },
    #[error("rewrite exceeded the iteration cap; the bracket table does not terminate")]
    IterationCap,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("bracket for ({0}, {1}) defined twice")]
    DuplicateBracket(String, String),
    #[error("bracket of a generator with itself is identically zero and may not be redefined")]
    SelfBracket(String),
    #[error("relabeling is not a permutation of the generator set: {0}")]
    BadRelabel(String),
    #[error("exponential needs every coefficient to carry tau: {0}")]
    ExpNeedsTau(String),
    #[error("expression lost truncation precision (needed order {needed}, got {got})")]
    InsufficientOrder { needed: u32, got: u32 },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A finitely generated algebra presentation: ordered generators (the PBW
/// order is the declaration order) plus a total table of normal-ordered
/// commutators. Instances are immutable; build them with [`SpecBuilder`].
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    name: String,
    generators: Vec<String>,
    order: u32,
    brackets: BracketMap,
}

impl AlgebraSpec {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn rank_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn generator(&self, rank: usize) -> AlgebraElement {
        AlgebraElement::generator(rank, self.ngens(), self.order)
    }

    pub fn generator_by_name(&self, name: &str) -> Result<AlgebraElement, AlgebraError> {
        let rank = self
            .rank_of(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        Ok(self.generator(rank))
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(self.ngens(), self.order)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.ngens(), self.order)
    }

    /// Stored normal-ordered commutator `[g_hi, g_lo]`, `hi > lo`.
    pub fn bracket(&self, hi: usize, lo: usize) -> &AlgebraElement {
        assert!(hi > lo, "bracket lookup wants hi > lo");
        self.brackets
            .get(&(lo, hi))
            .expect("complete spec has every generator pair")
    }

    pub(crate) fn bracket_map(&self) -> &BracketMap {
        &self.brackets
    }

    /// Pairs `(lo, hi)` in deterministic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.brackets.keys().copied()
    }

    /// Normal order an explicit word of generator ranks.
    pub fn normal_order(
        &self,
        word: &[usize],
        strategy: Strategy,
    ) -> Result<AlgebraElement, AlgebraError> {
        normal_order_word(
            &self.brackets,
            self.ngens(),
            word,
            ScalarSeries::one(self.order),
            strategy,
        )
    }

    pub fn multiply(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        multiply_in(&self.brackets, a, b)
    }

    pub fn commutator(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        Ok(&self.multiply(a, b)? - &self.multiply(b, a)?)
    }

    /// exp of an element whose coefficients all carry tau >= 1; the series
    /// terminates inside the truncation window.
    pub fn exp_element(&self, a: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        exp_in(&self.brackets, a)
    }

    /// Apply a simultaneous renaming of generators. Ranks (and therefore
    /// all tables and the PBW order) are untouched; only names move, so
    /// position `i` of the new spec may carry a different symbol.
    pub fn relabel_generators(
        &self,
        new_name: &str,
        swaps: &BTreeMap<String, String>,
    ) -> Result<AlgebraSpec, AlgebraError> {
        for (from, to) in swaps {
            if self.rank_of(from).is_none() {
                return Err(AlgebraError::BadRelabel(format!("`{from}` is not a generator")));
            }
            if self.rank_of(to).is_none() {
                return Err(AlgebraError::BadRelabel(format!("`{to}` is not a generator")));
            }
        }
        let generators: Vec<String> = self
            .generators
            .iter()
            .map(|g| swaps.get(g).cloned().unwrap_or_else(|| g.clone()))
            .collect();
        let mut seen = generators.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != generators.len() {
            return Err(AlgebraError::BadRelabel("renamed set has duplicates".into()));
        }
        Ok(AlgebraSpec {
            name: new_name.to_string(),
            generators,
            order: self.order,
            brackets: self.brackets.clone(),
        })
    }

    pub fn truncate(&self, order: u32) -> AlgebraSpec {
        assert!(order <= self.order, "cannot raise spec order");
        let brackets = self
            .brackets
            .iter()
            .map(|(k, v)| (*k, v.truncate(order)))
            .collect();
        AlgebraSpec {
            name: self.name.clone(),
            generators: self.generators.clone(),
            order,
            brackets,
        }
    }

    /// Classical specialization: drop every coefficient band that carries
    /// tau. The truncation order is kept so tables stay comparable.
    pub fn tau_zero(&self, name: &str) -> AlgebraSpec {
        let brackets = self
            .brackets
            .iter()
            .map(|(k, v)| (*k, v.map_coeffs(|_, c| c.tau_zero_part())))
            .collect();
        AlgebraSpec {
            name: name.to_string(),
            generators: self.generators.clone(),
            order: self.order,
            brackets,
        }
    }
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraSpec({}, gens [{}], order {})",
            self.name,
            self.generators.join(", "),
            self.order
        )
    }
}

pub(crate) fn multiply_in(
    table: &BracketMap,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement, AlgebraError> {
    assert_eq!(a.ngens(), b.ngens(), "generator arity mismatch");
    let ngens = a.ngens();
    let order = a.order().min(b.order());
    let mut out = AlgebraElement::zero(ngens, order);
    for (ma, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            let coeff = &ca.truncate(order) * &cb.truncate(order);
            if coeff.is_zero() {
                continue;
            }
            if let Some(m) = ma.concat_ordered(mb) {
                out.add_term(m, coeff);
            } else {
                let mut word = ma.letters();
                word.extend(mb.letters());
                let part = normal_order_word(table, ngens, &word, coeff, Strategy::Leftmost)?;
                out = &out + &part;
            }
        }
    }
    Ok(out)
}

pub(crate) fn exp_in(
    table: &BracketMap,
    a: &AlgebraElement,
) -> Result<AlgebraElement, AlgebraError> {
    match a.min_tau_order() {
        None => {}
        Some(0) => {
            let names: Vec<String> = (0..a.ngens()).map(|r| format!("g{r}")).collect();
            return Err(AlgebraError::ExpNeedsTau(a.display(&names)));
        }
        Some(_) => {}
    }
    let order = a.order();
    let mut out = AlgebraElement::one(a.ngens(), order);
    let mut power = AlgebraElement::one(a.ngens(), order);
    for k in 1..=order {
        power = multiply_in(table, &power, a)?;
        if power.is_zero() {
            break;
        }
        out = &out + &power.scale(&Rational::inv_factorial(k));
    }
    Ok(out)
}

/// Incremental construction of an [`AlgebraSpec`]. Expressions are built at
/// one order above the target so that a single division by tau still lands
/// exactly on the target window; `set_bracket` truncates on storage.
pub struct SpecBuilder {
    name: String,
    generators: Vec<String>,
    target_order: u32,
    work_order: u32,
    brackets: BracketMap,
}

impl SpecBuilder {
    pub fn new(name: &str, generators: &[&str], order: u32) -> Result<Self, AlgebraError> {
        let mut seen = std::collections::BTreeSet::new();
        for g in generators {
            if !seen.insert(*g) {
                return Err(AlgebraError::DuplicateGenerator(g.to_string()));
            }
        }
        Ok(SpecBuilder {
            name: name.to_string(),
            generators: generators.iter().map(|s| s.to_string()).collect(),
            target_order: order,
            work_order: order + 1,
            brackets: BTreeMap::new(),
        })
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn target_order(&self) -> u32 {
        self.target_order
    }

    pub fn work_order(&self) -> u32 {
        self.work_order
    }

    pub fn rank_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    /// Generator atom at the working order.
    pub fn gen(&self, name: &str) -> AlgebraElement {
        let rank = self.rank_of(name).expect("builder generator name");
        AlgebraElement::generator(rank, self.ngens(), self.work_order)
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(self.ngens(), self.work_order)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.ngens(), self.work_order)
    }

    /// Product using the table built so far; entries the product needs must
    /// already be set (dependency order matters when transcribing tables).
    pub fn mul(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        multiply_in(&self.brackets, a, b)
    }

    pub fn exp(&self, a: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        exp_in(&self.brackets, a)
    }

    /// exp(q * tau * X) for a named generator, the ubiquitous table entry.
    pub fn exp_tau_gen(&self, q: Rational, name: &str) -> AlgebraElement {
        self.exp(&self.gen(name).mul_tau_pow(1).scale(&q))
            .expect("tau-weighted generator exponential always converges")
    }

    /// Record `[a, b] = rhs`. Orientation is normalized to the stored
    /// `[g_hi, g_lo]` form, negating when the pair arrives low-high.
    pub fn set_bracket(
        &mut self,
        a: &str,
        b: &str,
        rhs: AlgebraElement,
    ) -> Result<(), AlgebraError> {
        let ra = self.rank_of(a)?;
        let rb = self.rank_of(b)?;
        if ra == rb {
            return Err(AlgebraError::SelfBracket(a.to_string()));
        }
        if rhs.order() < self.target_order {
            return Err(AlgebraError::InsufficientOrder {
                needed: self.target_order,
                got: rhs.order(),
            });
        }
        let (key, stored) = if ra > rb {
            ((rb, ra), rhs.truncate(self.target_order))
        } else {
            ((ra, rb), (-&rhs).truncate(self.target_order))
        };
        if self.brackets.contains_key(&key) {
            return Err(AlgebraError::DuplicateBracket(a.to_string(), b.to_string()));
        }
        self.brackets.insert(key, stored);
        Ok(())
    }

    pub fn has_pair(&self, lo: usize, hi: usize) -> bool {
        self.brackets.contains_key(&(lo, hi))
    }

    pub fn missing_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.ngens();
        let mut missing = Vec::new();
        for lo in 0..n {
            for hi in lo + 1..n {
                if !self.brackets.contains_key(&(lo, hi)) {
                    missing.push((lo, hi));
                }
            }
        }
        missing
    }

    /// Fill unset pairs with zero (commuting generators).
    pub fn default_missing_to_zero(&mut self) -> Vec<(usize, usize)> {
        let missing = self.missing_pairs();
        for &(lo, hi) in &missing {
            self.brackets
                .insert((lo, hi), AlgebraElement::zero(self.ngens(), self.target_order));
        }
        missing
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn build(self) -> Result<AlgebraSpec, AlgebraError> {
        if let Some(&(lo, hi)) = self.missing_pairs().first() {
            return Err(AlgebraError::MissingBracket { hi, lo });
        }
        Ok(AlgebraSpec {
            name: self.name,
            generators: self.generators,
            order: self.target_order,
            brackets: self.brackets,
        })
    }
}
