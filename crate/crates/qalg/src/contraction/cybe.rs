use std::collections::BTreeMap;

use super::ContractionError;
use crate::ncalgebra::AlgebraSpec;
use crate::scalars::Rational;

/// Structure constants of a linear bracket table: f[(a, b)] lists the
/// (rank, coefficient) entries of [g_a, g_b] for a > b. The table must
/// be free of the deformation parameter and of higher words.
#[derive(Debug)]
pub struct StructureConstants {
    ngens: usize,
    f: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl StructureConstants {
    pub fn extract(spec: &AlgebraSpec) -> Result<Self, ContractionError> {
        let names = spec.generator_names();
        let mut f = BTreeMap::new();
        for (lo, hi) in spec.pairs() {
            let rhs = spec.bracket(hi, lo);
            let mut entries = Vec::new();
            for (m, c) in rhs.iter() {
                let linear = m.degree() == 1;
                let constant_coeff = c.iter().all(|(t, e, _)| t == 0 && e == 0);
                if !linear || !constant_coeff {
                    return Err(ContractionError::NotLinear {
                        a: names[hi].clone(),
                        b: names[lo].clone(),
                        detail: rhs.display(names),
                    });
                }
                let rank = m.support().next().expect("degree-one word has a letter");
                entries.push((rank, c.coeff(0, 0)));
            }
            f.insert((hi, lo), entries);
        }
        Ok(StructureConstants { ngens: spec.ngens(), f })
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// [g_a, g_b] for any orientation, using antisymmetry.
    pub fn bracket(&self, a: usize, b: usize) -> Vec<(usize, Rational)> {
        if a == b {
            return Vec::new();
        }
        if a > b {
            self.f.get(&(a, b)).cloned().unwrap_or_default()
        } else {
            self.f
                .get(&(b, a))
                .map(|v| v.iter().map(|(r, q)| (*r, -q)).collect())
                .unwrap_or_default()
        }
    }
}

/// An antisymmetric two-tensor Sum q (g_a (x) g_b - g_b (x) g_a) given
/// by its wedge terms.
#[derive(Clone, Debug)]
pub struct WedgePair(pub Vec<(usize, usize, Rational)>);

impl WedgePair {
    /// g_a wedge g_b.
    pub fn simple(a: usize, b: usize) -> Self {
        WedgePair(vec![(a, b, Rational::one())])
    }

    /// Expand the wedges into plain (first, second, coeff) tensor terms.
    fn tensor_terms(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for (a, b, q) in &self.0 {
            out.push((*a, *b, q.clone()));
            out.push((*b, *a, -q));
        }
        out
    }
}

/// A three-slot tensor with basis-vector slots, as produced by the
/// Schouten bracket of two wedge pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleTensor {
    terms: BTreeMap<(usize, usize, usize), Rational>,
}

impl TripleTensor {
    pub fn zero() -> Self {
        TripleTensor { terms: BTreeMap::new() }
    }

    fn add(&mut self, key: (usize, usize, usize), q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += &q;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&(a, b, c), q) in &self.terms {
            parts.push(format!("{} {} (x) {} (x) {}", q, names[a], names[b], names[c]));
        }
        parts.join(" + ")
    }
}

/// Schouten bracket [[r, r]] of an antisymmetric two-tensor with itself:
/// the obstruction whose vanishing is the classical Yang-Baxter
/// equation. Computed from structure constants as
/// [r12, r13] + [r12, r23] + [r13, r23].
pub fn schouten_square(f: &StructureConstants, r: &WedgePair) -> TripleTensor {
    let terms = r.tensor_terms();
    let mut out = TripleTensor::zero();
    for (a, b, qab) in &terms {
        for (c, d, qcd) in &terms {
            let q = qab * qcd;
            // [r12, r13]: bracket in slot 1
            for (x, fx) in f.bracket(*a, *c) {
                out.add((x, *b, *d), &q * &fx);
            }
            // [r12, r23]: bracket in slot 2
            for (x, fx) in f.bracket(*b, *c) {
                out.add((*a, x, *d), &q * &fx);
            }
            // [r13, r23]: bracket in slot 3
            for (x, fx) in f.bracket(*b, *d) {
                out.add((*a, *c, x), &q * &fx);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalgebra::builtin;

    #[test]
    fn deformation_direction_solves_the_classical_equation() {
        // The wedge of time translation with dilation squares to zero
        // under the Schouten bracket.
        let spec = builtin::so22(2);
        let f = StructureConstants::extract(&spec).unwrap();
        let r = WedgePair::simple(1, 0);
        let got = schouten_square(&f, &r);
        assert!(got.is_zero(), "{}", got.display(spec.generator_names()));
    }

    #[test]
    fn a_generic_wedge_fails_the_classical_equation() {
        // K wedge C1 has [K, C1] = C2 feeding back into the square.
        let spec = builtin::so22(2);
        let f = StructureConstants::extract(&spec).unwrap();
        let r = WedgePair::simple(3, 4);
        let got = schouten_square(&f, &r);
        assert!(!got.is_zero());
        let shown = got.display(spec.generator_names());
        assert!(shown.contains("C2"), "witness should involve C2: {shown}");
    }

    #[test]
    fn deformed_tables_are_rejected() {
        let spec = builtin::uso22(2);
        match StructureConstants::extract(&spec) {
            Err(ContractionError::NotLinear { .. }) => {}
            other => panic!("expected linearity rejection, got {other:?}"),
        }
    }
}
