use super::element::AlgebraElement;
use super::spec::{AlgebraError, AlgebraSpec};

/// One Jacobi identity instance: the cyclic sum over an ordered generator
/// triple, which must vanish identically at the working truncation.
pub struct JacobiTriple {
    pub names: [String; 3],
    pub residual: AlgebraElement,
}

impl JacobiTriple {
    pub fn pass(&self) -> bool {
        self.residual.is_zero()
    }
}

/// `[[a,b],c] + [[c,a],b] + [[b,c],a]` for every i < j < k.
pub fn check_jacobi(spec: &AlgebraSpec) -> Result<Vec<JacobiTriple>, AlgebraError> {
    let n = spec.ngens();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (spec.generator(i), spec.generator(j), spec.generator(k));
                let ab_c = spec.commutator(&spec.commutator(&a, &b)?, &c)?;
                let ca_b = spec.commutator(&spec.commutator(&c, &a)?, &b)?;
                let bc_a = spec.commutator(&spec.commutator(&b, &c)?, &a)?;
                let residual = &(&ab_c + &ca_b) + &bc_a;
                out.push(JacobiTriple {
                    names: [
                        spec.generator_names()[i].clone(),
                        spec.generator_names()[j].clone(),
                        spec.generator_names()[k].clone(),
                    ],
                    residual,
                });
            }
        }
    }
    Ok(out)
}

/// Closure status of one generator pair inside a candidate subalgebra.
pub struct ClosurePair {
    pub names: (String, String),
    pub bracket: AlgebraElement,
    /// Display of the first bracket term using generators outside the span.
    pub violation: Option<String>,
}

pub struct ClosureReport {
    pub subset: Vec<String>,
    pub pairs: Vec<ClosurePair>,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.pairs.iter().all(|p| p.violation.is_none())
    }
}

/// Check whether the span of `subset` closes under the bracket.
pub fn subalgebra_closure(
    spec: &AlgebraSpec,
    subset: &[String],
) -> Result<ClosureReport, AlgebraError> {
    let mut ranks = Vec::with_capacity(subset.len());
    for name in subset {
        ranks.push(
            spec.rank_of(name)
                .ok_or_else(|| AlgebraError::UnknownGenerator(name.clone()))?,
        );
    }
    let mut pairs = Vec::new();
    for (ai, &ra) in ranks.iter().enumerate() {
        for &rb in &ranks[ai + 1..] {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            let bracket = spec.bracket(hi, lo).clone();
            let violation = bracket.first_term_outside(&ranks).map(|(m, c)| {
                format!(
                    "{} {}",
                    c,
                    m.display(spec.generator_names())
                )
            });
            pairs.push(ClosurePair {
                names: (
                    spec.generator_names()[hi].clone(),
                    spec.generator_names()[lo].clone(),
                ),
                bracket,
                violation,
            });
        }
    }
    Ok(ClosureReport { subset: subset.to_vec(), pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalgebra::builtin;

    #[test]
    fn classical_jacobi_holds() {
        for t in check_jacobi(&builtin::so22(2)).unwrap() {
            assert!(t.pass(), "triple {:?} fails: {:?}", t.names, t.residual);
        }
    }

    #[test]
    fn deformed_jacobi_holds_at_small_order() {
        for t in check_jacobi(&builtin::uso22(3)).unwrap() {
            assert!(t.pass(), "triple {:?} fails: {:?}", t.names, t.residual);
        }
    }

    #[test]
    fn a_broken_table_is_caught() {
        // Classical table with [K, P] corrupted from H to D: the (H, P, K)
        // triple no longer cancels.
        let mut b = crate::ncalgebra::SpecBuilder::new("broken", &builtin::GENERATORS, 2)
            .expect("builder");
        let spec = builtin::so22(2);
        for (lo, hi) in spec.pairs().collect::<Vec<_>>() {
            let names = spec.generator_names();
            let rhs = if (lo, hi) == (2, 3) { b.gen("D") } else { spec.bracket(hi, lo).clone() };
            b.set_bracket(&names[hi].clone(), &names[lo].clone(), rhs).expect("builder");
        }
        let broken = b.build().expect("builder");
        let failing: Vec<_> = check_jacobi(&broken)
            .unwrap()
            .into_iter()
            .filter(|t| !t.pass())
            .map(|t| t.names)
            .collect();
        assert!(failing.contains(&["H".into(), "P".into(), "K".into()]));
    }

    #[test]
    fn translations_close_but_sl2_line_also_closes() {
        let spec = builtin::uso22(3);
        let hpk: Vec<String> = ["H", "P", "K"].map(String::from).to_vec();
        assert!(subalgebra_closure(&spec, &hpk).unwrap().closed());
        let line: Vec<String> = ["D", "H", "C1"].map(String::from).to_vec();
        assert!(subalgebra_closure(&spec, &line).unwrap().closed());
        // {H, K} alone is not closed: [K, H] = e^{-tau H} P escapes.
        let hk: Vec<String> = ["H", "K"].map(String::from).to_vec();
        let report = subalgebra_closure(&spec, &hk).unwrap();
        assert!(!report.closed());
        let violation = report.pairs[0].violation.as_ref().unwrap();
        assert!(violation.contains('P'), "witness should name P: {violation}");
    }

    #[test]
    fn unknown_subset_member_errors() {
        let spec = builtin::so22(2);
        let bad: Vec<String> = ["H", "Q"].map(String::from).to_vec();
        assert!(matches!(
            subalgebra_closure(&spec, &bad),
            Err(AlgebraError::UnknownGenerator(_))
        ));
    }
}
