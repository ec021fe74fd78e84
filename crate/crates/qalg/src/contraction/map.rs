use super::ContractionError;
use crate::hopf::{HopfSpec, TensorElement};
use crate::ncalgebra::{AlgebraElement, AlgebraSpec, Monomial, SpecBuilder};

/// A generator-rescaling limit: generator r is multiplied by eps^{k_r}
/// and the deformation parameter by eps^{tau_power}, after which
/// eps -> 0. Surviving structure defines the contracted algebra;
/// negative eps powers mean the limit does not exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    scales: Vec<i32>,
    tau_power: i32,
}

impl ContractionMap {
    pub fn new(scales: Vec<i32>, tau_power: i32) -> Self {
        ContractionMap { scales, tau_power }
    }

    /// The flat-limit map for the six-generator table: time translation,
    /// boost and the first conformal generator are rescaled, and the
    /// deformation parameter absorbs one power of eps.
    pub fn poincare() -> Self {
        ContractionMap { scales: vec![0, 1, 0, 1, 1, 0], tau_power: 1 }
    }

    /// The degenerate map rescaling nothing but the parameter: its limit
    /// is the undeformed algebra.
    pub fn classical_limit(ngens: usize) -> Self {
        ContractionMap { scales: vec![0; ngens], tau_power: 1 }
    }

    /// Same generator scales but the parameter is left alone.
    pub fn without_param_rescale(&self) -> Self {
        ContractionMap { scales: self.scales.clone(), tau_power: 0 }
    }

    pub fn scales(&self) -> &[i32] {
        &self.scales
    }

    pub fn tau_power(&self) -> i32 {
        self.tau_power
    }

    pub fn scale_of(&self, rank: usize) -> i32 {
        self.scales[rank]
    }

    fn check_ngens(&self, ngens: usize) -> Result<(), ContractionError> {
        if self.scales.len() != ngens {
            return Err(ContractionError::ScaleCount { expected: ngens, got: self.scales.len() });
        }
        Ok(())
    }

    fn weight(&self, m: &Monomial) -> i32 {
        m.exponents().iter().zip(&self.scales).map(|(&e, &k)| e as i32 * k).sum()
    }

    /// Rewrite an element in the rescaled variables. `extra` is the eps
    /// power the context supplies (the scales of the bracket's own
    /// generators, or of the coproduct's). No limit is taken yet.
    pub fn dress_element(
        &self,
        elem: &AlgebraElement,
        extra: i32,
    ) -> Result<AlgebraElement, ContractionError> {
        self.check_ngens(elem.ngens())?;
        let mut out = AlgebraElement::zero(elem.ngens(), elem.order());
        for (m, c) in elem.iter() {
            let shift = extra - self.weight(m);
            out.add_term(m.clone(), c.subst_tau_eps(self.tau_power).mul_eps_pow(shift));
        }
        Ok(out)
    }

    pub fn dress_tensor(
        &self,
        t: &TensorElement,
        extra: i32,
    ) -> Result<TensorElement, ContractionError> {
        self.check_ngens(t.ngens())?;
        let mut out = TensorElement::zero(t.ngens(), t.arity(), t.order());
        for (slots, c) in t.iter() {
            let shift = extra - slots.iter().map(|m| self.weight(m)).sum::<i32>();
            out.add_term(slots.clone(), c.subst_tau_eps(self.tau_power).mul_eps_pow(shift));
        }
        Ok(out)
    }

    /// Dress and take the eps -> 0 limit; `context` labels the
    /// divergence report.
    pub fn contract_element(
        &self,
        elem: &AlgebraElement,
        extra: i32,
        context: &str,
    ) -> Result<AlgebraElement, ContractionError> {
        let dressed = self.dress_element(elem, extra)?;
        let mut out = AlgebraElement::zero(elem.ngens(), elem.order());
        for (m, c) in dressed.iter() {
            let lim = c.eps_limit().map_err(|d| ContractionError::Diverges {
                context: context.to_string(),
                detail: d.to_string(),
            })?;
            out.add_term(m.clone(), lim);
        }
        Ok(out)
    }

    pub fn contract_tensor(
        &self,
        t: &TensorElement,
        extra: i32,
        context: &str,
    ) -> Result<TensorElement, ContractionError> {
        let dressed = self.dress_tensor(t, extra)?;
        let mut out = TensorElement::zero(t.ngens(), t.arity(), t.order());
        for (slots, c) in dressed.iter() {
            let lim = c.eps_limit().map_err(|d| ContractionError::Diverges {
                context: context.to_string(),
                detail: d.to_string(),
            })?;
            out.add_term(slots.clone(), lim);
        }
        Ok(out)
    }

    /// Contract a stored bracket: the left side [g_hi, g_lo] carries the
    /// two generators' scales, so the right side is shifted by their sum
    /// before the limit.
    pub fn contract_bracket(
        &self,
        spec: &AlgebraSpec,
        hi: usize,
        lo: usize,
    ) -> Result<AlgebraElement, ContractionError> {
        self.check_ngens(spec.ngens())?;
        let extra = self.scales[hi] + self.scales[lo];
        let names = spec.generator_names();
        let context = format!("[{}, {}]", names[hi], names[lo]);
        self.contract_element(spec.bracket(hi, lo), extra, &context)
    }
}

/// Contract every bracket of a table and assemble the limit algebra.
pub fn contract_spec(
    map: &ContractionMap,
    spec: &AlgebraSpec,
    name: &str,
) -> Result<AlgebraSpec, ContractionError> {
    let names: Vec<&str> = spec.generator_names().iter().map(|s| s.as_str()).collect();
    let mut b = SpecBuilder::new(name, &names, spec.order())?;
    for (lo, hi) in spec.pairs() {
        let rhs = map.contract_bracket(spec, hi, lo)?;
        b.set_bracket(names[hi], names[lo], rhs)?;
    }
    Ok(b.build()?)
}

/// Contract a Hopf structure: brackets, coproducts (shifted by their
/// generator's scale) and the R-matrix pair carry over to the limit.
pub fn contract_hopf(
    map: &ContractionMap,
    hopf: &HopfSpec,
    name: &str,
) -> Result<HopfSpec, ContractionError> {
    let spec = contract_spec(map, hopf.algebra(), name)?;
    let names = hopf.algebra().generator_names();
    let mut coproducts = Vec::with_capacity(hopf.ngens());
    for (r, name) in names.iter().enumerate() {
        let context = format!("coproduct of {name}");
        coproducts.push(map.contract_tensor(
            hopf.coproduct_of_rank(r),
            map.scale_of(r),
            &context,
        )?);
    }
    let counits = (0..hopf.ngens()).map(|r| hopf.counit_of_rank(r).clone()).collect();
    Ok(HopfSpec::new(spec, coproducts, counits, hopf.rmatrix_pair())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf;
    use crate::ncalgebra::builtin;

    #[test]
    fn boost_translation_bracket_vanishes_in_the_limit() {
        // [K, H] = (shift series) P has every term suppressed by eps^2
        // against bands that only restore one power each.
        let spec = builtin::uso22(4);
        let map = ContractionMap::poincare();
        let got = map.contract_bracket(&spec, 3, 1).unwrap();
        assert!(got.is_zero(), "got {}", got.display(spec.generator_names()));
    }

    #[test]
    fn discrete_translation_bracket_survives_exactly() {
        // [K, P] keeps its whole series: each tau band gains exactly the
        // eps it loses through the rescaled generator.
        let spec = builtin::uso22(4);
        let map = ContractionMap::poincare();
        let got = map.contract_bracket(&spec, 3, 2).unwrap();
        assert_eq!(&got, spec.bracket(3, 2));
    }

    #[test]
    fn without_param_rescale_the_limit_diverges() {
        let spec = builtin::uso22(4);
        let map = ContractionMap::poincare().without_param_rescale();
        match map.contract_bracket(&spec, 3, 1) {
            Err(ContractionError::Diverges { context, .. }) => {
                assert_eq!(context, "[K, H]");
            }
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_map_reaches_the_undeformed_table() {
        let spec = builtin::uso22(3);
        let map = ContractionMap::classical_limit(6);
        let got = contract_spec(&map, &spec, "flat").unwrap();
        assert_eq!(got, spec.tau_zero("flat"));
    }

    #[test]
    fn contracted_hopf_matches_the_stored_target() {
        let src = hopf::builtin::uso22(4);
        let map = ContractionMap::poincare();
        let got = contract_hopf(&map, &src, "uiso21").unwrap();
        assert_eq!(got, hopf::builtin::uiso21(4));
    }

    #[test]
    fn scale_vector_length_is_enforced() {
        let spec = builtin::usl2(2);
        let map = ContractionMap::poincare();
        match contract_spec(&map, &spec, "x") {
            Err(ContractionError::ScaleCount { expected: 3, got: 6 }) => {}
            other => panic!("expected scale count error, got {other:?}"),
        }
    }
}
